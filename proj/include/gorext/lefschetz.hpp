/*
   Copyright 2026 The gorext authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GOREXT_LEFSCHETZ_HPP
#define GOREXT_LEFSCHETZ_HPP

#include "gorext/extension.hpp"

namespace gorext {

/// Weakly decreasing positive parts; |P| = dim_k A for a Jordan type on A.
using Partition = std::vector<int>;

std::string partition_to_string(const Partition& p);
Partition conjugate(const Partition& p);  // Young-diagram transpose
/// Hilbert function viewed as a partition (sorted descending), conjugated.
Partition conjugate(const HilbertFunction& h);

/// Jordan type of multiplication by ell (order >= 1, possibly
/// non-homogeneous) on A: block counts from the rank sequence of powers.
Partition jordan_type(const ArtinianAlgebra& a, const Poly& ell);

struct SLResult {
    enum class Verdict { yes, no, vacuous_no };
    Verdict verdict = Verdict::no;
    std::optional<Poly> witness;   // concrete strong Lefschetz element (yes)
    Partition expected;            // H(A)^vee
    Partition generic_type;        // Jordan type of the generic linear form
    bool sampled_only = false;     // F_p mode: no generic-rank certificate
    int failing_power = 0;         // first s with generic rank below expected
    std::string detail;
};

/// Strong Lefschetz decision for ell in A_1 (weight-1 variables only).
/// Positive verdicts carry a sampled witness re-verified exactly; negative
/// verdicts over the rationals carry the function-field generic-rank
/// certificate.  Over F_p only sampled verdicts are possible.
SLResult is_strong_lefschetz(const ArtinianAlgebra& a);

bool has_sljt_element(const ArtinianAlgebra& a, const Poly& ell);

}  // namespace gorext

#endif
