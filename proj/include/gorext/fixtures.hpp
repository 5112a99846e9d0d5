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

#ifndef GOREXT_FIXTURES_HPP
#define GOREXT_FIXTURES_HPP

#include "gorext/extension.hpp"

namespace gorext {

/// e_i(x_1..x_r) over all ring variables.
Poly elementary_symmetric(RingPtr ring, int i);
/// e_i evaluated at the m-th powers x_1^m..x_r^m.
Poly powered_elementary(RingPtr ring, int i, int m);
/// E_i in the dual variables (square-free, so divided powers behave plainly).
DualPoly dual_elementary_symmetric(RingPtr ring, int i);

/// prod_{i<j} (X_i - X_j) over all ring variables, in divided powers.
DualPoly vandermonde_dual(RingPtr ring);
/// prod_{i<j} (X_i^[m] - X_j^[m]).
DualPoly powered_vandermonde_dual(RingPtr ring, int m);

/// An invariant-theory worked example packaged with its expected values.
struct CoinvariantCase {
    std::string name;
    ExtensionInput input;
    HilbertFunction expect_hb;
    HilbertFunction expect_hc;
    int expect_dim_c = 0;
    bool expect_free = true;
    bool expect_sufficient = false;  // these families all violate the sufficient conditions
    std::string note;
};

/// W = S_n over K = S_{n-1}: C the S_n coinvariant ring, F the Vandermonde
/// with X_n = T, A = k[t]/(t^n).  Supported for 2 <= n <= 5.
CoinvariantCase coinvariant_sym(int n, FieldSpec field = FieldSpec::rationals());

/// W = G(m,p,n) over K = G(m,p',n) with p | p' | m: three explicit
/// cases (2,1->2,2), (3,1->3,3), (4,1->2,2).
CoinvariantCase coinvariant_gmpn(int m, int p, int p_prime, int n,
                                 FieldSpec field = FieldSpec::rationals());

}  // namespace gorext

#endif
