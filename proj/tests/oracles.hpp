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

// Test-only independent oracles and random generators.  Everything here
// stays off the implementation paths it is used to check.

#ifndef GOREXT_TESTS_ORACLES_HPP
#define GOREXT_TESTS_ORACLES_HPP

#include <random>

#include "gorext/duality.hpp"

namespace gorext::testing {

inline Scalar small_scalar(const FieldSpec& f, std::mt19937& rng, int lo = -4, int hi = 4) {
    std::uniform_int_distribution<int> d(lo, hi);
    return Scalar(f, d(rng));
}

/// Random homogeneous dual polynomial of the given weighted degree (possibly
/// zero when allow_zero).
inline DualPoly random_dual(const RingPtr& ring, int degree, std::mt19937& rng,
                            bool allow_zero = false, double density = 0.6) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        DualPoly p(ring);
        for (const Monomial& m : ring->monomial_basis(degree)) {
            if (u(rng) <= density) p.add_term(m, small_scalar(ring->field(), rng));
        }
        if (!p.is_zero() || allow_zero) return p;
    }
    // fall back to a single monomial so callers always get something nonzero
    auto basis = ring->monomial_basis(degree);
    if (basis.empty()) return DualPoly(ring);
    return DualPoly::monomial(ring, basis.front(), Scalar::one(ring->field()));
}

inline Poly random_poly(const RingPtr& ring, int degree, std::mt19937& rng,
                        bool allow_zero = false, double density = 0.6) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly p(ring);
        for (const Monomial& m : ring->monomial_basis(degree)) {
            if (u(rng) <= density) p.add_term(m, small_scalar(ring->field(), rng));
        }
        if (!p.is_zero() || allow_zero) return p;
    }
    auto basis = ring->monomial_basis(degree);
    if (basis.empty()) return Poly(ring);
    return Poly::monomial(ring, basis.front(), Scalar::one(ring->field()));
}

/// Reduction-based colon oracle: f is in (I:J)_d iff for every generator g
/// the product f*g reduces to zero against the stored basis of I_{d+deg g}.
/// Independent of GradedIdeal::colon, which assembles left-null-space
/// functionals instead.
inline VecSpace colon_piece_oracle(const GradedIdeal& ideal, std::span<const Poly> j_gens,
                                   int d) {
    const RingPtr& ring = ideal.ring();
    const FieldSpec& field = ring->field();
    auto cols = ring->monomial_basis(d);
    VecSpace out(cols.size(), field);
    if (cols.empty()) return out;
    std::vector<std::vector<Scalar>> rows_for_cols(cols.size());
    size_t total_len = 0;
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<Scalar> stacked;
        for (const Poly& g : j_gens) {
            if (g.is_zero()) continue;
            int target = d + g.degree();
            if (ideal.is_full_piece(target)) continue;
            auto tb = ring->monomial_basis(target);
            Poly prod = Poly::monomial(ring, cols[c], Scalar::one(field)) * g;
            auto rem = ideal.piece(target).reduce(coordinates(prod, tb));
            stacked.insert(stacked.end(), rem.begin(), rem.end());
        }
        total_len = stacked.size();
        rows_for_cols[c] = std::move(stacked);
    }
    if (total_len == 0) {
        for (size_t c = 0; c < cols.size(); ++c) {
            std::vector<Scalar> v(cols.size(), Scalar::zero(field));
            v[c] = Scalar::one(field);
            out.insert(std::move(v));
        }
        return out;
    }
    Matrix m(total_len, cols.size(), field);
    for (size_t c = 0; c < cols.size(); ++c) {
        for (size_t r = 0; r < total_len; ++r) m.at(r, c) = rows_for_cols[c][r];
    }
    for (auto& v : kernel_basis(m)) out.insert(std::move(v));
    return out;
}

/// Degree-wise intersection of annihilators, as a check on
/// annihilator_of_set: intersect the kernels by solving the joint
/// containment with a doubled-ambient trick.
inline VecSpace intersect_spaces(const VecSpace& a, const VecSpace& b) {
    // rows spanning a ∩ b: solve x in a with x in b via kernel of the stacked
    // "membership residual" maps
    const FieldSpec& f = a.field();
    size_t n = a.ambient();
    std::vector<std::vector<Scalar>> rows;
    // x = sum c_i a_i must reduce to zero against b
    const auto& abasis = a.basis_rows();
    std::vector<std::vector<Scalar>> residuals;
    for (const auto& row : abasis) residuals.push_back(b.reduce(row));
    Matrix m(n, abasis.size(), f);
    for (size_t c = 0; c < abasis.size(); ++c) {
        for (size_t r = 0; r < n; ++r) m.at(r, c) = residuals[c][r];
    }
    VecSpace out(n, f);
    for (const auto& combo : kernel_basis(m)) {
        std::vector<Scalar> x(n, Scalar::zero(f));
        for (size_t i = 0; i < combo.size(); ++i) {
            if (combo[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) x[j] += combo[i] * abasis[i][j];
        }
        out.insert(std::move(x));
    }
    return out;
}

}  // namespace gorext::testing

#endif
