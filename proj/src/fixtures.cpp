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

#include "gorext/fixtures.hpp"

#include <stdexcept>

namespace gorext {

namespace {

void require_range(int i, size_t nvars) {
    if (i < 1 || static_cast<size_t>(i) > nvars) {
        throw std::invalid_argument("elementary symmetric index out of range");
    }
}

// all i-subsets of the variables, exponent m each
template <class P>
P symmetric_sum(RingPtr ring, int i, int m) {
    const FieldSpec& f = ring->field();
    P out(ring);
    size_t n = ring->var_count();
    std::vector<size_t> idx(i);
    auto rec = [&](auto&& self, size_t start, int depth) -> void {
        if (depth == i) {
            Monomial mono(n);
            for (int k = 0; k < i; ++k) mono.exps[idx[k]] = m;
            out.add_term(mono, Scalar::one(f));
            return;
        }
        for (size_t v = start; v + (i - depth) <= n; ++v) {
            idx[depth] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

HilbertFunction q_factorial_hilbert(int n) {
    // prod_{i=2..n} (1 + q + ... + q^{i-1})
    std::vector<int> h{1};
    for (int i = 2; i <= n; ++i) {
        std::vector<int> factor(i, 1);
        HilbertFunction a{std::vector<int>(h)};
        HilbertFunction b{std::move(factor)};
        h = tensor_hilbert(a, b).values();
    }
    return HilbertFunction(std::move(h));
}

}  // namespace

Poly elementary_symmetric(RingPtr ring, int i) {
    require_range(i, ring->var_count());
    return symmetric_sum<Poly>(std::move(ring), i, 1);
}

Poly powered_elementary(RingPtr ring, int i, int m) {
    require_range(i, ring->var_count());
    if (m < 1) throw std::invalid_argument("power must be >= 1");
    return symmetric_sum<Poly>(std::move(ring), i, m);
}

DualPoly dual_elementary_symmetric(RingPtr ring, int i) {
    require_range(i, ring->var_count());
    return symmetric_sum<DualPoly>(std::move(ring), i, 1);
}

DualPoly vandermonde_dual(RingPtr ring) { return powered_vandermonde_dual(std::move(ring), 1); }

DualPoly powered_vandermonde_dual(RingPtr ring, int m) {
    size_t n = ring->var_count();
    if (n < 2) throw std::invalid_argument("Vandermonde needs at least two variables");
    const FieldSpec& f = ring->field();
    DualPoly out = DualPoly::constant(ring, Scalar::one(f));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Monomial mi(n), mj(n);
            mi.exps[i] = m;
            mj.exps[j] = m;
            DualPoly factor = DualPoly::monomial(ring, mi, Scalar::one(f)) -
                              DualPoly::monomial(ring, mj, Scalar::one(f));
            out = out * factor;
        }
    }
    return out;
}

CoinvariantCase coinvariant_sym(int n, FieldSpec field) {
    if (n < 2 || n > 5) throw std::invalid_argument("coinvariant_sym supports 2 <= n <= 5");
    std::vector<std::string> names;
    for (int i = 1; i < n; ++i) names.push_back("x" + std::to_string(i));
    RingPtr r = RingSpec::make(names, std::vector<int>(names.size(), 1), field, false);
    RingPtr s = r->with_t(1);
    DualPoly fc = vandermonde_dual(s);
    CoinvariantCase out{
        "S" + std::to_string(n) + "/S" + std::to_string(n - 1),
        expand_in_t(fc),
        q_factorial_hilbert(n - 1),
        q_factorial_hilbert(n),
        1,
        true,
        false,
        "Vandermonde dual generator with X_n = T; the coefficient forms come out as "
        "(-1)^i E_{i,n-1} times F_B with a common scalar from the divided-power expansion"};
    for (int i = 2; i <= n; ++i) out.expect_dim_c *= i;
    return out;
}

namespace {

// The top T^[0]-coefficient is the dual socle generator F_C of the
// coinvariant ring itself; the chain C_{i-1} = iota(t) ∘ C_i then makes
// t - iota(t) annihilate the assembled F.  Going up in T-power is
// contraction by iota(t), so relative scalars between the G_i are forced.
ExtensionInput chain_input(RingPtr r, int n, int t_weight, const DualPoly& top,
                           const Poly& iota_t) {
    std::vector<DualPoly> forms{top};
    for (int i = 1; i <= n - 1; ++i) forms.push_back(contract(iota_t, forms.back()));
    std::reverse(forms.begin(), forms.end());  // forms[0] ∝ F_B
    ExtensionInput in{std::move(r), n, t_weight, forms.front(),
                      std::vector<DualPoly>(forms.begin() + 1, forms.end())};
    return in;
}

}  // namespace

CoinvariantCase coinvariant_gmpn(int m, int p, int p_prime, int n, FieldSpec field) {
    if (m == 2 && p == 1 && p_prime == 2 && n == 2) {
        RingPtr r = RingSpec::make({"x", "y"}, {1, 1}, field, false);
        DualPoly fb = DualPoly::parse(r, "X^[2] - Y^[2]");
        DualPoly top = DualPoly::parse(r, "X*Y") * fb;  // F_C = XY F_B
        ExtensionInput in = chain_input(r, 2, 2, top, Poly::parse(r, "x*y"));
        return {"G(2,1,2)/G(2,2,2)",
                in,
                HilbertFunction({1, 2, 1}),
                HilbertFunction({1, 2, 2, 2, 1}),
                8,
                true,
                true,
                "t = xy with w(t) = 2; F = T F_B + XY F_B up to scale; n = 2, so the "
                "sufficient condition coincides with the corollary and holds"};
    }
    if (m == 3 && p == 1 && p_prime == 3 && n == 3) {
        RingPtr r = RingSpec::make({"x", "y", "z"}, {1, 1, 1}, field, false);
        DualPoly fb = powered_vandermonde_dual(r, 3);
        DualPoly top = DualPoly::parse(r, "X^[2]*Y^[2]*Z^[2]") * fb;  // F_C
        ExtensionInput in = chain_input(r, 3, 3, top, Poly::parse(r, "x*y*z"));
        return {"G(3,1,3)/G(3,3,3)",
                in,
                HilbertFunction({1, 3, 6, 8, 9, 9, 8, 6, 3, 1}),
                HilbertFunction({1, 3, 6, 9, 12, 15, 17, 18, 18, 17, 15, 12, 9, 6, 3, 1}),
                162,
                true,
                false,
                "t = xyz with w(t) = 3; F = T^[2] F_B + T XYZ F_B + X^[2]Y^[2]Z^[2] F_B "
                "with the contraction-chain scalars"};
    }
    if (m == 4 && p == 1 && p_prime == 2 && n == 2) {
        RingPtr r = RingSpec::make({"x", "y"}, {1, 1}, field, false);
        DualPoly fb = DualPoly::parse(r, "X^[5]*Y - X*Y^[5]");
        DualPoly top = DualPoly::parse(r, "X^[2]*Y^[2]") * fb;  // F_C
        ExtensionInput in = chain_input(r, 2, 4, top, Poly::parse(r, "x^2*y^2"));
        return {"G(4,1,2)/G(4,2,2)",
                in,
                HilbertFunction({1, 2, 3, 4, 3, 2, 1}),
                HilbertFunction({1, 2, 3, 4, 4, 4, 4, 4, 3, 2, 1}),
                32,
                true,
                true,
                "t = (xy)^2 with w(t) = 4; F = T F_B + X^[2]Y^[2] F_B up to scale; n = 2, "
                "so the sufficient condition coincides with the corollary and holds"};
    }
    throw std::invalid_argument(
        "coinvariant_gmpn: only the cases (2,1,2,2), (3,1,3,3), (4,1,2,2) are built");
}

}  // namespace gorext
