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

#include "gorext/extension.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorext {

namespace {

HilbertFunction base_hilbert(int n, int t_weight) {
    std::vector<int> h((n - 1) * t_weight + 1, 0);
    for (int k = 0; k < n; ++k) h[k * t_weight] = 1;
    return HilbertFunction(std::move(h));
}

}  // namespace

const DualPoly& ExtensionInput::g_form(int i) const {
    if (i == 0) return fiber_dual;
    return g.at(i - 1);
}

RingPtr ExtensionInput::extended_ring() const { return base_ring->with_t(t_weight); }

void ExtensionInput::validate() const {
    if (!base_ring) throw std::invalid_argument("extension input has no base ring");
    if (base_ring->has_t()) {
        throw std::invalid_argument("the base ring R must not contain the t-variable");
    }
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (t_weight < 1) throw std::invalid_argument("t weight must be >= 1");
    if (static_cast<int>(g.size()) != n - 1) {
        throw std::invalid_argument("expected " + std::to_string(n - 1) + " forms G_1..G_" +
                                    std::to_string(n - 1) + ", got " + std::to_string(g.size()));
    }
    require_same_ring(base_ring, fiber_dual.ring());
    if (fiber_dual.is_zero() || !fiber_dual.is_homogeneous()) {
        throw std::invalid_argument("F_B must be homogeneous and nonzero");
    }
    int jb = fiber_dual.degree();
    for (int i = 1; i <= n - 1; ++i) {
        const DualPoly& gi = g[i - 1];
        require_same_ring(base_ring, gi.ring());
        if (gi.is_zero()) continue;
        int want = jb + i * t_weight;
        if (!gi.is_homogeneous() || gi.degree() != want) {
            throw std::invalid_argument(
                "G_" + std::to_string(i) + " must be homogeneous of degree " +
                std::to_string(want) + " = j_B + " + std::to_string(i) + "*w(t); got " +
                gi.to_string());
        }
    }
}

DualPoly assemble_dual_generator(const ExtensionInput& in) {
    in.validate();
    RingPtr s = in.extended_ring();
    size_t ti = s->t_index();
    DualPoly f(s);
    for (int i = 0; i <= in.n - 1; ++i) {
        const DualPoly& gi = in.g_form(i);
        int texp = in.n - 1 - i;
        for (const auto& [m, c] : gi.terms()) {
            Monomial big(s->var_count());
            for (size_t v = 0; v < m.exps.size(); ++v) big.exps[v] = m.exps[v];
            big.exps[ti] = texp;
            f.add_term(big, c);
        }
    }
    return f;
}

ExtensionInput expand_in_t(const DualPoly& f_over_qs) {
    const RingPtr& s = f_over_qs.ring();
    if (!s->has_t()) throw std::invalid_argument("expand_in_t needs a ring with a t-variable");
    if (f_over_qs.is_zero() || !f_over_qs.is_homogeneous()) {
        throw std::invalid_argument("expand_in_t needs a homogeneous nonzero F");
    }
    RingPtr base = s->without_t();
    int n = f_over_qs.t_degree() + 1;
    ExtensionInput in{base, n, s->t_weight(), f_over_qs.t_coefficient(n - 1).lift_to(base), {}};
    for (int i = 1; i <= n - 1; ++i) {
        in.g.push_back(f_over_qs.t_coefficient(n - 1 - i).lift_to(base));
    }
    in.validate();
    return in;
}

std::vector<GradedIdeal> nested_ideals(const ExtensionInput& in) {
    in.validate();
    int jb = in.fiber_dual.degree();
    // deg F + window, in R-degrees
    int bound = jb + (in.n - 1) * in.t_weight + in.base_ring->max_weight();
    std::vector<GradedIdeal> chain;
    chain.push_back(GradedIdeal::annihilator(in.fiber_dual, bound));
    for (int i = 1; i <= in.n - 1; ++i) {
        const DualPoly& gi = in.g_form(i);
        GradedIdeal ann_gi = GradedIdeal::annihilator(gi, bound);
        chain.push_back(chain.back().colon(ann_gi));
    }
    return chain;
}

std::vector<bool> check_sufficient(const ExtensionInput& in,
                                   const std::vector<GradedIdeal>& chain) {
    DerivateModule rfb = derivates(in.fiber_dual);
    std::vector<bool> verdict;
    for (int i = 0; i <= in.n - 1; ++i) {
        if (i == in.n - 1) {
            verdict.push_back(true);  // I_{n-1} ∘ G_0 ⊆ R∘F_B is vacuous
            continue;
        }
        verdict.push_back(
            contract_contained_in_derivates(chain[i], in.g_form(in.n - 1 - i), rfb));
    }
    return verdict;
}

std::vector<bool> check_sufficient(const ExtensionInput& in) {
    return check_sufficient(in, nested_ideals(in));
}

std::vector<bool> check_necessary(const ExtensionInput& in) {
    in.validate();
    const RingPtr& r = in.base_ring;
    const FieldSpec& field = r->field();
    GradedIdeal i0 = GradedIdeal::annihilator(in.fiber_dual);
    std::vector<bool> verdict;
    for (int i = 1; i <= in.n - 1; ++i) {
        const DualPoly& gi = in.g_form(i);
        bool ok = true;
        for (const auto& [d, gen] : i0.minimal_generators()) {
            DualPoly img = contract(gen, gi);
            if (img.is_zero()) continue;
            int e = img.degree();
            auto basis = r->monomial_basis(e);
            VecSpace sum(basis.size(), field);
            for (int j = 0; j <= i - 1; ++j) {
                const DualPoly& gj = in.g_form(j);
                if (gj.is_zero() || gj.degree() < e) continue;
                for (const Monomial& m : r->monomial_basis(gj.degree() - e)) {
                    sum.insert(
                        coordinates(contract(Poly::monomial(r, m, Scalar::one(field)), gj), basis));
                }
            }
            if (!sum.contains(coordinates(img, basis))) {
                ok = false;
                break;
            }
        }
        verdict.push_back(ok);
    }
    return verdict;
}

namespace {

// products of minimal-generator pairs of Ann(F_B) generate (I_B)^2
std::vector<Poly> squared_ideal_generators(const GradedIdeal& ib) {
    std::vector<Poly> out;
    const auto& gens = ib.minimal_generators();
    for (size_t a = 0; a < gens.size(); ++a) {
        for (size_t b = a; b < gens.size(); ++b) {
            out.push_back(gens[a].second * gens[b].second);
        }
    }
    return out;
}

}  // namespace

bool check_corollary(const ExtensionInput& in) {
    in.validate();
    if (in.n < 2) throw std::invalid_argument("corollary shape not matched: n >= 2 required");
    for (int i = 1; i <= in.n - 2; ++i) {
        if (!in.g_form(i).is_zero()) {
            throw std::invalid_argument("corollary shape not matched: G_" + std::to_string(i) +
                                        " must be zero");
        }
    }
    const DualPoly& g = in.g_form(in.n - 1);
    if (g.is_zero()) return true;
    GradedIdeal ib = GradedIdeal::annihilator(in.fiber_dual);
    for (const Poly& q : squared_ideal_generators(ib)) {
        if (!contract(q, g).is_zero()) return false;
    }
    return true;
}

std::vector<bool> check_squared(const ExtensionInput& in) {
    in.validate();
    GradedIdeal ib = GradedIdeal::annihilator(in.fiber_dual);
    DerivateModule rfb = derivates(in.fiber_dual);
    auto gens2 = squared_ideal_generators(ib);
    std::vector<bool> verdict;
    for (int i = 1; i <= in.n - 1; ++i) {
        const DualPoly& gi = in.g_form(i);
        bool ok = true;
        for (const Poly& q : gens2) {
            if (!rfb.contains(contract(q, gi))) {
                ok = false;
                break;
            }
        }
        verdict.push_back(ok);
    }
    return verdict;
}

std::vector<LiftingEntry> lifting_test(const ExtensionInput& in) {
    in.validate();
    const RingPtr& r = in.base_ring;
    const FieldSpec& field = r->field();
    std::vector<GradedIdeal> chain = nested_ideals(in);
    const GradedIdeal& i0 = chain.front();
    RingPtr s = in.extended_ring();
    DualPoly f = assemble_dual_generator(in);
    int jb = in.fiber_dual.degree();

    std::vector<LiftingEntry> out;
    for (const auto& [dg, gen] : i0.minimal_generators()) {
        // unknowns g_i of degree dg - (n-1-i) w(t), i = 0..n-2
        std::vector<std::vector<Monomial>> unknown_basis(in.n - 1);
        std::vector<size_t> offset(in.n - 1, 0);
        size_t cols = 0;
        for (int i = 0; i <= in.n - 2; ++i) {
            int di = dg - (in.n - 1 - i) * in.t_weight;
            if (di >= 0) unknown_basis[i] = r->monomial_basis(di);
            offset[i] = cols;
            cols += unknown_basis[i].size();
        }

        // equations i = 0..n-2, each in dual degree j_B + (n-1-i) w(t) - dg
        std::vector<std::vector<Scalar>> rows;
        std::vector<Scalar> rhs;
        for (int i = 0; i <= in.n - 2; ++i) {
            int e = jb + (in.n - 1 - i) * in.t_weight - dg;
            if (e < 0) continue;
            auto target = r->monomial_basis(e);
            if (target.empty()) continue;
            size_t row0 = rows.size();
            for (size_t q = 0; q < target.size(); ++q) {
                rows.emplace_back(cols, Scalar::zero(field));
                rhs.push_back(Scalar::zero(field));
            }
            // unknown blocks: g_m against G_{m-i}, m = i..n-2
            for (int m = i; m <= in.n - 2; ++m) {
                const DualPoly& gk = in.g_form(m - i);
                if (gk.is_zero()) continue;
                for (size_t c = 0; c < unknown_basis[m].size(); ++c) {
                    auto img = contract(Poly::monomial(r, unknown_basis[m][c], Scalar::one(field)),
                                        gk);
                    auto co = coordinates(img, target);
                    for (size_t q = 0; q < target.size(); ++q) {
                        rows[row0 + q][offset[m] + c] = co[q];
                    }
                }
            }
            // known block: g_{n-1} = gen against G_{n-1-i}
            const DualPoly& gtop = in.g_form(in.n - 1 - i);
            if (!gtop.is_zero()) {
                auto co = coordinates(contract(gen, gtop), target);
                for (size_t q = 0; q < target.size(); ++q) rhs[row0 + q] = -co[q];
            }
        }

        LiftingEntry entry{gen, std::nullopt};
        std::optional<std::vector<Scalar>> sol;
        if (rows.empty()) {
            sol = std::vector<Scalar>(cols, Scalar::zero(field));
        } else {
            sol = solve(Matrix::from_rows(field, rows), rhs);
        }
        if (sol) {
            // witness t^{n-1} g_0 + ... + t g_{n-2} + gen over S
            size_t ti = s->t_index();
            Poly witness = gen.lift_to(s);
            for (int i = 0; i <= in.n - 2; ++i) {
                Poly gi(r);
                for (size_t c = 0; c < unknown_basis[i].size(); ++c) {
                    gi.add_term(unknown_basis[i][c], (*sol)[offset[i] + c]);
                }
                if (gi.is_zero()) continue;
                // the lemma forces g_i into I_{n-1-i}
                if (!chain[in.n - 1 - i].contains(gi)) {
                    throw std::logic_error("lifting solution violates g_i in I_{n-1-i}");
                }
                Poly lifted = gi.lift_to(s);
                Monomial tpow(s->var_count());
                tpow.exps[ti] = in.n - 1 - i;
                witness += lifted * Poly::monomial(s, tpow, Scalar::one(field));
            }
            if (!contract(witness, f).is_zero()) {
                throw std::logic_error("lifting witness fails to annihilate F");
            }
            entry.witness = witness;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

DimensionCheck dimension_test(const ExtensionInput& in) {
    in.validate();
    DualPoly f = assemble_dual_generator(in);
    ArtinianAlgebra c =
        ArtinianAlgebra::quotient(f.ring(), GradedIdeal::annihilator(f));
    ArtinianAlgebra b = ArtinianAlgebra::quotient(in.base_ring,
                                                  GradedIdeal::annihilator(in.fiber_dual));
    DimensionCheck out;
    out.dim_c = c.total_dim();
    out.dim_a_times_b = in.n * b.total_dim();
    out.equal = out.dim_c == out.dim_a_times_b;
    return out;
}

FreeExtReport full_report(const ExtensionInput& in) {
    in.validate();
    FreeExtReport rep;
    rep.n = in.n;
    rep.t_weight = in.t_weight;
    rep.fiber = in.fiber_dual;
    rep.g = in.g;
    rep.f = assemble_dual_generator(in);

    std::vector<GradedIdeal> chain = nested_ideals(in);
    ArtinianAlgebra b = ArtinianAlgebra::quotient(in.base_ring, chain.front());
    ArtinianAlgebra c = ArtinianAlgebra::quotient(rep.f.ring(), GradedIdeal::annihilator(rep.f));

    rep.h_a = base_hilbert(in.n, in.t_weight);
    rep.h_b = b.hilbert();
    rep.h_c = c.hilbert();
    rep.h_tensor = tensor_hilbert(rep.h_a, rep.h_b);

    rep.sufficient = check_sufficient(in, chain);
    rep.sufficient_all =
        std::all_of(rep.sufficient.begin(), rep.sufficient.end(), [](bool v) { return v; });
    rep.necessary = check_necessary(in);
    rep.necessary_all =
        std::all_of(rep.necessary.begin(), rep.necessary.end(), [](bool v) { return v; });
    rep.squared = check_squared(in);

    bool corollary_shape = in.n >= 2;
    for (int i = 1; i <= in.n - 2; ++i) {
        if (!in.g_form(i).is_zero()) corollary_shape = false;
    }
    if (corollary_shape) rep.corollary = check_corollary(in);

    rep.lifting = lifting_test(in);
    rep.lifting_all = std::all_of(rep.lifting.begin(), rep.lifting.end(),
                                  [](const LiftingEntry& e) { return e.witness.has_value(); });
    rep.free = rep.lifting_all;

    rep.dimension.dim_c = c.total_dim();
    rep.dimension.dim_a_times_b = in.n * b.total_dim();
    rep.dimension.equal = rep.dimension.dim_c == rep.dimension.dim_a_times_b;

    // certificate lattice; a violation is an implementation bug
    if (c.socle_degree() != (in.n - 1) * in.t_weight + b.socle_degree()) {
        throw std::logic_error("socle degree of C is not j_A + j_B");
    }
    if (rep.sufficient_all && !rep.free) {
        throw std::logic_error("sufficient conditions passed but lifting refutes freeness");
    }
    if (rep.free && !rep.necessary_all) {
        throw std::logic_error("free extension violates the necessary condition");
    }
    if (rep.free != rep.dimension.equal) {
        throw std::logic_error("lifting and dimension certificates disagree");
    }
    if (rep.corollary && *rep.corollary != rep.free) {
        throw std::logic_error("corollary iff-condition disagrees with the lifting test");
    }
    if (rep.free && !(rep.h_c == rep.h_tensor)) {
        throw std::logic_error("free extension with H(C) != H(A) tensor H(B)");
    }

    if (auto w = small_char_warning(in.base_ring->field(), c.socle_degree())) {
        rep.warnings.push_back(*w);
    }
    return rep;
}

DualPoly pbi_dual_generator(const DualPoly& theta, std::span<const Poly> hs, int k) {
    if (theta.is_zero() || !theta.is_homogeneous()) {
        throw std::invalid_argument("theta must be homogeneous and nonzero");
    }
    if (k < 1) throw std::invalid_argument("fiber dimension k must be >= 1");
    const RingPtr& r = theta.ring();
    if (r->has_t()) throw std::invalid_argument("theta must live over the t-free ring");
    for (size_t i = 0; i < hs.size(); ++i) {
        require_same_ring(r, hs[i].ring());
        if (hs[i].is_zero()) continue;
        if (!hs[i].is_homogeneous() || hs[i].degree() != static_cast<int>(i) + 1) {
            throw std::invalid_argument("h_" + std::to_string(i + 1) + " must be homogeneous of degree " +
                                        std::to_string(i + 1));
        }
    }
    RingPtr s = r->with_t(1);
    size_t ti = s->t_index();
    DualPoly f(s);
    auto add_with_tpow = [&](const DualPoly& coeff, int texp) {
        for (const auto& [m, c] : coeff.terms()) {
            Monomial big(s->var_count());
            for (size_t v = 0; v < m.exps.size(); ++v) big.exps[v] = m.exps[v];
            big.exps[ti] = texp;
            f.add_term(big, c);
        }
    };
    add_with_tpow(theta, k);
    for (size_t i = 0; i < hs.size(); ++i) {
        if (hs[i].is_zero()) continue;
        add_with_tpow(contract(hs[i], theta), k + static_cast<int>(i) + 1);
    }
    return f;
}

int admissible_g_dimension(const DualPoly& fiber_dual) {
    if (fiber_dual.is_zero() || !fiber_dual.is_homogeneous()) {
        throw std::invalid_argument("F_B must be homogeneous and nonzero");
    }
    const RingPtr& r = fiber_dual.ring();
    int d = fiber_dual.degree();
    GradedIdeal ib = GradedIdeal::annihilator(fiber_dual);
    auto gens2 = squared_ideal_generators(ib);
    GradedIdeal ib2 = GradedIdeal::from_generators(r, gens2, d + 1);
    return static_cast<int>(perp(ib2, d + 1).size());
}

}  // namespace gorext
