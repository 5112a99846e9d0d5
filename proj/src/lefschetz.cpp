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

#include "gorext/lefschetz.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gorext {

std::string partition_to_string(const Partition& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ",";
        os << p[i];
    }
    os << ")";
    return os.str();
}

Partition conjugate(const Partition& p) {
    Partition sorted = p;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    while (!sorted.empty() && sorted.back() == 0) sorted.pop_back();
    Partition out;
    for (int k = 1; !sorted.empty() && k <= sorted.front(); ++k) {
        int count = 0;
        for (int part : sorted)
            if (part >= k) ++count;
        out.push_back(count);
    }
    return out;
}

Partition conjugate(const HilbertFunction& h) { return conjugate(h.values()); }

namespace {

Partition partition_from_ranks(int dim, const std::vector<int>& power_ranks) {
    // power_ranks[s-1] = rank(M^s); blocks of size >= k number r_{k-1} - r_k
    std::vector<int> r;
    r.push_back(dim);
    for (int v : power_ranks) r.push_back(v);
    r.push_back(0);
    Partition p;
    for (size_t k = 1; k + 1 <= r.size(); ++k) {
        if (k == r.size() - 1 && r[k] != 0) throw std::logic_error("rank sequence not nilpotent");
        int ge_k = r[k - 1] - r[k];
        int ge_k1 = (k + 1 < r.size()) ? r[k] - r[k + 1] : 0;
        int exactly_k = ge_k - ge_k1;
        if (exactly_k < 0) throw std::logic_error("rank sequence is not convex");
        for (int c = 0; c < exactly_k; ++c) p.push_back(static_cast<int>(k));
        if (r[k] == 0) break;
    }
    std::sort(p.begin(), p.end(), std::greater<int>());
    return p;
}

// expected rank of M^s for Jordan type p
int rank_of_power(const Partition& p, int s) {
    int r = 0;
    for (int part : p) r += std::max(part - s, 0);
    return r;
}

std::vector<size_t> weight_one_vars(const RingSpec& ring) {
    std::vector<size_t> out;
    for (size_t i = 0; i < ring.var_count(); ++i) {
        if (ring.weight(i) == 1) out.push_back(i);
    }
    return out;
}

}  // namespace

Partition jordan_type(const ArtinianAlgebra& a, const Poly& ell) {
    require_same_ring(a.ring(), ell.ring());
    if (ell.is_zero()) throw std::invalid_argument("jordan type of the zero element is undefined");
    Poly reduced = a.normal_form(ell);
    if (!reduced.graded_part(0).is_zero()) {
        throw std::invalid_argument("ell must lie in the maximal ideal (no constant term)");
    }
    int dim = a.total_dim();
    Matrix m = a.multiplication_matrix(reduced);
    std::vector<int> ranks;
    Matrix power = m;
    for (int s = 1; s <= a.socle_degree() + 1; ++s) {
        int r = static_cast<int>(rank(power));
        ranks.push_back(r);
        if (r == 0) break;
        power = power * m;
    }
    if (ranks.empty() || ranks.back() != 0) {
        throw std::logic_error("multiplication operator is not nilpotent within the socle bound");
    }
    return partition_from_ranks(dim, ranks);
}

namespace {

// graded block A_d -> A_{d+1} of sum_i c_i x_i over the weight-1 variables
ParamMatrix parametric_block(const ArtinianAlgebra& a, const std::vector<size_t>& vars,
                             const RingPtr& params, int d) {
    size_t rows = a.coset_basis(d + 1).size();
    size_t cols = a.coset_basis(d).size();
    ParamMatrix out(rows, cols, params);
    for (size_t vi = 0; vi < vars.size(); ++vi) {
        Matrix blk = a.multiplication_block(Poly::variable(a.ring(), vars[vi]), d);
        Poly ci = Poly::variable(params, vi);
        for (size_t r = 0; r < rows; ++r) {
            for (size_t c = 0; c < cols; ++c) {
                if (!blk.at(r, c).is_zero()) {
                    out.at(r, c) += ci * Poly::constant(params, blk.at(r, c));
                }
            }
        }
    }
    return out;
}

}  // namespace

SLResult is_strong_lefschetz(const ArtinianAlgebra& a) {
    SLResult res;
    res.expected = conjugate(a.hilbert());
    const RingPtr& ring = a.ring();
    const FieldSpec& field = ring->field();
    auto vars = weight_one_vars(*ring);

    if (vars.empty() || a.hilbert()[1] == 0) {
        res.verdict = SLResult::Verdict::vacuous_no;
        res.detail = "A_1 has no weight-1 part; strong Lefschetz is vacuous here (consider SLJT)";
        return res;
    }

    std::mt19937 rng(20260810);
    std::uniform_int_distribution<int> coef(-7, 7);
    auto random_ell = [&]() {
        Poly ell(ring);
        while (ell.is_zero()) {
            ell = Poly(ring);
            for (size_t v : vars) {
                ell += Poly::variable(ring, v) * Scalar(field, coef(rng));
            }
        }
        return ell;
    };

    // sampling can only certify "yes"
    for (int attempt = 0; attempt < 4; ++attempt) {
        Poly ell = random_ell();
        Partition p = jordan_type(a, ell);
        if (p == res.expected) {
            res.verdict = SLResult::Verdict::yes;
            res.witness = ell;
            res.generic_type = p;
            res.detail = "witness verified exactly: P_ell = H(A)^vee";
            return res;
        }
    }

    if (field.is_prime_field()) {
        res.verdict = SLResult::Verdict::no;
        res.sampled_only = true;
        res.detail = "sampled verdict over " + field.to_string() +
                     "; no generic-rank certificate over a finite field";
        return res;
    }

    // function-field certificate: generic rank of every power via the graded
    // blocks of multiplication by ell = sum c_i x_i
    std::vector<std::string> cnames;
    for (size_t i = 0; i < vars.size(); ++i) cnames.push_back("c" + std::to_string(i + 1));
    RingPtr params = RingSpec::make(cnames, std::vector<int>(cnames.size(), 1), field, false);
    int j = a.socle_degree();
    std::vector<ParamMatrix> step;  // step[d]: A_d -> A_{d+1}
    for (int d = 0; d < j; ++d) step.push_back(parametric_block(a, vars, params, d));

    std::vector<int> generic_ranks;
    bool shortfall = false;
    bool excess = false;
    for (int s = 1; s <= j && !shortfall; ++s) {
        int rs = 0;
        for (int d = 0; d + s <= j; ++d) {
            if (a.hilbert()[d] == 0 || a.hilbert()[d + s] == 0) continue;
            ParamMatrix prod = step[d];
            for (int k = 1; k < s; ++k) prod = step[d + k] * prod;
            rs += static_cast<int>(generic_rank(prod));
        }
        generic_ranks.push_back(rs);
        int want = rank_of_power(res.expected, s);
        if (rs > want) excess = true;  // H^vee is not the dominance maximum here
        if (rs < want) {
            // every concrete ell has rank(ell^s) <= the generic rank, so no
            // ell reaches H(A)^vee: a Zariski-dense refutation
            shortfall = true;
            res.failing_power = s;
            res.detail = "generic rank of ell^" + std::to_string(s) + " is " + std::to_string(rs) +
                         " < " + std::to_string(want) + " required for H(A)^vee";
        }
        if (rs == 0) break;
    }

    if (shortfall) {
        res.verdict = SLResult::Verdict::no;
        return res;
    }
    if (!excess) res.generic_type = partition_from_ranks(a.total_dim(), generic_ranks);

    // generic ranks match H^vee (the symmetric-Hilbert-function case): a
    // dense open set of ell works, so sampling lands on a witness
    for (int attempt = 0; attempt < 64; ++attempt) {
        Poly ell = random_ell();
        Partition p = jordan_type(a, ell);
        if (p == res.expected) {
            res.verdict = SLResult::Verdict::yes;
            res.witness = ell;
            res.detail = "generic ranks match H(A)^vee; witness verified exactly";
            return res;
        }
    }
    throw std::logic_error(excess ? "strong Lefschetz undecided: generic type exceeds H(A)^vee"
                                  : "generic type matches but no witness found in 64 samples");
}

bool has_sljt_element(const ArtinianAlgebra& a, const Poly& ell) {
    return jordan_type(a, ell) == conjugate(a.hilbert());
}

}  // namespace gorext
