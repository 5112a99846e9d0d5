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

#include "gorext/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gorext {

HilbertFunction::HilbertFunction(std::vector<int> h) : h_(std::move(h)) {
    for (int v : h_) {
        if (v < 0) throw std::invalid_argument("negative Hilbert value");
    }
    while (!h_.empty() && h_.back() == 0) h_.pop_back();
}

int HilbertFunction::total() const {
    int s = 0;
    for (int v : h_) s += v;
    return s;
}

bool HilbertFunction::symmetric() const {
    int j = top_degree();
    for (int i = 0; i <= j; ++i) {
        if ((*this)[i] != (*this)[j - i]) return false;
    }
    return true;
}

std::string HilbertFunction::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < h_.size(); ++i) {
        if (i) os << ",";
        os << h_[i];
    }
    os << ")";
    return os.str();
}

HilbertFunction tensor_hilbert(const HilbertFunction& a, const HilbertFunction& b) {
    if (a.size() == 0 || b.size() == 0) return HilbertFunction();
    std::vector<int> h(a.size() + b.size() - 1, 0);
    for (int i = 0; i < a.size(); ++i) {
        for (int j = 0; j < b.size(); ++j) h[i + j] += a[i] * b[j];
    }
    return HilbertFunction(std::move(h));
}

// ------------------------------------------------------------ ArtinianAlgebra

ArtinianAlgebra::ArtinianAlgebra(RingPtr ring, GradedIdeal ideal)
    : ring_(std::move(ring)), ideal_(std::move(ideal)) {}

ArtinianAlgebra ArtinianAlgebra::quotient(RingPtr ring, GradedIdeal ideal) {
    require_same_ring(ring, ideal.ring());
    if (!ideal.full_above_bound()) {
        throw std::runtime_error("not Artinian within bound D = " +
                                 std::to_string(ideal.bound()));
    }
    ArtinianAlgebra alg(ring, std::move(ideal));
    int j = alg.ideal_.socle_degree();
    if (j < 0) {
        throw std::invalid_argument("quotient by the unit ideal is the zero ring, not connected");
    }
    std::vector<int> h;
    alg.coset_.resize(j + 1);
    alg.degree_offset_.resize(j + 2, 0);
    for (int d = 0; d <= j; ++d) {
        auto basis = alg.ring_->monomial_basis(d);
        const VecSpace& piece = alg.ideal_.piece(d);
        std::vector<bool> is_pivot(basis.size(), false);
        for (size_t p : piece.pivots()) is_pivot[p] = true;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!is_pivot[k]) alg.coset_[d].push_back(basis[k]);
        }
        h.push_back(static_cast<int>(alg.coset_[d].size()));
        alg.degree_offset_[d + 1] = alg.degree_offset_[d] + alg.coset_[d].size();
    }
    alg.hilbert_ = HilbertFunction(std::move(h));
    alg.socle_degree_ = j;
    alg.total_dim_ = alg.hilbert_.total();
    if (alg.hilbert_[0] != 1) {
        throw std::logic_error("quotient is not connected (H_0 != 1)");
    }
    return alg;
}

const std::vector<Monomial>& ArtinianAlgebra::coset_basis(int d) const {
    static const std::vector<Monomial> empty;
    if (d < 0 || d > socle_degree_) return empty;
    return coset_[d];
}

size_t ArtinianAlgebra::total_index(int d, size_t pos) const {
    return degree_offset_.at(d) + pos;
}

std::vector<Poly> ArtinianAlgebra::total_basis_polys() const {
    std::vector<Poly> out;
    out.reserve(total_dim_);
    for (int d = 0; d <= socle_degree_; ++d) {
        for (const Monomial& m : coset_[d]) {
            out.push_back(Poly::monomial(ring_, m, Scalar::one(ring_->field())));
        }
    }
    return out;
}

std::vector<Scalar> ArtinianAlgebra::reduce_to_coords(const Poly& p, int d) const {
    if (d < 0 || d > socle_degree_) return {};
    auto basis = ring_->monomial_basis(d);
    auto rem = ideal_.piece(d).reduce(coordinates(p, basis));
    // remainder is supported on the non-pivot (coset) columns
    std::vector<Scalar> coords;
    coords.reserve(coset_[d].size());
    std::vector<bool> is_pivot(basis.size(), false);
    for (size_t q : ideal_.piece(d).pivots()) is_pivot[q] = true;
    for (size_t k = 0; k < basis.size(); ++k) {
        if (!is_pivot[k]) coords.push_back(rem[k]);
    }
    return coords;
}

Poly ArtinianAlgebra::normal_form(const Poly& p) const {
    Poly out(ring_);
    for (int d = 0; d <= std::min(p.degree(), socle_degree_); ++d) {
        Poly part = p.graded_part(d);
        if (part.is_zero()) continue;
        auto coords = reduce_to_coords(part, d);
        for (size_t k = 0; k < coords.size(); ++k) {
            out.add_term(coset_[d][k], coords[k]);
        }
    }
    return out;
}

Matrix ArtinianAlgebra::multiplication_matrix(const Poly& ell) const {
    require_same_ring(ring_, ell.ring());
    const FieldSpec& f = ring_->field();
    Matrix m(total_dim_, total_dim_, f);
    for (int d = 0; d <= socle_degree_; ++d) {
        for (size_t pos = 0; pos < coset_[d].size(); ++pos) {
            Poly prod = ell * Poly::monomial(ring_, coset_[d][pos], Scalar::one(f));
            size_t col = total_index(d, pos);
            for (int e = 0; e <= socle_degree_; ++e) {
                Poly part = prod.graded_part(e);
                if (part.is_zero()) continue;
                auto coords = reduce_to_coords(part, e);
                for (size_t k = 0; k < coords.size(); ++k) {
                    if (!coords[k].is_zero()) m.at(total_index(e, k), col) = coords[k];
                }
            }
        }
    }
    return m;
}

Matrix ArtinianAlgebra::multiplication_block(const Poly& g, int d) const {
    require_same_ring(ring_, g.ring());
    auto deg = g.homogeneous_degree();
    if (!deg) throw std::invalid_argument("multiplication block needs homogeneous g");
    const FieldSpec& f = ring_->field();
    int e = d + *deg;
    size_t rows = (e <= socle_degree_) ? coset_[e].size() : 0;
    size_t cols = (d <= socle_degree_) ? coset_[d].size() : 0;
    Matrix m(rows, cols, f);
    if (rows == 0 || cols == 0) return m;
    for (size_t pos = 0; pos < cols; ++pos) {
        Poly prod = g * Poly::monomial(ring_, coset_[d][pos], Scalar::one(f));
        auto coords = reduce_to_coords(prod, e);
        for (size_t k = 0; k < coords.size(); ++k) m.at(k, pos) = coords[k];
    }
    return m;
}

std::vector<std::vector<Poly>> ArtinianAlgebra::socle_basis() const {
    const FieldSpec& f = ring_->field();
    std::vector<std::vector<Poly>> out(socle_degree_ + 1);
    for (int d = 0; d <= socle_degree_; ++d) {
        size_t n = coset_[d].size();
        if (n == 0) continue;
        // stack multiplication blocks by every variable
        std::vector<std::vector<Scalar>> rows;
        for (size_t i = 0; i < ring_->var_count(); ++i) {
            Matrix blk = multiplication_block(Poly::variable(ring_, i), d);
            for (size_t r = 0; r < blk.rows(); ++r) {
                std::vector<Scalar> row;
                row.reserve(n);
                for (size_t c = 0; c < n; ++c) row.push_back(blk.at(r, c));
                rows.push_back(std::move(row));
            }
        }
        std::vector<std::vector<Scalar>> ker;
        if (rows.empty()) {
            // no constraints: everything is socle (top degree)
            for (size_t k = 0; k < n; ++k) {
                std::vector<Scalar> v(n, Scalar::zero(f));
                v[k] = Scalar::one(f);
                ker.push_back(std::move(v));
            }
        } else {
            ker = kernel_basis(Matrix::from_rows(f, rows));
        }
        for (const auto& v : ker) {
            Poly p(ring_);
            for (size_t k = 0; k < n; ++k) p.add_term(coset_[d][k], v[k]);
            out[d].push_back(p);
        }
    }
    return out;
}

int ArtinianAlgebra::type() const {
    int t = 0;
    for (const auto& piece : socle_basis()) t += static_cast<int>(piece.size());
    return t;
}

ArtinianAlgebra::PoincareReport ArtinianAlgebra::poincare_duality() const {
    int j = socle_degree_;
    PoincareReport rep{true, {}};
    if (hilbert_[j] != 1) return {false, {}};
    const FieldSpec& f = ring_->field();
    for (int i = 0; i <= j; ++i) {
        size_t ni = coset_[i].size(), nj = coset_[j - i].size();
        Matrix pairing(ni, nj, f);
        for (size_t a = 0; a < ni; ++a) {
            Poly u = Poly::monomial(ring_, coset_[i][a], Scalar::one(f));
            for (size_t b = 0; b < nj; ++b) {
                Poly v = Poly::monomial(ring_, coset_[j - i][b], Scalar::one(f));
                auto coords = reduce_to_coords(u * v, j);
                if (!coords.empty()) pairing.at(a, b) = coords[0];
            }
        }
        int r = static_cast<int>(rank(pairing));
        rep.pairing_ranks.push_back(r);
        if (r != static_cast<int>(ni) || r != static_cast<int>(nj)) {
            rep.poincare_duality = false;
        }
    }
    return rep;
}

bool ArtinianAlgebra::is_compressed() const {
    if (!is_gorenstein()) {
        throw std::invalid_argument("compressed test is defined for Gorenstein algebras");
    }
    int j = socle_degree_;
    for (int i = 1; 2 * i <= j; ++i) {
        int ri = ring_->dim_piece(i);
        int rji = ring_->dim_piece(j - i);
        if (hilbert_[i] != std::min(ri, rji)) return false;
    }
    return true;
}

}  // namespace gorext
