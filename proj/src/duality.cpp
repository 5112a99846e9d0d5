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

#include "gorext/duality.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorext {

namespace {

}  // namespace

// ------------------------------------------------------------ DerivateModule

DerivateModule::DerivateModule(RingPtr ring, int socle_degree)
    : ring_(std::move(ring)), j_(socle_degree) {
    pieces_.reserve(j_ + 1);
    for (int e = 0; e <= j_; ++e) {
        pieces_.emplace_back(ring_->monomial_basis(e).size(), ring_->field());
    }
}

int DerivateModule::dim(int e) const {
    if (e < 0 || e > j_) return 0;
    return static_cast<int>(pieces_[e].dim());
}

const VecSpace& DerivateModule::piece(int e) const { return pieces_.at(e); }
VecSpace& DerivateModule::piece_mutable(int e) { return pieces_.at(e); }

bool DerivateModule::contains(const DualPoly& v) const {
    if (v.is_zero()) return true;
    auto d = v.homogeneous_degree();
    if (!d) throw std::invalid_argument("derivate membership needs a homogeneous input");
    if (*d > j_) return false;
    auto basis = ring_->monomial_basis(*d);
    return pieces_[*d].contains(coordinates(v, basis));
}

std::vector<DualPoly> DerivateModule::piece_basis(int e) const {
    std::vector<DualPoly> out;
    if (e < 0 || e > j_) return out;
    auto basis = ring_->monomial_basis(e);
    for (const auto& row : pieces_[e].basis_rows()) {
        out.push_back(dual_from_coordinates(ring_, basis, row));
    }
    return out;
}

DerivateModule derivates(const DualPoly& F) {
    if (!F.is_homogeneous()) throw std::invalid_argument("derivates needs a homogeneous F");
    const RingPtr& ring = F.ring();
    int j = F.degree();  // -1 for F = 0
    DerivateModule mod(ring, j);
    for (int e = 0; e <= j; ++e) {
        auto target = ring->monomial_basis(e);
        for (const Monomial& m : ring->monomial_basis(j - e)) {
            auto img = contract(Poly::monomial(ring, m, Scalar::one(ring->field())), F);
            mod.piece_mutable(e).insert(coordinates(img, target));
        }
    }
    return mod;
}

// --------------------------------------------------------------- GradedIdeal

GradedIdeal::GradedIdeal(RingPtr ring, int bound) : ring_(std::move(ring)), bound_(bound) {
    if (bound_ < 0) throw std::invalid_argument("ideal bound must be >= 0");
    pieces_.reserve(bound_ + 1);
    for (int d = 0; d <= bound_; ++d) {
        pieces_.emplace_back(ring_->monomial_basis(d).size(), ring_->field());
    }
}

void GradedIdeal::finalize() {
    socle_degree_ = -1;
    for (int d = 0; d <= bound_; ++d) {
        if (pieces_[d].dim() < pieces_[d].ambient()) socle_degree_ = d;
    }
    // I_d = R_d on a window of width max weight implies fullness above it,
    // since every monomial of higher degree is divisible by some variable.
    full_above_bound_ = true;
    for (int d = std::max(0, bound_ - ring_->max_weight() + 1); d <= bound_; ++d) {
        if (pieces_[d].dim() < pieces_[d].ambient()) full_above_bound_ = false;
    }
    // minimal generators: degree-wise complement of R_+ · I inside I_d
    min_gens_.clear();
    for (int d = 0; d <= bound_; ++d) {
        if (pieces_[d].dim() == 0) continue;
        auto basis = ring_->monomial_basis(d);
        VecSpace grown(basis.size(), ring_->field());
        for (size_t i = 0; i < ring_->var_count(); ++i) {
            int dd = d - ring_->weight(i);
            if (dd < 0) continue;
            Poly xi = Poly::variable(ring_, i);
            for (const Poly& p : piece_basis(dd)) {
                grown.insert(coordinates(xi * p, basis));
            }
        }
        for (const auto& row : pieces_[d].basis_rows()) {
            auto rem = grown.reduce(row);
            bool zero = true;
            for (const auto& c : rem)
                if (!c.is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) continue;
            grown.insert(rem);
            min_gens_.emplace_back(d, normalized(poly_from_coordinates(ring_, basis, rem)));
        }
    }
}

int GradedIdeal::dim_piece(int d) const {
    if (d < 0) return 0;
    if (d <= bound_) return static_cast<int>(pieces_[d].dim());
    if (full_above_bound_) return ring_->dim_piece(d);
    throw std::out_of_range("ideal piece above bound " + std::to_string(bound_));
}

bool GradedIdeal::is_full_piece(int d) const {
    if (d < 0) return false;
    if (d <= bound_) return pieces_[d].dim() == pieces_[d].ambient();
    if (full_above_bound_) return true;
    throw std::out_of_range("ideal piece above bound " + std::to_string(bound_));
}

const VecSpace& GradedIdeal::piece(int d) const {
    if (d < 0 || d > bound_) throw std::out_of_range("ideal piece out of stored range");
    return pieces_[d];
}

std::vector<Poly> GradedIdeal::piece_basis(int d) const {
    std::vector<Poly> out;
    if (d < 0) return out;
    auto basis = ring_->monomial_basis(d);
    if (d > bound_) {
        if (!full_above_bound_) {
            throw std::out_of_range("ideal piece above bound " + std::to_string(bound_));
        }
        for (const Monomial& m : basis) {
            out.push_back(Poly::monomial(ring_, m, Scalar::one(ring_->field())));
        }
        return out;
    }
    for (const auto& row : pieces_[d].basis_rows()) {
        out.push_back(poly_from_coordinates(ring_, basis, row));
    }
    return out;
}

bool GradedIdeal::contains(const Poly& f) const {
    if (f.is_zero()) return true;
    // check each graded part
    int lo = 0, hi = f.degree();
    for (int d = lo; d <= hi; ++d) {
        Poly part = f.graded_part(d);
        if (part.is_zero()) continue;
        if (d > bound_) {
            if (full_above_bound_) continue;
            throw std::out_of_range("membership test above ideal bound");
        }
        if (!pieces_[d].contains(coordinates(part, ring_->monomial_basis(d)))) return false;
    }
    return true;
}

bool GradedIdeal::contains(const GradedIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    for (int d = 0; d <= other.bound_; ++d) {
        if (other.pieces_[d].dim() == 0) continue;
        if (d <= bound_) {
            for (const auto& row : other.pieces_[d].basis_rows()) {
                if (!pieces_[d].contains(row)) return false;
            }
        } else if (!is_full_piece(d)) {  // throws when this tail is unknown
            return false;
        }
    }
    // tails beyond other's bound: only the flags can speak
    if (other.full_above_bound_ && bound_ < other.bound_ && !full_above_bound_) {
        throw std::out_of_range("containment beyond stored bound");
    }
    if (other.full_above_bound_ && !full_above_bound_) return false;
    return true;
}

bool GradedIdeal::equals(const GradedIdeal& other) const {
    require_same_ring(ring_, other.ring_);
    int lo = std::min(bound_, other.bound_);
    for (int d = 0; d <= lo; ++d) {
        if (!pieces_[d].same_space(other.pieces_[d])) return false;
    }
    const GradedIdeal& small = (bound_ <= other.bound_) ? *this : other;
    const GradedIdeal& big = (bound_ <= other.bound_) ? other : *this;
    for (int d = lo + 1; d <= big.bound_; ++d) {
        if (!small.full_above_bound_) {
            throw std::out_of_range("ideal comparison beyond stored bound");
        }
        if (!big.is_full_piece(d)) return false;
    }
    // identical stored data yields identical flags, so this is consistent
    return small.full_above_bound_ == big.full_above_bound_;
}

GradedIdeal GradedIdeal::unit_ideal(RingPtr ring, int bound) {
    GradedIdeal ideal(ring, bound);
    for (int d = 0; d <= bound; ++d) {
        size_t n = ideal.pieces_[d].ambient();
        for (size_t k = 0; k < n; ++k) {
            std::vector<Scalar> v(n, Scalar::zero(ring->field()));
            v[k] = Scalar::one(ring->field());
            ideal.pieces_[d].insert(std::move(v));
        }
    }
    ideal.finalize();
    return ideal;
}

GradedIdeal GradedIdeal::zero_ideal(RingPtr ring, int bound) {
    GradedIdeal ideal(ring, bound);
    ideal.finalize();
    ideal.full_above_bound_ = false;
    return ideal;
}

GradedIdeal GradedIdeal::annihilator(const DualPoly& F, std::optional<int> bound) {
    const RingPtr& ring = F.ring();
    if (F.is_zero()) return unit_ideal(ring, bound.value_or(0));
    if (!F.is_homogeneous()) throw std::invalid_argument("annihilator needs a homogeneous F");
    std::vector<DualPoly> fs{F};
    return annihilator_of_set(fs, bound);
}

GradedIdeal GradedIdeal::annihilator_of_set(std::span<const DualPoly> fs,
                                            std::optional<int> bound) {
    if (fs.empty()) throw std::invalid_argument("annihilator of an empty set");
    RingPtr ring = fs.front().ring();
    int jmax = -1;
    for (const auto& f : fs) {
        require_same_ring(ring, f.ring());
        if (!f.is_homogeneous()) {
            throw std::invalid_argument("annihilator needs homogeneous inputs");
        }
        jmax = std::max(jmax, f.degree());
    }
    if (jmax < 0) return unit_ideal(ring, bound.value_or(0));
    // the default bound leaves a full window of width max_weight above the
    // socle so fullness of the tail is provable
    int top = bound.value_or(jmax + ring->max_weight());
    if (top < jmax + 1) {
        throw std::invalid_argument("annihilator bound must be at least deg F + 1");
    }
    GradedIdeal ideal(ring, top);
    const FieldSpec& field = ring->field();
    for (int d = 0; d <= top; ++d) {
        auto cols = ring->monomial_basis(d);
        if (cols.empty()) continue;
        // stack one contraction block per F_i with deg F_i >= d
        std::vector<std::vector<Monomial>> targets;
        size_t rows = 0;
        for (const auto& f : fs) {
            if (f.degree() >= d) {
                targets.push_back(ring->monomial_basis(f.degree() - d));
                rows += targets.back().size();
            } else {
                targets.emplace_back();
            }
        }
        if (rows == 0) {
            // everything of this degree annihilates
            for (size_t k = 0; k < cols.size(); ++k) {
                std::vector<Scalar> v(cols.size(), Scalar::zero(field));
                v[k] = Scalar::one(field);
                ideal.pieces_[d].insert(std::move(v));
            }
            continue;
        }
        Matrix m(rows, cols.size(), field);
        for (size_t j = 0; j < cols.size(); ++j) {
            Poly mono = Poly::monomial(ring, cols[j], Scalar::one(field));
            size_t row0 = 0;
            for (size_t fi = 0; fi < fs.size(); ++fi) {
                if (targets[fi].empty()) continue;
                auto img = contract(mono, fs[fi]);
                auto co = coordinates(img, targets[fi]);
                for (size_t i = 0; i < co.size(); ++i) m.at(row0 + i, j) = co[i];
                row0 += targets[fi].size();
            }
        }
        for (auto& v : kernel_basis(m)) ideal.pieces_[d].insert(std::move(v));
    }
    ideal.finalize();
    return ideal;
}

GradedIdeal GradedIdeal::from_generators(RingPtr ring, std::span<const Poly> gens, int bound) {
    GradedIdeal ideal(ring, bound);
    for (const Poly& g : gens) {
        require_same_ring(ring, g.ring());
        if (!g.is_homogeneous()) {
            throw std::invalid_argument("ideal generators must be homogeneous");
        }
        if (g.is_zero()) continue;
        int e = g.degree();
        for (int d = e; d <= bound; ++d) {
            auto basis = ring->monomial_basis(d);
            for (const Monomial& m : ring->monomial_basis(d - e)) {
                Poly prod = Poly::monomial(ring, m, Scalar::one(ring->field())) * g;
                ideal.pieces_[d].insert(coordinates(prod, basis));
            }
        }
    }
    ideal.finalize();
    return ideal;
}

GradedIdeal GradedIdeal::colon(std::span<const Poly> j_gens, std::optional<int> bound) const {
    int top = bound.value_or(bound_);
    if (top > bound_) throw std::invalid_argument("colon bound exceeds ideal bound");
    GradedIdeal out(ring_, top);
    const FieldSpec& field = ring_->field();

    // left null space rows per needed target degree
    std::vector<std::optional<std::vector<std::vector<Scalar>>>> lns(bound_ + 1);
    auto left_null = [&](int d) -> const std::vector<std::vector<Scalar>>& {
        if (!lns[d]) {
            Matrix rowsm = Matrix::from_rows(field, pieces_[d].basis_rows());
            if (pieces_[d].dim() == 0) {
                // functionals = all coordinates
                std::vector<std::vector<Scalar>> id;
                size_t n = pieces_[d].ambient();
                for (size_t k = 0; k < n; ++k) {
                    std::vector<Scalar> v(n, Scalar::zero(field));
                    v[k] = Scalar::one(field);
                    id.push_back(std::move(v));
                }
                lns[d] = std::move(id);
            } else {
                lns[d] = kernel_basis(rowsm);
            }
        }
        return *lns[d];
    };

    for (int d = 0; d <= top; ++d) {
        auto cols = ring_->monomial_basis(d);
        if (cols.empty()) continue;
        std::vector<std::vector<Scalar>> rows;
        bool bound_hit = false;
        for (const Poly& g : j_gens) {
            if (g.is_zero()) continue;
            int e = g.degree();
            int target = d + e;
            if (target > bound_) {
                if (full_above_bound_) continue;  // f*g automatically inside
                bound_hit = true;
                break;
            }
            if (is_full_piece(target)) continue;
            const auto& null_rows = left_null(target);
            if (null_rows.empty()) continue;
            auto target_basis = ring_->monomial_basis(target);
            // column j: coordinates of cols[j]*g, then pair with each functional
            std::vector<std::vector<Scalar>> prod_coords;
            prod_coords.reserve(cols.size());
            for (const Monomial& m : cols) {
                Poly prod = Poly::monomial(ring_, m, Scalar::one(field)) * g;
                prod_coords.push_back(coordinates(prod, target_basis));
            }
            for (const auto& nu : null_rows) {
                std::vector<Scalar> row(cols.size(), Scalar::zero(field));
                for (size_t j = 0; j < cols.size(); ++j) {
                    for (size_t k = 0; k < nu.size(); ++k) {
                        if (!nu[k].is_zero() && !prod_coords[j][k].is_zero()) {
                            row[j] += nu[k] * prod_coords[j][k];
                        }
                    }
                }
                rows.push_back(std::move(row));
            }
        }
        if (bound_hit) {
            throw std::out_of_range("colon needs ideal pieces above the stored bound");
        }
        if (rows.empty()) {
            for (size_t k = 0; k < cols.size(); ++k) {
                std::vector<Scalar> v(cols.size(), Scalar::zero(field));
                v[k] = Scalar::one(field);
                out.pieces_[d].insert(std::move(v));
            }
            continue;
        }
        Matrix m = Matrix::from_rows(field, rows);
        for (auto& v : kernel_basis(m)) out.pieces_[d].insert(std::move(v));
    }
    out.finalize();
    return out;
}

GradedIdeal GradedIdeal::colon(const GradedIdeal& j) const {
    require_same_ring(ring_, j.ring_);
    std::vector<Poly> gens;
    gens.reserve(j.min_gens_.size());
    for (const auto& [d, g] : j.min_gens_) gens.push_back(g);
    return colon(gens);
}

GradedIdeal GradedIdeal::product(const GradedIdeal& rhs, int bound) const {
    require_same_ring(ring_, rhs.ring_);
    GradedIdeal out(ring_, bound);
    for (const auto& [e, f] : min_gens_) {
        for (int d = e; d <= bound; ++d) {
            auto basis = ring_->monomial_basis(d);
            for (const Poly& b : rhs.piece_basis(d - e)) {
                out.pieces_[d].insert(coordinates(f * b, basis));
            }
        }
    }
    out.finalize();
    return out;
}

// -------------------------------------------------------------------- perp

std::vector<DualPoly> perp(const GradedIdeal& ideal, int e) {
    if (e < 0) throw std::invalid_argument("perp degree must be >= 0");
    if (e > ideal.bound() && !ideal.full_above_bound()) {
        throw std::out_of_range("perp degree above ideal bound");
    }
    const RingPtr& ring = ideal.ring();
    const FieldSpec& field = ring->field();
    auto gbasis = ring->monomial_basis(e);
    if (gbasis.empty()) return {};
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [d, gen] : ideal.minimal_generators()) {
        if (d > e) continue;
        auto target = ring->monomial_basis(e - d);
        // row block: G |-> coordinates of gen ∘ G
        std::vector<std::vector<Scalar>> cols_coords;
        cols_coords.reserve(gbasis.size());
        for (const Monomial& m : gbasis) {
            auto img = contract(gen, DualPoly::monomial(ring, m, Scalar::one(field)));
            cols_coords.push_back(coordinates(img, target));
        }
        for (size_t r = 0; r < target.size(); ++r) {
            std::vector<Scalar> row(gbasis.size(), Scalar::zero(field));
            for (size_t j = 0; j < gbasis.size(); ++j) row[j] = cols_coords[j][r];
            rows.push_back(std::move(row));
        }
    }
    std::vector<DualPoly> out;
    if (rows.empty()) {
        for (const Monomial& m : gbasis) {
            out.push_back(DualPoly::monomial(ring, m, Scalar::one(field)));
        }
        return out;
    }
    Matrix m = Matrix::from_rows(field, rows);
    for (const auto& v : kernel_basis(m)) {
        out.push_back(dual_from_coordinates(ring, gbasis, v));
    }
    return out;
}

bool contract_contained_in_derivates(const GradedIdeal& ideal, const DualPoly& g,
                                     const DerivateModule& rf) {
    for (const auto& [d, gen] : ideal.minimal_generators()) {
        DualPoly img = contract(gen, g);
        if (!rf.contains(img)) return false;
    }
    return true;
}

bool is_derivate_of(const DualPoly& g, const DualPoly& f) {
    return derivates(f).contains(g);
}

}  // namespace gorext
