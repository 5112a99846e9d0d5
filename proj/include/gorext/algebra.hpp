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

#ifndef GOREXT_ALGEBRA_HPP
#define GOREXT_ALGEBRA_HPP

#include "gorext/duality.hpp"

namespace gorext {

/// Graded-piece dimensions indexed from 0; trailing zeros trimmed.  Interior
/// zeros are kept (weighted gradings produce them, e.g. (1,0,0,1)).
class HilbertFunction {
   public:
    HilbertFunction() = default;
    explicit HilbertFunction(std::vector<int> h);

    int operator[](int d) const {
        return (d < 0 || d >= static_cast<int>(h_.size())) ? 0 : h_[d];
    }
    int size() const { return static_cast<int>(h_.size()); }
    int top_degree() const { return size() - 1; }
    int total() const;
    bool symmetric() const;  // H_i == H_{j-i}
    const std::vector<int>& values() const { return h_; }

    bool operator==(const HilbertFunction&) const = default;
    std::string to_string() const;  // "(1,3,3,1)"

   private:
    std::vector<int> h_;
};

/// (H_A ⊗ H_B)_d = sum_e H_A(e) H_B(d-e).
HilbertFunction tensor_hilbert(const HilbertFunction& a, const HilbertFunction& b);

/// A graded Artinian quotient A = R/I with per-degree monomial coset bases.
class ArtinianAlgebra {
   public:
    /// Throws "not Artinian within bound" when I is not provably full above
    /// its stored bound.
    static ArtinianAlgebra quotient(RingPtr ring, GradedIdeal ideal);

    const RingPtr& ring() const { return ring_; }
    const GradedIdeal& ideal() const { return ideal_; }
    const HilbertFunction& hilbert() const { return hilbert_; }
    int socle_degree() const { return socle_degree_; }
    int total_dim() const { return total_dim_; }

    /// Monomial coset representatives spanning A_d (non-pivot columns of the
    /// RREF of I_d, greedy in canonical term order).
    const std::vector<Monomial>& coset_basis(int d) const;
    /// Position of (d, pos) in the degree-major total basis.
    size_t total_index(int d, size_t pos) const;
    std::vector<Poly> total_basis_polys() const;

    /// Coordinates of the class of a homogeneous part in degree d.
    std::vector<Scalar> reduce_to_coords(const Poly& p, int d) const;
    /// Normal form of an arbitrary polynomial modulo I (degrees above the
    /// socle vanish).
    Poly normal_form(const Poly& p) const;

    /// Multiplication by an arbitrary element on the total basis.
    Matrix multiplication_matrix(const Poly& ell) const;
    /// Graded block A_d -> A_{d + deg g} of multiplication by homogeneous g.
    Matrix multiplication_block(const Poly& g, int d) const;

    /// Per-degree socle (0 : m_A) bases; type(A) = total socle dimension.
    std::vector<std::vector<Poly>> socle_basis() const;
    int type() const;
    bool is_gorenstein() const { return type() == 1; }

    struct PoincareReport {
        bool poincare_duality;
        std::vector<int> pairing_ranks;  // rank of A_i x A_{j-i} -> A_j per i
    };
    PoincareReport poincare_duality() const;

    /// dim A_i = min{r_i, r_{j-i}} for 1 <= i <= j/2 (requires Gorenstein).
    bool is_compressed() const;

   private:
    ArtinianAlgebra(RingPtr ring, GradedIdeal ideal);

    RingPtr ring_;
    GradedIdeal ideal_;
    HilbertFunction hilbert_;
    int socle_degree_ = 0;
    int total_dim_ = 0;
    std::vector<std::vector<Monomial>> coset_;   // per degree 0..j
    std::vector<size_t> degree_offset_;          // into the total basis
};

}  // namespace gorext

#endif
