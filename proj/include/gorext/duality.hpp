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

#ifndef GOREXT_DUALITY_HPP
#define GOREXT_DUALITY_HPP

#include <optional>
#include <utility>

#include "gorext/linalg.hpp"

namespace gorext {

/// Per-degree bases of the derivate spaces (R∘F)_e for 0 <= e <= deg F.
/// Macaulay duality: dim (R∘F)_e = dim (R/Ann F)_{deg F - e}.
class DerivateModule {
   public:
    DerivateModule(RingPtr ring, int socle_degree);

    const RingPtr& ring() const { return ring_; }
    int socle_degree() const { return j_; }
    int dim(int e) const;
    /// Membership of a homogeneous dual polynomial in its graded piece;
    /// zero is contained everywhere, degrees above j contain only zero.
    bool contains(const DualPoly& v) const;
    std::vector<DualPoly> piece_basis(int e) const;
    const VecSpace& piece(int e) const;
    VecSpace& piece_mutable(int e);

   private:
    RingPtr ring_;
    int j_;
    std::vector<VecSpace> pieces_;
};

DerivateModule derivates(const DualPoly& F);

/// Graded pieces of a homogeneous ideal I of R up to a degree bound, plus a
/// minimal generator list.  Pieces above the bound are answered through the
/// full-above-bound flag (valid because everything here is Artinian).
class GradedIdeal {
   public:
    /// Ann_R(F): degree-wise kernel of the contraction map R_d -> Q_{deg F-d}.
    /// Default bound is deg F + 1.  Ann(0) is the unit ideal.
    static GradedIdeal annihilator(const DualPoly& F, std::optional<int> bound = std::nullopt);
    static GradedIdeal annihilator_of_set(std::span<const DualPoly> fs,
                                          std::optional<int> bound = std::nullopt);
    static GradedIdeal from_generators(RingPtr ring, std::span<const Poly> gens, int bound);
    static GradedIdeal unit_ideal(RingPtr ring, int bound);
    static GradedIdeal zero_ideal(RingPtr ring, int bound);

    const RingPtr& ring() const { return ring_; }
    int bound() const { return bound_; }
    bool full_above_bound() const { return full_above_bound_; }
    /// Largest d with I_d != R_d, or -1 for the unit ideal.
    int socle_degree() const { return socle_degree_; }

    int dim_piece(int d) const;
    bool is_full_piece(int d) const;
    const VecSpace& piece(int d) const;
    std::vector<Poly> piece_basis(int d) const;  // materialized, works above bound when full

    const std::vector<std::pair<int, Poly>>& minimal_generators() const { return min_gens_; }

    bool contains(const Poly& f) const;
    bool contains(const GradedIdeal& other) const;  // other ⊆ this, degree-wise
    bool equals(const GradedIdeal& other) const;

    /// Colon ideal (I : J) for J given by generators: degree-wise kernel of
    /// the maps f -> [f·g mod I_{d+deg g}] assembled from the left null
    /// spaces of the I pieces.
    GradedIdeal colon(std::span<const Poly> j_gens, std::optional<int> bound = std::nullopt) const;
    GradedIdeal colon(const GradedIdeal& j) const;

    /// Product ideal I·J up to the bound.
    GradedIdeal product(const GradedIdeal& rhs, int bound) const;

   private:
    GradedIdeal(RingPtr ring, int bound);
    void finalize();  // socle degree, saturation window check, minimal generators

    RingPtr ring_;
    int bound_;
    std::vector<VecSpace> pieces_;
    std::vector<std::pair<int, Poly>> min_gens_;
    bool full_above_bound_ = false;
    int socle_degree_ = -1;
};

/// Basis of (I_e)^⊥ = {G in Q_e : I∘G = 0} (constraints from the minimal
/// generators of degree <= e suffice since I is an ideal).
std::vector<DualPoly> perp(const GradedIdeal& ideal, int e);

/// I∘G ⊆ R∘F test, degree-wise via the minimal generators of I (sufficient:
/// R∘F is an R-submodule of Q).
bool contract_contained_in_derivates(const GradedIdeal& ideal, const DualPoly& g,
                                     const DerivateModule& rf);

/// G ∈ R∘F.
bool is_derivate_of(const DualPoly& g, const DualPoly& f);

}  // namespace gorext

#endif
