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

#ifndef GOREXT_EXTENSION_HPP
#define GOREXT_EXTENSION_HPP

#include "gorext/algebra.hpp"

namespace gorext {

/// Input data for the dual-generator family
///   F = T^[n-1] F_B + T^[n-2] G_1 + ... + G_{n-1}  in Q_S,  S = R[t],
/// describing candidate free extensions of A = k[t]/(t^n) with fiber
/// B = R/Ann(F_B).  Nonzero G_i must have deg G_i = j_B + i*w(t); zeros are
/// allowed (and stand for missing terms).
struct ExtensionInput {
    RingPtr base_ring;          // R, no t-variable
    int n = 1;                  // A = k[t]/(t^n)
    int t_weight = 1;           // w(t)
    DualPoly fiber_dual;        // F_B over Q_R
    std::vector<DualPoly> g;    // G_1..G_{n-1} over Q_R

    const DualPoly& g_form(int i) const;  // G_i with G_0 = F_B, 0 <= i <= n-1
    RingPtr extended_ring() const;        // S = R[t]
    void validate() const;
};

/// F = T^[n-1] G_0 + ... + G_{n-1} in Q_S (error names the offending G_i on
/// a degree mismatch).
DualPoly assemble_dual_generator(const ExtensionInput& in);

/// Inverse of assemble_dual_generator: reads n and the raw T-coefficients off
/// a homogeneous F over Q_S.
ExtensionInput expand_in_t(const DualPoly& f_over_qs);

/// Nested chain I_0 = Ann(G_0), I_i = (I_{i-1} : Ann(G_i)); Ann(0) is the
/// unit ideal, so zero G_i leave the chain unchanged.
std::vector<GradedIdeal> nested_ideals(const ExtensionInput& in);

struct LiftingEntry {
    Poly generator;              // minimal generator of Ann(F_B)
    std::optional<Poly> witness; // t^{n-1}g_0 + ... + t g_{n-2} + generator in Ann(F)
};

struct DimensionCheck {
    int dim_c = 0;
    int dim_a_times_b = 0;
    bool equal = false;
};

struct FreeExtReport {
    int n = 1;
    int t_weight = 1;
    DualPoly f;        // assembled dual generator over Q_S
    DualPoly fiber;    // F_B
    std::vector<DualPoly> g;

    HilbertFunction h_a, h_b, h_c, h_tensor;

    std::vector<bool> sufficient;   // per i = 0..n-1 (i = n-1 vacuous, auto-pass)
    bool sufficient_all = false;
    std::vector<bool> necessary;    // per i = 1..n-1
    bool necessary_all = false;
    std::vector<bool> squared;      // (I_B)^2 ∘ G_i ⊆ R∘F_B, per i = 1..n-1
    std::optional<bool> corollary;  // only for the corollary shape (G_1..G_{n-2} = 0)
    std::vector<LiftingEntry> lifting;
    bool lifting_all = false;
    DimensionCheck dimension;
    bool free = false;              // decided by the lifting test
    std::vector<std::string> warnings;
};

/// Per-i containments I_i ∘ G_{n-1-i} ⊆ R∘F_B from the main sufficiency
/// theorem; the i = n-1 entry is vacuous and auto-passes.
std::vector<bool> check_sufficient(const ExtensionInput& in);
std::vector<bool> check_sufficient(const ExtensionInput& in,
                                   const std::vector<GradedIdeal>& chain);

/// Per-i containments I_0 ∘ G_i ⊆ sum_{j<i} R∘G_j (necessary direction),
/// i = 1..n-1.
std::vector<bool> check_necessary(const ExtensionInput& in);

/// (I_B)^2 ∘ G = 0 test for the corollary shape (only G_{n-1} nonzero);
/// throws "corollary shape not matched" otherwise.
bool check_corollary(const ExtensionInput& in);

/// The weaker per-i conditions (I_B)^2 ∘ G_i ⊆ R∘F_B, i = 1..n-1.
std::vector<bool> check_squared(const ExtensionInput& in);

/// For each minimal generator g of Ann(F_B), solve the block linear system
///   sum_{k=0}^{n-1-i} g_{k+i} ∘ G_k = 0,  i = 0..n-2
/// for g_0..g_{n-2} (g_{n-1} = g), returning an explicit witness
/// t^{n-1}g_0 + ... + g or a refutation.  Witnesses are re-verified by
/// contraction against F, and each solved g_i is checked to lie in I_{n-1-i}.
std::vector<LiftingEntry> lifting_test(const ExtensionInput& in);

DimensionCheck dimension_test(const ExtensionInput& in);

/// Runs every certificate, asserts the implication lattice
/// (sufficient => free, free <=> dimension-equal, free => necessary,
/// corollary <=> free on its shape) and packages the verdicts.
FreeExtReport full_report(const ExtensionInput& in);

/// Projective-bundle form F = F_B T^[k] + (h_1∘F_B) T^[k+1] + ... over Q_S with
/// deg h_i = i (fiber k[t]/(t^{k+1}), base R/Ann(F_B)).
DualPoly pbi_dual_generator(const DualPoly& theta, std::span<const Poly> hs, int k);

/// dim { G in Q_{d+1} : (I_B)^2 ∘ G = 0 }, d = deg F_B (perp of the
/// degree-(d+1) piece of (I_B)^2; always >= r).
int admissible_g_dimension(const DualPoly& fiber_dual);

}  // namespace gorext

#endif
