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

#ifndef GOREXT_RING_HPP
#define GOREXT_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "gorext/field.hpp"

namespace gorext {

/// Exponent vector, one entry per ring variable.  The same struct serves the
/// ordinary ring (x^a) and the divided-power dual (X^[a]); the enclosing
/// polynomial type fixes the interpretation.
struct Monomial {
    std::vector<int> exps;

    Monomial() = default;
    explicit Monomial(size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<int> e) : exps(std::move(e)) {}

    bool is_one() const {
        for (int e : exps)
            if (e != 0) return false;
        return true;
    }
    int total() const {
        int s = 0;
        for (int e : exps) s += e;
        return s;
    }
    bool operator==(const Monomial&) const = default;
};

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

/// A weighted-graded polynomial ring R = k[x_1..x_r], or S = R[t] when the
/// distinguished t-variable is present (always last).  Also describes the
/// divided-power dual ring Q on the same exponent lattice.
class RingSpec {
   public:
    static RingPtr make(std::vector<std::string> names, std::vector<int> weights, FieldSpec field,
                        bool last_is_t = false);

    size_t var_count() const { return names_.size(); }
    const std::string& var_name(size_t i) const { return names_[i]; }
    const std::string& dual_name(size_t i) const { return dual_names_[i]; }
    int weight(size_t i) const { return weights_[i]; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<std::string>& var_names() const { return names_; }
    const FieldSpec& field() const { return field_; }

    bool has_t() const { return has_t_; }
    size_t t_index() const;  // throws when no t
    int t_weight() const;
    int max_weight() const;

    // index of an ordinary / dual variable name, npos-style -1 when absent
    int index_of(std::string_view name) const;
    int dual_index_of(std::string_view name) const;

    /// R from S = R[t] (drops the t-variable).
    RingPtr without_t() const;
    /// S = R[t] from R (appends a variable named "t" of the given weight).
    RingPtr with_t(int t_weight) const;

    int weighted_degree(const Monomial& m) const;

    /// Ascending graded-lex order: weighted degree first, then lexicographic
    /// by the declared variable order.
    bool monomial_less(const Monomial& a, const Monomial& b) const;

    /// All monomials of weighted degree d, descending term order (leading
    /// monomial first).  Size is r_d = dim_k R_d.
    std::vector<Monomial> monomial_basis(int d) const;
    int dim_piece(int d) const;

    bool same(const RingSpec& other) const;
    std::string to_string() const;

   private:
    RingSpec() = default;

    std::vector<std::string> names_;
    std::vector<std::string> dual_names_;
    std::vector<int> weights_;
    FieldSpec field_;
    bool has_t_ = false;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace gorext

#endif
