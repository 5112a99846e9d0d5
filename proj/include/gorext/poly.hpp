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

#ifndef GOREXT_POLY_HPP
#define GOREXT_POLY_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gorext/ring.hpp"

namespace gorext {

namespace detail {

/// Descending graded-lex, so map iteration starts at the leading term.
struct TermGreater {
    RingPtr ring;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return ring->monomial_less(b, a);
    }
};

using TermMap = std::map<Monomial, Scalar, TermGreater>;

}  // namespace detail

class DualPoly;

/// Sparse exact-coefficient polynomial in the ordinary ring R (or S = R[t]).
class Poly {
   public:
    Poly() = default;             // empty shell, unusable until assigned
    explicit Poly(RingPtr ring);  // zero
    static Poly constant(RingPtr ring, const Scalar& c);
    static Poly variable(RingPtr ring, size_t i);
    static Poly monomial(RingPtr ring, const Monomial& m, const Scalar& c);
    /// Grammar: terms joined by `+`/`-`; a term is `coef * var^k` factors with
    /// `*` separators; whitespace insignificant.
    static Poly parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const detail::TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;

    bool is_homogeneous() const;
    /// Common weighted degree of all terms; nullopt for non-homogeneous.
    /// The zero polynomial reports degree -1 via degree().
    std::optional<int> homogeneous_degree() const;
    int degree() const;  // max weighted degree over terms, -1 for zero

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly operator+(const Poly& rhs) const;
    Poly operator-(const Poly& rhs) const;
    Poly operator*(const Poly& rhs) const;  // ordinary commutative product
    Poly operator*(const Scalar& c) const;
    bool operator==(const Poly& rhs) const;
    bool operator!=(const Poly& rhs) const { return !(*this == rhs); }

    /// Full evaluation at a point (one Scalar per variable).
    Scalar evaluate(std::span<const Scalar> point) const;
    /// Image under t |-> 0 within the same ring.
    Poly substitute_zero(size_t var) const;
    /// Graded part of the given weighted degree.
    Poly graded_part(int d) const;

    /// Reinterpret in a ring whose variables extend this one's (new ones get
    /// exponent zero).
    Poly lift_to(RingPtr bigger) const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Scalar& c);  // accumulate, dropping zeros

   private:
    RingPtr ring_;
    detail::TermMap terms_;
};

/// Sparse polynomial in the divided-power dual ring Q_R (or Q_S).  A monomial
/// with exponents (a_1..a_r) is X_1^[a_1]...X_r^[a_r]; products carry the
/// binomial structure constants X^[i] X^[j] = binom(i+j, j) X^[i+j].
class DualPoly {
   public:
    DualPoly() = default;             // empty shell, unusable until assigned
    explicit DualPoly(RingPtr ring);  // zero
    static DualPoly constant(RingPtr ring, const Scalar& c);
    static DualPoly variable(RingPtr ring, size_t i);
    static DualPoly monomial(RingPtr ring, const Monomial& m, const Scalar& c);
    /// Same grammar as Poly with dual (uppercased) variable names; `X^k` and
    /// `X^[k]` both denote the divided power X^[k].
    static DualPoly parse(RingPtr ring, std::string_view text);

    const RingPtr& ring() const { return ring_; }
    const detail::TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    Scalar coefficient(const Monomial& m) const;

    bool is_homogeneous() const;
    std::optional<int> homogeneous_degree() const;
    int degree() const;

    DualPoly operator-() const;
    DualPoly& operator+=(const DualPoly& rhs);
    DualPoly& operator-=(const DualPoly& rhs);
    DualPoly operator+(const DualPoly& rhs) const;
    DualPoly operator-(const DualPoly& rhs) const;
    DualPoly operator*(const DualPoly& rhs) const;  // divided-power product
    DualPoly operator*(const Scalar& c) const;
    bool operator==(const DualPoly& rhs) const;
    bool operator!=(const DualPoly& rhs) const { return !(*this == rhs); }

    DualPoly lift_to(RingPtr bigger) const;
    /// Coefficient of T^[k] as a dual polynomial over the ring without t.
    DualPoly t_coefficient(int k) const;
    int t_degree() const;  // max T-exponent, -1 for zero

    /// Transport to the ordinary-power view X^[a] -> X^a / prod a_i!, under
    /// which contraction on divided powers becomes partial differentiation:
    /// (g o F) transported equals the derivative action of g on the
    /// transported F.  Requires char 0 or char p > deg.
    DualPoly to_derivative_basis() const;
    DualPoly from_derivative_basis() const;

    std::string to_string() const;

    void add_term(const Monomial& m, const Scalar& c);

   private:
    RingPtr ring_;
    detail::TermMap terms_;
};

/// Contraction action of R on Q: x_i^s ∘ X_j^[k] = delta_ij X_i^[k-s],
/// extended k-bilinearly.  (g·h)∘F = g∘(h∘F).
DualPoly contract(const Poly& g, const DualPoly& F);

/// Partial-differentiation action on ordinary-power coefficients (the
/// derivative-basis view produced by to_derivative_basis).
DualPoly contract_derivative(const Poly& g, const DualPoly& F_ordinary);

/// Coordinates with respect to an explicit monomial basis (throws if a term
/// falls outside the basis).
std::vector<Scalar> coordinates(const Poly& p, std::span<const Monomial> basis);
std::vector<Scalar> coordinates(const DualPoly& p, std::span<const Monomial> basis);
Poly poly_from_coordinates(RingPtr ring, std::span<const Monomial> basis,
                           std::span<const Scalar> coords);
DualPoly dual_from_coordinates(RingPtr ring, std::span<const Monomial> basis,
                               std::span<const Scalar> coords);

/// Clear denominators and content, make the leading coefficient positive
/// (rationals) or 1 (prime fields).  Spans are unchanged; printing becomes
/// stable for reports.
Poly normalized(const Poly& p);

}  // namespace gorext

#endif
