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

#ifndef GOREXT_LINALG_HPP
#define GOREXT_LINALG_HPP

#include <optional>
#include <span>
#include <vector>

#include "gorext/poly.hpp"

namespace gorext {

/// Dense row-major matrix of exact field elements.
class Matrix {
   public:
    Matrix(size_t rows, size_t cols, const FieldSpec& field)
        : rows_(rows), cols_(cols), field_(field), a_(rows * cols, Scalar::zero(field)) {}
    static Matrix identity(size_t n, const FieldSpec& field);
    static Matrix from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldSpec& field() const { return field_; }

    const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    Matrix operator*(const Matrix& rhs) const;
    std::vector<Scalar> apply(std::span<const Scalar> v) const;  // M v
    Matrix transposed() const;

   private:
    size_t rows_, cols_;
    FieldSpec field_;
    std::vector<Scalar> a_;
};

struct RrefResult {
    Matrix reduced;
    size_t rank;
    std::vector<size_t> pivot_columns;
};

/// Exact Gauss-Jordan reduction.
RrefResult rref(Matrix m);

/// Basis of the null space {v : Mv = 0}; size = cols - rank.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

/// One solution of Mx = b, or nullopt when inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b);

size_t rank(const Matrix& m);

/// Incrementally maintained row space in reduced echelon form; the workhorse
/// behind graded ideal pieces, derivate spans and membership tests.
class VecSpace {
   public:
    VecSpace(size_t ambient, const FieldSpec& field)
        : ambient_(ambient), field_(field) {}

    size_t ambient() const { return ambient_; }
    size_t dim() const { return rows_.size(); }
    const FieldSpec& field() const { return field_; }

    /// Reduce against the current rows; returns the remainder (zero iff the
    /// vector is contained).
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(std::span<const Scalar> v) const;
    /// Insert the vector; true when the dimension grew.
    bool insert(std::vector<Scalar> v);

    const std::vector<std::vector<Scalar>>& basis_rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    bool same_space(const VecSpace& other) const;

   private:
    size_t ambient_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> rows_;  // reduced echelon, sorted by pivot
    std::vector<size_t> pivots_;
};

/// Matrix over the polynomial ring in adjoined parameters (entries share one
/// parameter RingSpec, rationals).
class ParamMatrix {
   public:
    ParamMatrix(size_t rows, size_t cols, RingPtr param_ring);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const RingPtr& param_ring() const { return ring_; }

    const Poly& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    Poly& at(size_t i, size_t j) { return a_[i * cols_ + j]; }

    ParamMatrix operator*(const ParamMatrix& rhs) const;
    Matrix evaluate(std::span<const Scalar> point) const;

   private:
    size_t rows_, cols_;
    RingPtr ring_;
    std::vector<Poly> a_;
};

/// Rank over the rational-function field k(c_1..c_m), by fraction-free
/// (Bareiss) elimination with polynomial pivots.
size_t generic_rank(const ParamMatrix& m);

/// Exact quotient a/b in the polynomial ring; throws if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);

}  // namespace gorext

#endif
