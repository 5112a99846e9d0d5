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

#include "gorext/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorext {

Matrix Matrix::identity(size_t n, const FieldSpec& field) {
    Matrix m(n, n, field);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(const FieldSpec& field, const std::vector<std::vector<Scalar>>& rows) {
    size_t r = rows.size();
    size_t c = r ? rows[0].size() : 0;
    Matrix m(r, c, field);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_ || !(field_ == rhs.field_)) {
        throw std::invalid_argument("matrix product shape/field mismatch");
    }
    Matrix r(rows_, rhs.cols_, field_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            const Scalar& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return r;
}

std::vector<Scalar> Matrix::apply(std::span<const Scalar> v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    std::vector<Scalar> r(rows_, Scalar::zero(field_));
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) {
            if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
        }
    }
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_, field_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RrefResult rref(Matrix m) {
    size_t rank = 0;
    std::vector<size_t> pivots;
    for (size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        size_t sel = m.rows();
        for (size_t i = rank; i < m.rows(); ++i) {
            if (!m.at(i, col).is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == m.rows()) continue;
        if (sel != rank) {
            for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(rank, j));
        }
        Scalar inv = m.at(rank, col).inverse();
        for (size_t j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            Scalar f = m.at(i, col);
            for (size_t j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(rank, j);
        }
        pivots.push_back(col);
        ++rank;
    }
    return {std::move(m), rank, std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const FieldSpec& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Scalar> v(m.cols(), Scalar::zero(f));
        v[free_col] = Scalar::one(f);
        for (size_t i = 0; i < r.rank; ++i) {
            v[r.pivot_columns[i]] = -r.reduced.at(i, free_col);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve shape mismatch");
    const FieldSpec& f = m.field();
    Matrix aug(m.rows(), m.cols() + 1, f);
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    RrefResult r = rref(std::move(aug));
    // inconsistent iff the last column is a pivot
    for (size_t c : r.pivot_columns) {
        if (c == m.cols()) return std::nullopt;
    }
    std::vector<Scalar> x(m.cols(), Scalar::zero(f));
    for (size_t i = 0; i < r.rank; ++i) x[r.pivot_columns[i]] = r.reduced.at(i, m.cols());
    return x;
}

// ------------------------------------------------------------------ VecSpace

std::vector<Scalar> VecSpace::reduce(std::vector<Scalar> v) const {
    if (v.size() != ambient_) throw std::invalid_argument("vector ambient mismatch");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Scalar f = c;  // rows are monic at their pivot
        for (size_t j = pivots_[r]; j < ambient_; ++j) {
            if (!rows_[r][j].is_zero()) v[j] -= f * rows_[r][j];
        }
    }
    return v;
}

bool VecSpace::contains(std::span<const Scalar> v) const {
    std::vector<Scalar> copy(v.begin(), v.end());
    copy = reduce(std::move(copy));
    for (const Scalar& c : copy)
        if (!c.is_zero()) return false;
    return true;
}

bool VecSpace::insert(std::vector<Scalar> v) {
    v = reduce(std::move(v));
    size_t pivot = ambient_;
    for (size_t j = 0; j < ambient_; ++j) {
        if (!v[j].is_zero()) {
            pivot = j;
            break;
        }
    }
    if (pivot == ambient_) return false;
    Scalar inv = v[pivot].inverse();
    for (size_t j = pivot; j < ambient_; ++j) v[j] *= inv;
    // back-substitute into existing rows, keep reduced form
    for (auto& row : rows_) {
        const Scalar& c = row[pivot];
        if (c.is_zero()) continue;
        Scalar f = c;
        for (size_t j = pivot; j < ambient_; ++j) {
            if (!v[j].is_zero()) row[j] -= f * v[j];
        }
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < pivot) ++at;
    rows_.insert(rows_.begin() + at, std::move(v));
    pivots_.insert(pivots_.begin() + at, pivot);
    return true;
}

bool VecSpace::same_space(const VecSpace& other) const {
    if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
    for (const auto& row : other.rows_) {
        if (!contains(row)) return false;
    }
    return true;
}

// --------------------------------------------------------------- ParamMatrix

ParamMatrix::ParamMatrix(size_t rows, size_t cols, RingPtr param_ring)
    : rows_(rows), cols_(cols), ring_(std::move(param_ring)), a_(rows * cols, Poly(ring_)) {}

ParamMatrix ParamMatrix::operator*(const ParamMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("parametric product shape mismatch");
    require_same_ring(ring_, rhs.ring_);
    ParamMatrix r(rows_, rhs.cols_, ring_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                r.at(i, j) += at(i, k) * rhs.at(k, j);
            }
        }
    }
    return r;
}

Matrix ParamMatrix::evaluate(std::span<const Scalar> point) const {
    Matrix m(rows_, cols_, ring_->field());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).evaluate(point);
    return m;
}

Poly divide_exact(const Poly& a, const Poly& b) {
    require_same_ring(a.ring(), b.ring());
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = a;
    Poly q(a.ring());
    const auto& lead_b = *b.terms().begin();
    while (!rem.is_zero()) {
        const auto& lead_r = *rem.terms().begin();
        Monomial m(lead_r.first.exps.size());
        for (size_t i = 0; i < m.exps.size(); ++i) {
            m.exps[i] = lead_r.first.exps[i] - lead_b.first.exps[i];
            if (m.exps[i] < 0) throw std::domain_error("inexact polynomial division");
        }
        Poly piece = Poly::monomial(a.ring(), m, lead_r.second / lead_b.second);
        q += piece;
        rem -= piece * b;
    }
    return q;
}

size_t generic_rank(const ParamMatrix& m) {
    // Bareiss with row and column pivot search; all entries stay polynomial.
    size_t rows = m.rows(), cols = m.cols();
    std::vector<std::vector<Poly>> a;
    a.reserve(rows);
    for (size_t i = 0; i < rows; ++i) {
        std::vector<Poly> row;
        row.reserve(cols);
        for (size_t j = 0; j < cols; ++j) row.push_back(m.at(i, j));
        a.push_back(std::move(row));
    }
    Poly prev = Poly::constant(m.param_ring(), Scalar::one(m.param_ring()->field()));
    size_t r = 0;
    std::vector<bool> col_used(cols, false);
    while (r < rows) {
        // smallest nonzero candidate pivot to slow the swell
        size_t pi = rows, pj = cols;
        size_t best_terms = 0;
        for (size_t i = r; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) {
                if (col_used[j] || a[i][j].is_zero()) continue;
                size_t t = a[i][j].term_count();
                if (pi == rows || t < best_terms) {
                    pi = i;
                    pj = j;
                    best_terms = t;
                }
            }
        }
        if (pi == rows) break;
        std::swap(a[pi], a[r]);
        col_used[pj] = true;
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = 0; j < cols; ++j) {
                if (j == pj || col_used[j]) continue;
                Poly num = a[r][pj] * a[i][j] - a[i][pj] * a[r][j];
                a[i][j] = num.is_zero() ? num : divide_exact(num, prev);
            }
            a[i][pj] = Poly(m.param_ring());
        }
        prev = a[r][pj];
        ++r;
    }
    return r;
}

}  // namespace gorext
