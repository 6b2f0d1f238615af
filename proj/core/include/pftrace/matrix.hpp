/*
 * Copyright 2026 The pftrace Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "pftrace/errors.hpp"
#include "pftrace/scalar.hpp"

namespace pftrace {

/// Dense square matrix stored row-major. Value type; copies are deep.
template <Scalar T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;

    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim, T(0)) {}

    Matrix(std::size_t dim, std::vector<T> entries) : dim_(dim), data_(std::move(entries)) {
        if (data_.size() != dim_ * dim_) {
            throw DimensionMismatch(dim_ * dim_, data_.size());
        }
    }

    /// Row-wise literal, e.g. Matrix<Rational>{{1, 2}, {3, 4}}.
    Matrix(std::initializer_list<std::initializer_list<T>> rows) : dim_(rows.size()) {
        data_.reserve(dim_ * dim_);
        for (const auto& row : rows) {
            if (row.size() != dim_) throw DimensionMismatch(dim_, row.size());
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return dim_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    std::span<T> row(std::size_t i) { return {data_.data() + i * dim_, dim_}; }
    std::span<const T> row(std::size_t i) const { return {data_.data() + i * dim_, dim_}; }

    std::span<const T> entries() const noexcept { return data_; }
    std::span<T> entries() noexcept { return data_; }

    Matrix transpose() const {
        Matrix t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T acc(0);
        for (std::size_t i = 0; i < dim_; ++i) acc += (*this)(i, i);
        return acc;
    }

    Matrix& operator+=(const Matrix& other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& other) {
        require_same_dim(other);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& factor) {
        for (auto& v : data_) v *= factor;
        return *this;
    }

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(Matrix lhs, const T& factor) { return lhs *= factor; }
    friend Matrix operator*(const T& factor, Matrix rhs) { return rhs *= factor; }
    friend Matrix operator-(Matrix m) {
        for (auto& v : m.data_) v = -v;
        return m;
    }

    friend bool operator==(const Matrix& lhs, const Matrix& rhs) {
        return lhs.dim_ == rhs.dim_ && lhs.data_ == rhs.data_;
    }

private:
    void require_same_dim(const Matrix& other) const {
        if (other.dim_ != dim_) throw DimensionMismatch(dim_, other.dim_);
    }

    std::size_t dim_ = 0;
    std::vector<T> data_;
};

/// Standard matrix product. Exact in the rational regime.
template <Scalar T>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y);

template <Scalar T>
Matrix<T> operator*(const Matrix<T>& x, const Matrix<T>& y) {
    return mat_mul(x, y);
}

/// tr(X·Y) without forming the product: O(n²).
template <Scalar T>
T trace_of_product(const Matrix<T>& x, const Matrix<T>& y);

/// Largest entry magnitude, as a double in both regimes.
template <Scalar T>
double max_magnitude(const Matrix<T>& m);

// Float-regime tolerances; the exact regime always uses literal equality.

/// Skew check: |X[i][j] + X[j][i]| ≤ kSkewTolerance · max|X|.
inline constexpr double kSkewTolerance = 1e-12;
/// Identity residuals: |entry| ≤ kResidualTolerance · (1 + max input entry).
inline constexpr double kResidualTolerance = 1e-9;
/// Relative threshold below which a float determinant or pivot is zero.
inline constexpr double kSingularityTolerance = 1e-12;

template <Scalar T>
class SkewMatrix;

/// Wraps `x` if it is skew-symmetric: exactly for rationals, within
/// `tolerance · max|x|` for floats. Throws NotSkew naming the first
/// offending (row, col) in row-major order with row > col.
template <Scalar T>
SkewMatrix<T> check_skew(Matrix<T> x, double tolerance = kSkewTolerance);

/// (X − Xᵀ)/2, skew by construction.
template <Scalar T>
SkewMatrix<T> skew_part(const Matrix<T>& x);

/// A square matrix verified at construction to satisfy Xᵀ = −X.
template <Scalar T>
class SkewMatrix {
public:
    const Matrix<T>& matrix() const noexcept { return inner_; }
    std::size_t dim() const noexcept { return inner_.dim(); }
    const T& operator()(std::size_t i, std::size_t j) const { return inner_(i, j); }

    /// Half of the dimension; throws OddDimension when dim is odd.
    std::size_t half_dim() const {
        if (inner_.dim() % 2 != 0) throw OddDimension(inner_.dim());
        return inner_.dim() / 2;
    }

    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) { return a.inner_ == b.inner_; }

private:
    explicit SkewMatrix(Matrix<T> inner) : inner_(std::move(inner)) {}

    template <Scalar U>
    friend SkewMatrix<U> check_skew(Matrix<U> x, double tolerance);
    template <Scalar U>
    friend SkewMatrix<U> skew_part(const Matrix<U>& x);

    Matrix<T> inner_;
};

/// The block-diagonal reference matrix diag([[0,1],[−1,0]], ...) of
/// dimension 2·half_dim. Its Pfaffian is 1 and its inverse is its negative.
template <Scalar T>
SkewMatrix<T> reference_skew(std::size_t half_dim);

/// tr(M¹), …, tr(M^L); `traces[l-1]` holds tr(M^l).
template <Scalar T>
struct TraceVector {
    std::vector<T> traces;

    std::size_t size() const noexcept { return traces.size(); }
    /// tr(M^power), power is 1-based.
    const T& operator[](std::size_t power) const { return traces.at(power - 1); }
};

/// Traces of M¹…M^L by L−1 sequential multiplications (the last trace is
/// taken from a product trace, so only L−2 full products are formed).
template <Scalar T>
TraceVector<T> trace_powers(const Matrix<T>& m, std::size_t max_power);

/// Powers M⁰…M^max_power together with the traces of M¹…M^trace_power.
/// Identities that need both share this one pass.
template <Scalar T>
struct PowerTable {
    std::vector<Matrix<T>> powers;
    TraceVector<T> traces;
};

template <Scalar T>
PowerTable<T> power_table(const Matrix<T>& m, std::size_t max_power, std::size_t trace_power);

}  // namespace pftrace
