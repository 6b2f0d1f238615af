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

#include "pftrace/oracles.hpp"

#include <vector>

namespace pftrace {
namespace {

// Row r picks an unused column; the number of still-unused columns left of
// the pick is the count of inversions row r contributes.
template <Scalar T>
void permutation_sum(const Matrix<T>& c, std::size_t row, std::vector<bool>& used,
                     const T& partial, bool negative, T& acc) {
    const std::size_t n = c.dim();
    if (row == n) {
        if (negative) acc -= partial; else acc += partial;
        return;
    }
    std::size_t free_left = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (used[col]) continue;
        const T& entry = c(row, col);
        if (!ScalarTraits<T>::is_zero(entry)) {
            used[col] = true;
            permutation_sum(c, row + 1, used, T(partial * entry), negative != (free_left % 2 == 1), acc);
            used[col] = false;
        }
        ++free_left;
    }
}

// Pair the smallest free index with every later free index; the sign is the
// parity of the partner's position among the remaining free indices.
template <Scalar T>
void matching_sum(const Matrix<T>& a, std::vector<std::size_t>& free, const T& partial,
                  bool negative, T& acc) {
    if (free.empty()) {
        if (negative) acc -= partial; else acc += partial;
        return;
    }
    const std::size_t first = free.front();
    for (std::size_t pos = 1; pos < free.size(); ++pos) {
        const std::size_t partner = free[pos];
        const T& entry = a(first, partner);
        if (ScalarTraits<T>::is_zero(entry)) continue;
        std::vector<std::size_t> rest;
        rest.reserve(free.size() - 2);
        for (std::size_t k = 1; k < free.size(); ++k)
            if (k != pos) rest.push_back(free[k]);
        matching_sum(a, rest, T(partial * entry), negative != ((pos - 1) % 2 == 1), acc);
    }
}

template <Scalar T>
T pf_of_indices(const Matrix<T>& a, std::vector<std::size_t> free) {
    T acc(0);
    matching_sum(a, free, T(1), false, acc);
    return acc;
}

template <Scalar T>
Matrix<T> minor_matrix(const Matrix<T>& c, std::size_t skip_row, std::size_t skip_col) {
    const std::size_t n = c.dim();
    Matrix<T> m(n - 1);
    for (std::size_t i = 0, mi = 0; i < n; ++i) {
        if (i == skip_row) continue;
        for (std::size_t j = 0, mj = 0; j < n; ++j) {
            if (j == skip_col) continue;
            m(mi, mj++) = c(i, j);
        }
        ++mi;
    }
    return m;
}

}  // namespace

template <Scalar T>
T det_definition(const Matrix<T>& c, const OracleLimits& limits) {
    if (c.dim() > limits.max_det_dim) throw DimensionTooLargeForOracle(c.dim(), limits.max_det_dim);
    std::vector<bool> used(c.dim(), false);
    T acc(0);
    permutation_sum(c, 0, used, T(1), false, acc);
    return acc;
}

template <Scalar T>
T pf_definition(const SkewMatrix<T>& a, const OracleLimits& limits) {
    if (a.dim() % 2 != 0) throw OddDimension(a.dim());
    if (a.dim() > limits.max_pf_dim) throw DimensionTooLargeForOracle(a.dim(), limits.max_pf_dim);
    std::vector<std::size_t> free(a.dim());
    for (std::size_t i = 0; i < free.size(); ++i) free[i] = i;
    return pf_of_indices(a.matrix(), std::move(free));
}

template <Scalar T>
Matrix<T> adjugate_definition(const Matrix<T>& c, const OracleLimits& limits) {
    const std::size_t n = c.dim();
    if (n > limits.max_det_dim) throw DimensionTooLargeForOracle(n, limits.max_det_dim);
    Matrix<T> adj(n);
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T cofactor = det_definition(minor_matrix(c, i, j), limits);
            if ((i + j) % 2 == 1) cofactor = -cofactor;
            adj(j, i) = cofactor;
        }
    }
    return adj;
}

template <Scalar T>
Matrix<T> pf_adjugate_definition(const SkewMatrix<T>& a, const OracleLimits& limits) {
    const std::size_t n = a.dim();
    if (n % 2 != 0) throw OddDimension(n);
    if (n > limits.max_pf_dim) throw DimensionTooLargeForOracle(n, limits.max_pf_dim);
    Matrix<T> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<std::size_t> free;
            free.reserve(n - 2);
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && k != j) free.push_back(k);
            T minor = pf_of_indices(a.matrix(), std::move(free));
            const bool negative = (i + j + 1 + (i > j ? 1 : 0)) % 2 == 1;
            out(j, i) = negative ? T(-minor) : minor;
        }
    }
    return out;
}

#define PFTRACE_INSTANTIATE(T)                                                        \
    template T det_definition(const Matrix<T>&, const OracleLimits&);                 \
    template T pf_definition(const SkewMatrix<T>&, const OracleLimits&);              \
    template Matrix<T> adjugate_definition(const Matrix<T>&, const OracleLimits&);    \
    template Matrix<T> pf_adjugate_definition(const SkewMatrix<T>&, const OracleLimits&);

PFTRACE_INSTANTIATE(Rational)
PFTRACE_INSTANTIATE(double)

#undef PFTRACE_INSTANTIATE

}  // namespace pftrace
