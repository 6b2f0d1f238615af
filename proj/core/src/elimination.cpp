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

#include "pftrace/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace pftrace {
namespace {

// Float kernel on a private row-major copy.
EliminationReport<double> pf_elimination_float(const Matrix<double>& input) {
    const std::size_t n = input.dim();
    std::vector<double> a(input.entries().begin(), input.entries().end());
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    EliminationReport<double> report{1.0, 1, 0, max_magnitude(input)};
    double& growth = *report.growth;
    std::vector<double> tau(n), pivot_col(n);

    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t kp = k + 1;
        double best = std::fabs(at(k + 1, k));
        for (std::size_t i = k + 2; i < n; ++i) {
            if (std::fabs(at(i, k)) > best) {
                best = std::fabs(at(i, k));
                kp = i;
            }
        }
        if (kp != k + 1) {
            for (std::size_t j = k; j < n; ++j) std::swap(at(k + 1, j), at(kp, j));
            for (std::size_t i = k; i < n; ++i) std::swap(at(i, k + 1), at(i, kp));
            ++report.swap_count;
            report.pivot_sign = -report.pivot_sign;
        }

        const double pivot = at(k, k + 1);
        if (pivot == 0.0) {
            report.value = 0.0;
            return report;
        }
        report.value *= pivot;

        const std::size_t lo = k + 2;
        if (lo >= n) continue;
        for (std::size_t j = lo; j < n; ++j) {
            tau[j] = at(k, j) / pivot;
            pivot_col[j] = at(j, k + 1);
        }
        for (std::size_t i = lo; i < n; ++i) {
            double* row = &a[i * n];
            const double ti = tau[i];
            const double vi = pivot_col[i];
            double row_max = 0.0;
            for (std::size_t j = lo; j < n; ++j) {
                row[j] += ti * pivot_col[j] - vi * tau[j];
            }
            for (std::size_t j = lo; j < n; ++j) row_max = std::max(row_max, std::fabs(row[j]));
            growth = std::max(growth, row_max);
        }
    }
    report.value *= report.pivot_sign;
    return report;
}

EliminationReport<Rational> pf_elimination_exact(const Matrix<Rational>& input) {
    const std::size_t n = input.dim();
    Matrix<Rational> a = input;
    EliminationReport<Rational> report{Rational(1), 1, 0, std::nullopt};
    std::vector<Rational> tau(n), pivot_col(n);
    Rational tmp;

    for (std::size_t k = 0; k + 1 < n; k += 2) {
        std::size_t kp = n;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(a(i, k)) != 0) {
                kp = i;
                break;
            }
        }
        if (kp == n) {
            report.value = 0;
            return report;
        }
        if (kp != k + 1) {
            for (std::size_t j = k; j < n; ++j) std::swap(a(k + 1, j), a(kp, j));
            for (std::size_t i = k; i < n; ++i) std::swap(a(i, k + 1), a(i, kp));
            ++report.swap_count;
            report.pivot_sign = -report.pivot_sign;
        }

        const Rational pivot = a(k, k + 1);
        report.value *= pivot;

        const std::size_t lo = k + 2;
        for (std::size_t j = lo; j < n; ++j) {
            tau[j] = a(k, j) / pivot;
            pivot_col[j] = a(j, k + 1);
        }
        for (std::size_t i = lo; i < n; ++i) {
            for (std::size_t j = lo; j < n; ++j) {
                tmp = tau[i] * pivot_col[j] - pivot_col[i] * tau[j];
                a(i, j) += tmp;
            }
        }
    }
    if (report.pivot_sign < 0) report.value = -report.value;
    return report;
}

}  // namespace

template <Scalar T>
EliminationReport<T> pf_elimination(const SkewMatrix<T>& a) {
    a.half_dim();
    if constexpr (is_exact_v<T>) {
        return pf_elimination_exact(a.matrix());
    } else {
        return pf_elimination_float(a.matrix());
    }
}

template <Scalar T>
LuResult<T> lu_det_inverse(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    Matrix<T> lu = c;
    Matrix<T> inv = Matrix<T>::identity(n);
    LuResult<T> result{T(1), std::nullopt, 0};
    bool singular = false;
    const double zero_bound = is_exact_v<T> ? 0.0 : kSingularityTolerance * max_magnitude(c);

    // Gauss–Jordan on [C | I]; det from the pivot product and swap parity.
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        if constexpr (is_exact_v<T>) {
            while (p < n && sgn(lu(p, k)) == 0) ++p;
        } else {
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::fabs(lu(i, k)) > std::fabs(lu(p, k))) p = i;
        }
        if (p == n || ScalarTraits<T>::magnitude(lu(p, k)) <= zero_bound) {
            if (p == n || ScalarTraits<T>::is_zero(lu(p, k))) {
                result.det = T(0);
                return result;
            }
            // Float pivot is tiny but nonzero: keep going for det, drop the inverse.
            singular = true;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(lu(k, j), lu(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
            ++result.swap_count;
        }
        const T pivot = lu(k, k);
        result.det *= pivot;
        const T inv_pivot = T(1) / pivot;
        for (std::size_t j = 0; j < n; ++j) {
            lu(k, j) *= inv_pivot;
            inv(k, j) *= inv_pivot;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const T factor = lu(i, k);
            if (ScalarTraits<T>::is_zero(factor)) continue;
            for (std::size_t j = 0; j < n; ++j) {
                lu(i, j) -= factor * lu(k, j);
                inv(i, j) -= factor * inv(k, j);
            }
        }
    }
    if (result.swap_count % 2 == 1) result.det = -result.det;
    if (!singular) result.inverse = std::move(inv);
    return result;
}

template EliminationReport<Rational> pf_elimination(const SkewMatrix<Rational>&);
template EliminationReport<double> pf_elimination(const SkewMatrix<double>&);
template LuResult<Rational> lu_det_inverse(const Matrix<Rational>&);
template LuResult<double> lu_det_inverse(const Matrix<double>&);

}  // namespace pftrace
