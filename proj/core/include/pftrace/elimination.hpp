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
#include <optional>

#include "pftrace/matrix.hpp"

namespace pftrace {

/// Outcome of a cubic-cost elimination. `pivot_sign` is (−1)^swap_count.
/// `growth` is the largest intermediate entry magnitude seen (float regime
/// only; empty for rationals).
template <Scalar T>
struct EliminationReport {
    T value;
    int pivot_sign = 1;
    std::size_t swap_count = 0;
    std::optional<double> growth;
};

/**
 * Pfaffian by Parlett–Reid congruence elimination.
 *
 * For k = 0, 2, 4, … the pivot row/column k+1 is swapped with the best
 * candidate below it (largest |A[i][k]| for floats, first nonzero for
 * rationals), then a symmetric rank-2 update
 *
 *     A[i][j] += τ_i·A[j][k+1] − A[i][k+1]·τ_j,   τ = A[k][k+2:] / A[k][k+1],
 *
 * clears row/column k beyond the superdiagonal. Each swap flips the sign
 * of the Pfaffian and the update leaves it unchanged, so
 *
 *     pf(A) = (−1)^swaps · Π_k A[k][k+1]   (k even).
 *
 * Θ(n³). A zero pivot column means pf(A) = 0, reported as value 0.
 * Throws OddDimension.
 */
template <Scalar T>
EliminationReport<T> pf_elimination(const SkewMatrix<T>& a);

template <Scalar T>
struct LuResult {
    T det;
    /// Empty when the matrix is singular.
    std::optional<Matrix<T>> inverse;
    std::size_t swap_count = 0;

    bool singular() const noexcept { return !inverse.has_value(); }
};

/// Gaussian elimination with row pivoting: largest magnitude (float) or
/// first nonzero (rational). Singularity is reported in the result. In the
/// float regime a pivot at or below kSingularityTolerance·max|C| counts as
/// zero for the inverse, while `det` keeps the computed pivot product.
template <Scalar T>
LuResult<T> lu_det_inverse(const Matrix<T>& c);

}  // namespace pftrace
