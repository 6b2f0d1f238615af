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

// Brute-force determinant and Pfaffian straight from their Levi-Civita
// definitions. The ε contractions are realized as signed sums over
// permutations and perfect matchings; no rank-n tensor is ever stored.
// These are reference oracles: factorial cost, capped dimension.

#include <cstddef>

#include "pftrace/matrix.hpp"

namespace pftrace {

struct OracleLimits {
    std::size_t max_det_dim = 8;
    std::size_t max_pf_dim = 12;
};

/// Σ_σ sgn(σ) Π C[i][σ(i)] over all n! permutations.
template <Scalar T>
T det_definition(const Matrix<T>& c, const OracleLimits& limits = {});

/// Σ over the (2n)!/(2ⁿn!) perfect matchings of sgn · Π A[i][j].
/// An empty (0×0) matrix has Pfaffian 1.
template <Scalar T>
T pf_definition(const SkewMatrix<T>& a, const OracleLimits& limits = {});

/// Cofactor transpose: det(C)·C⁻¹, defined for singular C too.
template <Scalar T>
Matrix<T> adjugate_definition(const Matrix<T>& c, const OracleLimits& limits = {});

/// pf(A)·A⁻¹ from Pfaffian minors:
///   result(j, i) = (−1)^{i+j+1+[i>j]} · pf(A with rows/cols i, j removed),
/// zero diagonal. Satisfies A·result = pf(A)·I for every skew A.
template <Scalar T>
Matrix<T> pf_adjugate_definition(const SkewMatrix<T>& a, const OracleLimits& limits = {});

}  // namespace pftrace
