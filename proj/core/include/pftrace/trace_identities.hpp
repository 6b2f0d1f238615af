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

// Determinants, Pfaffians and inverses as finite sums over traces of matrix
// powers.
//
// Every identity exists in two forms that are evaluated independently:
//   - the Bell form, through the complete Bell polynomial recursion, and
//   - the partition form, an explicit sum over solutions of Σ l·k_l = w.
// The Bell form is the production path; the partition form is kept for
// cross-checking and is only practical for small half-dimensions.
//
// Conventions. For a square C of dimension n, the determinant flavor uses
//   x_j = −(j−1)!·tr(C^j),            det C = (−1)ⁿ/n! · B_n(x).
// For skew A, B of dimension 2n, the Pfaffian flavor uses
//   x_j = −½(j−1)!·tr((AB)^j),        pf A · pf B = B_n(x)/n!.
// Internally both are evaluated as c_m = B_m(x)/m! (see normalized_bell).

#include <cstddef>
#include <vector>

#include "pftrace/combinatorics.hpp"
#include "pftrace/matrix.hpp"

namespace pftrace {

enum class BellFlavor { determinant, pfaffian };

template <Scalar T>
struct BellArgs {
    std::vector<T> xs;
    BellFlavor flavor = BellFlavor::determinant;
};

/// x₁…x_order from precomputed traces (order ≤ traces.size()).
template <Scalar T>
BellArgs<T> bell_args(const TraceVector<T>& traces, BellFlavor flavor, std::size_t order);

/// c_m = B_m(x)/m! for m = 0…order, evaluated without factorials.
template <Scalar T>
std::vector<T> bell_coefficients(const TraceVector<T>& traces, BellFlavor flavor, std::size_t order);

// ---------------------------------------------------------------------------
// General square matrices.

template <Scalar T>
T det_via_bell(const Matrix<T>& c);

/// Coefficients a_s, s = 0…n−1, with adj(C) = Σ a_s C^s:
///   a_s = (−1)^{n−1} · B_{n−1−s}(x)/(n−1−s)!.
/// The top coefficient a_{n−1} = (−1)^{n−1} never vanishes.
template <Scalar T>
std::vector<T> adjugate_coefficients(const Matrix<T>& c);

/// det(C)·C⁻¹ as a polynomial in C; valid for singular C.
template <Scalar T>
Matrix<T> adjugate_via_bell(const Matrix<T>& c);

/// C⁻¹; throws SingularMatrix when det C is zero (exact) or below
/// kSingularityTolerance · max|C|ⁿ (float).
template <Scalar T>
Matrix<T> inverse_via_bell(const Matrix<T>& c);

// ---------------------------------------------------------------------------
// Pairs of skew-symmetric matrices of equal even dimension 2n.
// All of these throw OddDimension or DimensionMismatch on bad shapes.

template <Scalar T>
T pf_product(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// pf(A) as pf_product(A, J) with J = reference_skew (pf J = 1).
template <Scalar T>
T pfaffian(const SkewMatrix<T>& a);

/// pf(A)·pf(B)·A⁻¹ = −Σ_{s=1}^{n} (BA)^{s−1}·B·c_{n−s}. No division is
/// performed, so the value is defined for singular A as well.
template <Scalar T>
Matrix<T> skew_inverse_scaled(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// Coefficients q_s, s = 0…n−1, with pf(A)·pf(B)·(AB)⁻¹ = Σ q_s (AB)^s,
/// from the explicit partition sum
///   q_s = −Σ_{s + Σ l·k_l = n−1} Π_l (−1)^{k_l} tr((AB)^l)^{k_l} / (k_l!·2^{k_l}·l^{k_l}).
/// The vector has exactly n entries: no power above n−1 is ever formed.
template <Scalar T>
std::vector<T> product_inverse_coefficients(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// Σ q_s (AB)^s with q from product_inverse_coefficients.
template <Scalar T>
Matrix<T> product_inverse_scaled(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// p_n(λ) = Σ_s coeffs[s]·λ^s for a skew pair; coeffs[s] = c_{n−s}.
template <Scalar T>
struct SemiCharPolynomial {
    std::vector<T> coeffs;
    std::size_t half_degree = 0;

    T operator()(const T& lambda) const {
        T acc(0);
        for (std::size_t s = coeffs.size(); s-- > 0;) acc = acc * lambda + coeffs[s];
        return acc;
    }
};

template <Scalar T>
SemiCharPolynomial<T> semichar_coeffs(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// p_n(AB) = Σ_{s=0}^{n} (AB)^s·c_{n−s}; identically zero.
template <Scalar T>
Matrix<T> semichar_residual(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// Given AB + BA = 0 and BC + CB = 0, compares pf(AB)·pf(C) with
/// pf(A)·pf(BC), both via pf_product. Throws AnticommutationViolated.
template <Scalar T>
bool pf_triple_identity_check(const SkewMatrix<T>& a, const SkewMatrix<T>& b, const SkewMatrix<T>& c);

// ---------------------------------------------------------------------------
// Explicit partition-sum forms.

/// Σ_{Σ l·k_l = n} Π_{l=1}^{n} (−1)^{k_l+1} tr(C^l)^{k_l} / (k_l!·l^{k_l}).
template <Scalar T>
T det_partition_form(const Matrix<T>& c);

/// Σ_{s=0}^{n−1} C^s Σ_{s + Σ l·k_l = n−1} Π_{l=1}^{n−1} (−1)^{k_l+1} tr(C^l)^{k_l} / (k_l!·l^{k_l}).
template <Scalar T>
Matrix<T> adjugate_partition_form(const Matrix<T>& c);

/// Σ_{Σ l·k_l = n} Π_l (−1)^{k_l} tr((AB)^l)^{k_l} / (k_l!·2^{k_l}·l^{k_l}).
template <Scalar T>
T pf_product_partition_form(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

/// −Σ_{s=0}^{n−1} (BA)^s·B Σ_{s + Σ l·k_l = n−1} Π_l (−1)^{k_l} tr((BA)^l)^{k_l} / (k_l!·2^{k_l}·l^{k_l}).
template <Scalar T>
Matrix<T> skew_inverse_partition_form(const SkewMatrix<T>& a, const SkewMatrix<T>& b);

}  // namespace pftrace
