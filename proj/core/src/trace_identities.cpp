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

#include "pftrace/trace_identities.hpp"

#include <algorithm>
#include <cmath>

namespace pftrace {
namespace {

template <Scalar T>
TraceVector<T> traces_up_to(const Matrix<T>& m, std::size_t order) {
    if (order == 0) return {};
    return trace_powers(m, order);
}

// Σ coeffs[s]·powers[s].
template <Scalar T>
Matrix<T> combine(const std::vector<Matrix<T>>& powers, const std::vector<T>& coeffs) {
    Matrix<T> out(powers.front().dim());
    for (std::size_t s = 0; s < coeffs.size(); ++s) {
        if (ScalarTraits<T>::is_zero(coeffs[s])) continue;
        out += powers[s] * coeffs[s];
    }
    return out;
}

template <Scalar T>
std::size_t require_pair(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
    return a.half_dim();
}

template <Scalar T>
T power(const T& base, unsigned exponent) {
    T out(1);
    for (unsigned e = 0; e < exponent; ++e) out *= base;
    return out;
}

// One term of a partition sum. Determinant flavor:
//   Π_{l=1}^{L} (−1)^{k_l+1} tr_l^{k_l} / (k_l!·l^{k_l}),
// Pfaffian flavor:
//   Π_{l=1}^{L} (−1)^{k_l} tr_l^{k_l} / (k_l!·2^{k_l}·l^{k_l}),
// with L the number of slots in the partition vector.
template <Scalar T>
T partition_term(const PartitionVector& p, const TraceVector<T>& traces, BellFlavor flavor) {
    T numerator(1);
    Integer denominator(1);
    bool negative = false;
    for (std::size_t slot = 0; slot < p.counts.size(); ++slot) {
        const unsigned k = p.counts[slot];
        const unsigned l = static_cast<unsigned>(slot + 1);
        negative ^= (k % 2 == 1);
        if (flavor == BellFlavor::determinant) negative = !negative;
        if (k == 0) continue;
        numerator *= power(traces[l], k);
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), flavor == BellFlavor::pfaffian ? 2UL * l : l, k);
        denominator *= factorial(k) * scale;
    }
    T term = numerator / ScalarTraits<T>::from_integer(denominator);
    return negative ? T(-term) : term;
}

template <Scalar T>
std::vector<T> product_inverse_from_traces(const TraceVector<T>& traces, std::size_t n) {
    std::vector<T> q(n, T(0));
    for (const auto& sp : enumerate_shifted(static_cast<unsigned>(n))) {
        q[sp.shift] -= partition_term(sp.parts, traces, BellFlavor::pfaffian);
    }
    return q;
}

template <Scalar T>
bool anticommute(const Matrix<T>& x, const Matrix<T>& y) {
    const Matrix<T> sum = x * y + y * x;
    if constexpr (is_exact_v<T>) {
        return sum == Matrix<T>(x.dim());
    } else {
        const double bound = kResidualTolerance * (1.0 + std::max(max_magnitude(x), max_magnitude(y)));
        return max_magnitude(sum) <= bound;
    }
}

template <Scalar T>
SkewMatrix<T> skew_product(const SkewMatrix<T>& x, const SkewMatrix<T>& y) {
    if constexpr (is_exact_v<T>) {
        return check_skew(x.matrix() * y.matrix());
    } else {
        return check_skew(x.matrix() * y.matrix(), kResidualTolerance);
    }
}

}  // namespace

template <Scalar T>
BellArgs<T> bell_args(const TraceVector<T>& traces, BellFlavor flavor, std::size_t order) {
    BellArgs<T> out;
    out.flavor = flavor;
    out.xs.reserve(order);
    for (std::size_t j = 1; j <= order; ++j) {
        T x = ScalarTraits<T>::from_integer(factorial(static_cast<unsigned>(j - 1))) * traces[j];
        if (flavor == BellFlavor::pfaffian) x /= T(2);
        out.xs.push_back(-x);
    }
    return out;
}

template <Scalar T>
std::vector<T> bell_coefficients(const TraceVector<T>& traces, BellFlavor flavor, std::size_t order) {
    std::vector<T> scaled;
    scaled.reserve(order);
    const long half = flavor == BellFlavor::pfaffian ? 2 : 1;
    for (std::size_t m = 1; m <= order; ++m) {
        scaled.push_back(-traces[m] / T(half * static_cast<long>(m)));
    }
    return normalized_bell<T>(scaled);
}

template <Scalar T>
T det_via_bell(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    const auto coeffs = bell_coefficients(traces_up_to(c, n), BellFlavor::determinant, n);
    return n % 2 == 0 ? coeffs[n] : T(-coeffs[n]);
}

namespace {

template <Scalar T>
std::vector<T> adjugate_coeffs_from_traces(const TraceVector<T>& traces, std::size_t n) {
    const auto c = bell_coefficients(traces, BellFlavor::determinant, n - 1);
    std::vector<T> a(n);
    for (std::size_t s = 0; s < n; ++s) {
        a[s] = (n - 1) % 2 == 0 ? c[n - 1 - s] : T(-c[n - 1 - s]);
    }
    return a;
}

}  // namespace

template <Scalar T>
std::vector<T> adjugate_coefficients(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    if (n == 0) return {};
    return adjugate_coeffs_from_traces(traces_up_to(c, n - 1), n);
}

template <Scalar T>
Matrix<T> adjugate_via_bell(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    if (n == 0) return c;
    const auto table = power_table(c, n - 1, n - 1);
    return combine(table.powers, adjugate_coeffs_from_traces(table.traces, n));
}

template <Scalar T>
Matrix<T> inverse_via_bell(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    if (n == 0) return c;
    const auto table = power_table(c, n - 1, n);
    const auto bell = bell_coefficients(table.traces, BellFlavor::determinant, n);
    const T det = n % 2 == 0 ? bell[n] : T(-bell[n]);

    bool singular;
    if constexpr (is_exact_v<T>) {
        singular = sgn(det) == 0;
    } else {
        singular = !(std::fabs(det) > kSingularityTolerance * std::pow(max_magnitude(c), double(n)));
    }
    if (singular) throw SingularMatrix();

    Matrix<T> adj = combine(table.powers, adjugate_coeffs_from_traces(table.traces, n));
    adj *= T(1) / det;
    return adj;
}

template <Scalar T>
T pf_product(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    const Matrix<T> ab = a.matrix() * b.matrix();
    return bell_coefficients(traces_up_to(ab, n), BellFlavor::pfaffian, n)[n];
}

template <Scalar T>
T pfaffian(const SkewMatrix<T>& a) {
    return pf_product(a, reference_skew<T>(a.half_dim()));
}

template <Scalar T>
Matrix<T> skew_inverse_scaled(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    if (n == 0) return a.matrix();
    const Matrix<T> ba = b.matrix() * a.matrix();
    const auto table = power_table(ba, n - 1, n - 1);
    const auto c = bell_coefficients(table.traces, BellFlavor::pfaffian, n - 1);
    // −Σ_{t=0}^{n−1} c_{n−1−t}·(BA)^t, then a single product with B.
    std::vector<T> coeffs(n);
    for (std::size_t t = 0; t < n; ++t) coeffs[t] = -c[n - 1 - t];
    return combine(table.powers, coeffs) * b.matrix();
}

template <Scalar T>
std::vector<T> product_inverse_coefficients(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    if (n == 0) return {};
    return product_inverse_from_traces(traces_up_to(Matrix<T>(a.matrix() * b.matrix()), n - 1), n);
}

template <Scalar T>
Matrix<T> product_inverse_scaled(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    if (n == 0) return a.matrix();
    const auto table = power_table(Matrix<T>(a.matrix() * b.matrix()), n - 1, n - 1);
    return combine(table.powers, product_inverse_from_traces(table.traces, n));
}

template <Scalar T>
SemiCharPolynomial<T> semichar_coeffs(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    const Matrix<T> ba = b.matrix() * a.matrix();
    const auto c = bell_coefficients(traces_up_to(ba, n), BellFlavor::pfaffian, n);
    SemiCharPolynomial<T> p;
    p.half_degree = n;
    p.coeffs.assign(c.rbegin(), c.rend());
    return p;
}

template <Scalar T>
Matrix<T> semichar_residual(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    const Matrix<T> ab = a.matrix() * b.matrix();
    if (n == 0) return ab;
    const auto table = power_table(ab, n, n);
    const auto c = bell_coefficients(table.traces, BellFlavor::pfaffian, n);
    return combine(table.powers, std::vector<T>(c.rbegin(), c.rend()));
}

template <Scalar T>
bool pf_triple_identity_check(const SkewMatrix<T>& a, const SkewMatrix<T>& b, const SkewMatrix<T>& c) {
    require_pair(a, b);
    require_pair(b, c);
    if (!anticommute(a.matrix(), b.matrix())) throw AnticommutationViolated("AB + BA");
    if (!anticommute(b.matrix(), c.matrix())) throw AnticommutationViolated("BC + CB");

    const T lhs = pf_product(skew_product(a, b), c);
    const T rhs = pf_product(a, skew_product(b, c));
    if constexpr (is_exact_v<T>) {
        return lhs == rhs;
    } else {
        const double scale = 1.0 + std::max(std::fabs(lhs), std::fabs(rhs));
        return std::fabs(lhs - rhs) <= kResidualTolerance * scale;
    }
}

template <Scalar T>
T det_partition_form(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    if (n == 0) return T(1);
    const auto traces = traces_up_to(c, n);
    T acc(0);
    for (const auto& p : enumerate_diophantine(static_cast<unsigned>(n))) {
        acc += partition_term(p, traces, BellFlavor::determinant);
    }
    return acc;
}

template <Scalar T>
Matrix<T> adjugate_partition_form(const Matrix<T>& c) {
    const std::size_t n = c.dim();
    if (n == 0) return c;
    const auto table = power_table(c, n - 1, n - 1);
    std::vector<T> coeffs(n, T(0));
    for (const auto& sp : enumerate_shifted(static_cast<unsigned>(n))) {
        coeffs[sp.shift] += partition_term(sp.parts, table.traces, BellFlavor::determinant);
    }
    return combine(table.powers, coeffs);
}

template <Scalar T>
T pf_product_partition_form(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    if (n == 0) return T(1);
    const auto traces = traces_up_to(Matrix<T>(a.matrix() * b.matrix()), n);
    T acc(0);
    for (const auto& p : enumerate_diophantine(static_cast<unsigned>(n))) {
        acc += partition_term(p, traces, BellFlavor::pfaffian);
    }
    return acc;
}

template <Scalar T>
Matrix<T> skew_inverse_partition_form(const SkewMatrix<T>& a, const SkewMatrix<T>& b) {
    const std::size_t n = require_pair(a, b);
    if (n == 0) return a.matrix();
    const auto table = power_table(Matrix<T>(b.matrix() * a.matrix()), n - 1, n - 1);
    std::vector<T> coeffs(n, T(0));
    for (const auto& sp : enumerate_shifted(static_cast<unsigned>(n))) {
        coeffs[sp.shift] -= partition_term(sp.parts, table.traces, BellFlavor::pfaffian);
    }
    return combine(table.powers, coeffs) * b.matrix();
}

#define PFTRACE_INSTANTIATE(T)                                                                       \
    template BellArgs<T> bell_args(const TraceVector<T>&, BellFlavor, std::size_t);                  \
    template std::vector<T> bell_coefficients(const TraceVector<T>&, BellFlavor, std::size_t);       \
    template T det_via_bell(const Matrix<T>&);                                                       \
    template std::vector<T> adjugate_coefficients(const Matrix<T>&);                                 \
    template Matrix<T> adjugate_via_bell(const Matrix<T>&);                                          \
    template Matrix<T> inverse_via_bell(const Matrix<T>&);                                           \
    template T pf_product(const SkewMatrix<T>&, const SkewMatrix<T>&);                               \
    template T pfaffian(const SkewMatrix<T>&);                                                       \
    template Matrix<T> skew_inverse_scaled(const SkewMatrix<T>&, const SkewMatrix<T>&);              \
    template std::vector<T> product_inverse_coefficients(const SkewMatrix<T>&, const SkewMatrix<T>&); \
    template Matrix<T> product_inverse_scaled(const SkewMatrix<T>&, const SkewMatrix<T>&);           \
    template SemiCharPolynomial<T> semichar_coeffs(const SkewMatrix<T>&, const SkewMatrix<T>&);      \
    template Matrix<T> semichar_residual(const SkewMatrix<T>&, const SkewMatrix<T>&);                \
    template bool pf_triple_identity_check(const SkewMatrix<T>&, const SkewMatrix<T>&,               \
                                           const SkewMatrix<T>&);                                    \
    template T det_partition_form(const Matrix<T>&);                                                 \
    template Matrix<T> adjugate_partition_form(const Matrix<T>&);                                    \
    template T pf_product_partition_form(const SkewMatrix<T>&, const SkewMatrix<T>&);                \
    template Matrix<T> skew_inverse_partition_form(const SkewMatrix<T>&, const SkewMatrix<T>&);

PFTRACE_INSTANTIATE(Rational)
PFTRACE_INSTANTIATE(double)

#undef PFTRACE_INSTANTIATE

}  // namespace pftrace
