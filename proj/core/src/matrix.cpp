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

#include "pftrace/matrix.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace pftrace {

std::string ScalarTraits<double>::to_string(double v) {
    // Shortest representation that round-trips.
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) throw std::runtime_error("cannot format double");
    return std::string(buf, end);
}

Rational parse_rational(std::string_view text) {
    auto is_integer = [](std::string_view s, bool allow_sign) {
        if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };

    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!is_integer(num, true) || !is_integer(den, false)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    if (num.front() == '+') num.remove_prefix(1);

    Integer p(std::string(num), 10);
    Integer q(std::string(den), 10);
    if (q == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

template <Scalar T>
Matrix<T> mat_mul(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
    const std::size_t n = x.dim();
    Matrix<T> out(n);
    if constexpr (std::is_same_v<T, double>) {
        // i-k-j order keeps the inner loop contiguous and vectorizable.
        const double* xd = x.entries().data();
        const double* yd = y.entries().data();
        double* od = out.entries().data();
        for (std::size_t i = 0; i < n; ++i) {
            double* orow = od + i * n;
            for (std::size_t k = 0; k < n; ++k) {
                const double xik = xd[i * n + k];
                if (xik == 0.0) continue;
                const double* yrow = yd + k * n;
                for (std::size_t j = 0; j < n; ++j) orow[j] += xik * yrow[j];
            }
        }
    } else {
        Rational tmp;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Rational& xik = x(i, k);
                if (sgn(xik) == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    tmp = xik * y(k, j);
                    out(i, j) += tmp;
                }
            }
        }
    }
    return out;
}

template <Scalar T>
T trace_of_product(const Matrix<T>& x, const Matrix<T>& y) {
    if (x.dim() != y.dim()) throw DimensionMismatch(x.dim(), y.dim());
    T acc(0);
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < x.dim(); ++j) acc += x(i, j) * y(j, i);
    return acc;
}

template <Scalar T>
double max_magnitude(const Matrix<T>& m) {
    double best = 0.0;
    for (const auto& v : m.entries()) best = std::max(best, ScalarTraits<T>::magnitude(v));
    return best;
}

template <Scalar T>
SkewMatrix<T> check_skew(Matrix<T> x, double tolerance) {
    const std::size_t n = x.dim();
    double bound = 0.0;
    if constexpr (!is_exact_v<T>) bound = tolerance * max_magnitude(x);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            bool ok;
            if constexpr (is_exact_v<T>) {
                ok = x(i, j) == -x(j, i);
            } else {
                ok = std::fabs(x(i, j) + x(j, i)) <= bound;
            }
            if (!ok) throw NotSkew(i, j);
        }
    }
    return SkewMatrix<T>(std::move(x));
}

template <Scalar T>
SkewMatrix<T> skew_part(const Matrix<T>& x) {
    Matrix<T> s = x - x.transpose();
    s *= T(1) / T(2);
    return SkewMatrix<T>(std::move(s));
}

template <Scalar T>
SkewMatrix<T> reference_skew(std::size_t half_dim) {
    Matrix<T> j(2 * half_dim);
    for (std::size_t b = 0; b < half_dim; ++b) {
        j(2 * b, 2 * b + 1) = T(1);
        j(2 * b + 1, 2 * b) = T(-1);
    }
    return check_skew(std::move(j));
}

template <Scalar T>
TraceVector<T> trace_powers(const Matrix<T>& m, std::size_t max_power) {
    if (max_power == 0) throw std::invalid_argument("trace_powers needs max_power >= 1");
    TraceVector<T> out;
    out.traces.reserve(max_power);
    out.traces.push_back(m.trace());
    if (max_power == 1) return out;

    Matrix<T> power = m;
    for (std::size_t l = 2; l < max_power; ++l) {
        power = mat_mul(power, m);
        out.traces.push_back(power.trace());
    }
    out.traces.push_back(trace_of_product(power, m));
    return out;
}

template <Scalar T>
PowerTable<T> power_table(const Matrix<T>& m, std::size_t max_power, std::size_t trace_power) {
    if (trace_power > max_power + 1) {
        throw std::invalid_argument("power_table: traces beyond max_power + 1 need more powers");
    }
    PowerTable<T> table;
    table.powers.reserve(max_power + 1);
    table.powers.push_back(Matrix<T>::identity(m.dim()));
    for (std::size_t s = 1; s <= max_power; ++s) {
        table.powers.push_back(s == 1 ? m : mat_mul(table.powers.back(), m));
    }
    table.traces.traces.reserve(trace_power);
    for (std::size_t l = 1; l <= trace_power; ++l) {
        table.traces.traces.push_back(l <= max_power ? table.powers[l].trace()
                                                     : trace_of_product(table.powers[l - 1], m));
    }
    return table;
}

#define PFTRACE_INSTANTIATE(T)                                                              \
    template Matrix<T> mat_mul(const Matrix<T>&, const Matrix<T>&);                         \
    template T trace_of_product(const Matrix<T>&, const Matrix<T>&);                        \
    template double max_magnitude(const Matrix<T>&);                                        \
    template SkewMatrix<T> check_skew(Matrix<T>, double);                                   \
    template SkewMatrix<T> skew_part(const Matrix<T>&);                                     \
    template SkewMatrix<T> reference_skew(std::size_t);                                     \
    template TraceVector<T> trace_powers(const Matrix<T>&, std::size_t);                    \
    template PowerTable<T> power_table(const Matrix<T>&, std::size_t, std::size_t);

PFTRACE_INSTANTIATE(Rational)
PFTRACE_INSTANTIATE(double)

#undef PFTRACE_INSTANTIATE

}  // namespace pftrace
