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

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace pftrace {

/// Arbitrary-precision rational, always kept canonical (lowest terms,
/// positive denominator) by GMP after every arithmetic operation.
using Rational = mpq_class;

/// Binomial coefficients and factorials are always integral.
using Integer = mpz_class;

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "rational";

    static Rational from_integer(const Integer& v) { return Rational(v); }
    static Rational from_int(long v) { return Rational(v); }
    static double magnitude(const Rational& v) { return std::fabs(v.get_d()); }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static std::string to_string(const Rational& v) { return v.get_str(); }
};

template <>
struct ScalarTraits<double> {
    static constexpr bool exact = false;
    static constexpr std::string_view name = "f64";

    static double from_integer(const Integer& v) { return v.get_d(); }
    static double from_int(long v) { return static_cast<double>(v); }
    static double magnitude(double v) { return std::fabs(v); }
    static bool is_zero(double v) { return v == 0.0; }
    static std::string to_string(double v);
};

/// The two supported scalar regimes. A computation never mixes them.
template <typename T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace pftrace
