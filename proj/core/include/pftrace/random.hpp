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

// Seeded random matrices, reproducible across platforms and standard
// libraries. The engine is std::mt19937_64 (fully specified by the
// standard); draws are mapped to values by hand rather than through
// std::*_distribution, whose output is implementation-defined.
//
//   rational entry:  numerator   = −9 + (u mod 19),
//                    denominator =  1 + (v mod 9),   u, v consecutive draws
//   float entry:     2·(u >> 11)·2⁻⁵³ − 1, uniform in [−1, 1)
//
// Skew matrices draw the strictly-upper entries in row-major order and
// antisymmetrize; general matrices draw all entries in row-major order.

#include <cstdint>
#include <random>

#include "pftrace/matrix.hpp"

namespace pftrace {

class MatrixSampler {
public:
    explicit MatrixSampler(std::uint64_t seed) : engine_(seed) {}

    template <Scalar T>
    T entry();

    template <Scalar T>
    Matrix<T> general(std::size_t dim) {
        Matrix<T> m(dim);
        for (auto& v : m.entries()) v = entry<T>();
        return m;
    }

    template <Scalar T>
    SkewMatrix<T> skew(std::size_t dim) {
        Matrix<T> m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = i + 1; j < dim; ++j) {
                m(i, j) = entry<T>();
                m(j, i) = -m(i, j);
            }
        }
        return check_skew(std::move(m));
    }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::mt19937_64 engine_;
};

template <>
inline Rational MatrixSampler::entry<Rational>() {
    const long num = -9 + static_cast<long>(engine_() % 19);
    const long den = 1 + static_cast<long>(engine_() % 9);
    Rational r{Integer(num), Integer(den)};
    r.canonicalize();
    return r;
}

template <>
inline double MatrixSampler::entry<double>() {
    return 2.0 * static_cast<double>(engine_() >> 11) * 0x1.0p-53 - 1.0;
}

}  // namespace pftrace
