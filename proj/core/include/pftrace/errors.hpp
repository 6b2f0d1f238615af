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
#include <stdexcept>
#include <string>

namespace pftrace {

/// Base class of every error raised by the library. Mathematical errors
/// (odd dimension, singular input, ...) derive from MathError so callers
/// can separate them from usage problems.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MathError : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)),
          lhs_(lhs), rhs_(rhs) {}

    explicit DimensionMismatch(const std::string& what) : Error(what) {}

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_ = 0;
    std::size_t rhs_ = 0;
};

class NotSkew : public MathError {
public:
    NotSkew(std::size_t row, std::size_t col)
        : MathError("matrix is not skew-symmetric at (" + std::to_string(row) + "," +
                    std::to_string(col) + ")"),
          row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

class OddDimension : public MathError {
public:
    explicit OddDimension(std::size_t dim)
        : MathError("Pfaffian requires an even dimension, got " + std::to_string(dim)) {}
};

class SingularMatrix : public MathError {
public:
    SingularMatrix() : MathError("matrix is singular") {}
};

class DimensionTooLargeForOracle : public Error {
public:
    DimensionTooLargeForOracle(std::size_t dim, std::size_t cap)
        : Error("dimension " + std::to_string(dim) + " exceeds the brute-force cap " +
                std::to_string(cap)) {}
};

class AnticommutationViolated : public MathError {
public:
    explicit AnticommutationViolated(const std::string& pair)
        : MathError("anticommutation precondition violated: " + pair + " != 0") {}
};

}  // namespace pftrace
