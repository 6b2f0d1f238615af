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

// Matrix files are JSON documents:
//
//   {"dim": 2, "scalar_mode": "rational", "entries": ["0", "1", "-1", "0"]}
//
// `entries` is row-major with dim² elements. Rational entries are strings
// "p" or "p/q" (plain JSON integers are accepted too); f64 entries are JSON
// numbers. When `scalar_mode` is absent, PFTRACE_SCALAR_MODE decides, and
// failing that the file is read as rational.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "pftrace/errors.hpp"
#include "pftrace/matrix.hpp"

namespace pftrace::cli {

enum class ScalarMode { rational, f64 };

inline constexpr const char* kScalarModeEnv = "PFTRACE_SCALAR_MODE";

std::string_view to_string(ScalarMode mode);
std::optional<ScalarMode> scalar_mode_from_string(std::string_view text);

/// Mode from PFTRACE_SCALAR_MODE, or rational when unset. Throws ParseError
/// for an unrecognised value.
ScalarMode default_scalar_mode();

using AnyMatrix = std::variant<Matrix<Rational>, Matrix<double>>;

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

/// Parses a matrix document. Throws ParseError (with a line/column or
/// entry index) or DimensionMismatch when entries.size() != dim².
AnyMatrix parse_matrix(std::string_view text, std::string_view origin = "<text>");

/// Reads and parses a file.
AnyMatrix load_matrix(const std::filesystem::path& path);

template <Scalar T>
std::string serialize_matrix(const Matrix<T>& m);

}  // namespace pftrace::cli
