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

#include "pftrace/cli/matrix_file.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pftrace::cli {
namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return std::to_string(line) + ":" + std::to_string(col);
}

[[noreturn]] void fail(std::string_view origin, const std::string& what) {
    throw ParseError(std::string(origin) + ": " + what);
}

Rational rational_entry(const json& v, std::size_t index, std::string_view origin) {
    const std::string where = "entries[" + std::to_string(index) + "]";
    if (v.is_number_integer()) return Rational(Integer(v.dump()));
    if (!v.is_string()) fail(origin, where + ": expected a string \"p\" or \"p/q\"");
    try {
        return parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(origin, where + ": " + e.what());
    }
}

double float_entry(const json& v, std::size_t index, std::string_view origin) {
    if (!v.is_number()) fail(origin, "entries[" + std::to_string(index) + "]: expected a number");
    return v.get<double>();
}

}  // namespace

std::string_view to_string(ScalarMode mode) {
    return mode == ScalarMode::rational ? "rational" : "f64";
}

std::optional<ScalarMode> scalar_mode_from_string(std::string_view text) {
    if (text == "rational") return ScalarMode::rational;
    if (text == "f64") return ScalarMode::f64;
    return std::nullopt;
}

ScalarMode default_scalar_mode() {
    const char* env = std::getenv(kScalarModeEnv);
    if (env == nullptr || *env == '\0') return ScalarMode::rational;
    if (auto mode = scalar_mode_from_string(env)) return *mode;
    throw ParseError(std::string(kScalarModeEnv) + ": unknown scalar mode '" + env + "'");
}

AnyMatrix parse_matrix(std::string_view text, std::string_view origin) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        fail(origin, "at " + line_column(text, e.byte) + ": malformed JSON");
    }
    if (!doc.is_object()) fail(origin, "top level must be an object");

    const auto dim_it = doc.find("dim");
    if (dim_it == doc.end() || !dim_it->is_number_unsigned() || dim_it->get<std::size_t>() == 0) {
        fail(origin, "'dim' must be a positive integer");
    }
    const auto dim = dim_it->get<std::size_t>();

    ScalarMode mode;
    if (const auto it = doc.find("scalar_mode"); it != doc.end()) {
        const auto parsed = it->is_string() ? scalar_mode_from_string(it->get<std::string>()) : std::nullopt;
        if (!parsed) fail(origin, "'scalar_mode' must be \"rational\" or \"f64\"");
        mode = *parsed;
    } else {
        mode = default_scalar_mode();
    }

    const auto entries_it = doc.find("entries");
    if (entries_it == doc.end() || !entries_it->is_array()) fail(origin, "'entries' must be an array");
    const json& entries = *entries_it;
    if (entries.size() != dim * dim) {
        throw DimensionMismatch(std::string(origin) + ": expected " + std::to_string(dim * dim) +
                                " entries for dim " + std::to_string(dim) + ", got " +
                                std::to_string(entries.size()));
    }

    if (mode == ScalarMode::rational) {
        std::vector<Rational> values;
        values.reserve(entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) values.push_back(rational_entry(entries[i], i, origin));
        return Matrix<Rational>(dim, std::move(values));
    }
    std::vector<double> values;
    values.reserve(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) values.push_back(float_entry(entries[i], i, origin));
    return Matrix<double>(dim, std::move(values));
}

AnyMatrix load_matrix(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix(buf.str(), path.string());
}

template <Scalar T>
std::string serialize_matrix(const Matrix<T>& m) {
    nlohmann::ordered_json doc;
    doc["dim"] = m.dim();
    doc["scalar_mode"] = std::string(ScalarTraits<T>::name);
    auto entries = nlohmann::ordered_json::array();
    for (const auto& v : m.entries()) {
        if constexpr (is_exact_v<T>) {
            entries.push_back(v.get_str());
        } else {
            entries.push_back(v);
        }
    }
    doc["entries"] = std::move(entries);
    return doc.dump();
}

template std::string serialize_matrix(const Matrix<Rational>&);
template std::string serialize_matrix(const Matrix<double>&);

}  // namespace pftrace::cli
