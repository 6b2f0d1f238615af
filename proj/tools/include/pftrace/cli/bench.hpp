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

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace pftrace::cli {

/// Float-regime kernels the benchmark can time.
///   elimination  pf_elimination on a random skew matrix
///   traces       pfaffian (trace/Bell path) on a random skew matrix
///   lu           lu_det_inverse on a random general matrix
///   bell         det_via_bell on a random general matrix
enum class BenchMethod { elimination, traces, lu, bell };

std::string_view to_string(BenchMethod method);
std::optional<BenchMethod> bench_method_from_string(std::string_view text);

struct BenchOptions {
    std::vector<std::size_t> dims;
    BenchMethod method = BenchMethod::elimination;
    unsigned repeat = 5;
    std::uint64_t seed = 1;
    /// Each sample loops the kernel until at least this much time passes,
    /// then reports the per-call average.
    double min_sample_ms = 20.0;
};

struct BenchRow {
    std::size_t dim = 0;
    double median_ms = 0.0;
    unsigned calls_per_sample = 0;
};

struct BenchReport {
    BenchMethod method = BenchMethod::elimination;
    std::vector<BenchRow> rows;
    /// Least-squares slope of log(median) against log(dim); absent with
    /// fewer than two dims.
    std::optional<double> slope;
};

/// Throws std::invalid_argument when repeat < 3, dims are empty, not
/// strictly ascending, or contain an odd dim for a Pfaffian method.
BenchReport bench_suite(const BenchOptions& options);

/// Ordinary least-squares slope of log(y) on log(x).
std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace pftrace::cli
