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

#include "pftrace/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "pftrace/elimination.hpp"
#include "pftrace/random.hpp"
#include "pftrace/trace_identities.hpp"

namespace pftrace::cli {
namespace {

using Clock = std::chrono::steady_clock;

// Keeps the optimizer from discarding a result.
volatile double g_sink = 0.0;

std::function<void()> make_kernel(BenchMethod method, std::size_t dim, std::uint64_t seed) {
    MatrixSampler sampler(seed ^ (static_cast<std::uint64_t>(dim) << 32));
    switch (method) {
        case BenchMethod::elimination:
            return [a = sampler.skew<double>(dim)] { g_sink = g_sink + pf_elimination(a).value; };
        case BenchMethod::traces:
            return [a = sampler.skew<double>(dim)] { g_sink = g_sink + pfaffian(a); };
        case BenchMethod::lu:
            return [c = sampler.general<double>(dim)] { g_sink = g_sink + lu_det_inverse(c).det; };
        case BenchMethod::bell:
            return [c = sampler.general<double>(dim)] { g_sink = g_sink + det_via_bell(c); };
    }
    throw std::logic_error("unknown bench method");
}

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

}  // namespace

std::string_view to_string(BenchMethod method) {
    switch (method) {
        case BenchMethod::elimination: return "elimination";
        case BenchMethod::traces: return "traces";
        case BenchMethod::lu: return "lu";
        case BenchMethod::bell: return "bell";
    }
    return "?";
}

std::optional<BenchMethod> bench_method_from_string(std::string_view text) {
    for (auto m : {BenchMethod::elimination, BenchMethod::traces, BenchMethod::lu, BenchMethod::bell}) {
        if (text == to_string(m)) return m;
    }
    return std::nullopt;
}

std::optional<double> fit_loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) return std::nullopt;
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0) return std::nullopt;
    return (n * sxy - sx * sy) / denom;
}

BenchReport bench_suite(const BenchOptions& options) {
    if (options.repeat < 3) throw std::invalid_argument("bench: repeat must be >= 3");
    if (options.dims.empty()) throw std::invalid_argument("bench: no dims given");
    for (std::size_t i = 0; i < options.dims.size(); ++i) {
        if (options.dims[i] == 0) throw std::invalid_argument("bench: dims must be positive");
        if (i > 0 && options.dims[i] <= options.dims[i - 1]) {
            throw std::invalid_argument("bench: dims must be strictly ascending");
        }
        const bool pfaffian_method =
            options.method == BenchMethod::elimination || options.method == BenchMethod::traces;
        if (pfaffian_method && options.dims[i] % 2 != 0) {
            throw std::invalid_argument("bench: Pfaffian methods need even dims");
        }
    }

    BenchReport report;
    report.method = options.method;
    std::vector<double> xs, ys;
    for (const std::size_t dim : options.dims) {
        const auto kernel = make_kernel(options.method, dim, options.seed);

        // Calibrate: one warm-up call decides how many calls fill a sample.
        auto start = Clock::now();
        kernel();
        const double single = std::max(elapsed_ms(start), 1e-6);
        const unsigned calls = static_cast<unsigned>(std::clamp(std::ceil(options.min_sample_ms / single), 1.0, 1e6));

        std::vector<double> samples;
        samples.reserve(options.repeat);
        for (unsigned r = 0; r < options.repeat; ++r) {
            start = Clock::now();
            for (unsigned c = 0; c < calls; ++c) kernel();
            samples.push_back(elapsed_ms(start) / calls);
        }
        std::nth_element(samples.begin(), samples.begin() + samples.size() / 2, samples.end());
        const double median = samples[samples.size() / 2];

        report.rows.push_back({dim, median, calls});
        xs.push_back(static_cast<double>(dim));
        ys.push_back(median);
    }
    report.slope = fit_loglog_slope(xs, ys);
    return report;
}

}  // namespace pftrace::cli
