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
#include <string>
#include <vector>

namespace pftrace::cli {

struct VerifyOptions {
    std::size_t max_dim = 10;
    unsigned trials = 25;
    std::uint64_t seed = 42;
};

struct CheckResult {
    std::string name;
    std::size_t dim = 0;
    unsigned trials = 0;
    bool passed = false;
    std::string detail;
};

/// Runs the exact-arithmetic identity battery over seeded random inputs and
/// returns one result per (check, dim), in a fixed order. Deterministic for
/// a given set of options.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace pftrace::cli
