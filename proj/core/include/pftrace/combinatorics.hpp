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
#include <cstdint>
#include <span>
#include <vector>

#include "pftrace/scalar.hpp"

namespace pftrace {

/// Multiplicities (k₁,…,k_L) of a partition: part size l occurs k_l times,
/// so Σ l·k_l equals `weight`.
struct PartitionVector {
    std::vector<unsigned> counts;
    unsigned weight = 0;

    /// Σ l·k_l, recomputed from the counts.
    unsigned weighted_sum() const;
    /// Σ k_l.
    unsigned total_parts() const;

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;
};

/// A power index s paired with a partition of the remaining weight, as used
/// by expansions of the form s + Σ l·k_l = n − 1.
struct ShiftedPartition {
    unsigned shift = 0;
    PartitionVector parts;

    friend bool operator==(const ShiftedPartition&, const ShiftedPartition&) = default;
};

/// Number of partitions of m via the divisor-sum recursion
///   ν(m) = (1/m) Σ_{l=1}^{m} l Σ_{k=1}^{⌊m/l⌋} ν(m − l·k),  ν(0) = 1.
/// Throws std::overflow_error if ν(m) does not fit in 64 bits.
std::uint64_t partition_count(unsigned m);

/// Every (k₁,…,k_n) with Σ l·k_l = n, in descending lexicographic order
/// (k₁ first). Enumerated by bounded descent, independently of
/// partition_count. Requires n ≥ 1.
std::vector<PartitionVector> enumerate_diophantine(unsigned n);

/// Solutions of Σ l·k_l = weight padded to `length` slots. Weight 0 yields
/// the single all-zero vector. Requires length ≥ weight.
std::vector<PartitionVector> enumerate_weighted(unsigned weight, unsigned length);

/// Every (s, (k₁,…,k_{n−1})) with s + Σ l·k_l = n − 1, s descending.
/// Requires n ≥ 1.
std::vector<ShiftedPartition> enumerate_shifted(unsigned n);

/// Exact binomial coefficient C(n, k); zero when k > n.
Integer binomial(unsigned n, unsigned k);

/// Exact n!.
Integer factorial(unsigned n);

/// B₀…B_N for arguments x₁…x_N. `values[0]` is the multiplicative identity.
template <Scalar T>
struct BellTable {
    std::vector<T> values;
    std::vector<T> args;

    std::size_t order() const noexcept { return args.size(); }
};

/// Complete Bell polynomials by the binomial recursion
///   B_n = Σ_{m=1}^{n} C(n−1, m−1)·x_m·B_{n−m},  B₀ = 1,
/// with the binomials taken exactly over the integers. O(N²).
template <Scalar T>
BellTable<T> complete_bell(std::span<const T> args);

/// B_n/n! for n = 0…N, given the pre-scaled arguments y_m = x_m/m!.
/// Same recursion divided through by n!:
///   c_n = (1/n) Σ_{m=1}^{n} m·y_m·c_{n−m},  c₀ = 1.
template <Scalar T>
std::vector<T> normalized_bell(std::span<const T> scaled_args);

}  // namespace pftrace
