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

#include "pftrace/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace pftrace {

unsigned PartitionVector::weighted_sum() const {
    unsigned sum = 0;
    for (std::size_t l = 0; l < counts.size(); ++l) sum += static_cast<unsigned>(l + 1) * counts[l];
    return sum;
}

unsigned PartitionVector::total_parts() const {
    return std::accumulate(counts.begin(), counts.end(), 0U);
}

std::uint64_t partition_count(unsigned m) {
    std::vector<Integer> nu(m + 1, 0);
    nu[0] = 1;
    for (unsigned j = 1; j <= m; ++j) {
        Integer acc = 0;
        for (unsigned l = 1; l <= j; ++l) {
            Integer inner = 0;
            for (unsigned k = 1; k <= j / l; ++k) inner += nu[j - l * k];
            acc += l * inner;
        }
        nu[j] = acc / j;
    }
    if (!nu[m].fits_ulong_p()) throw std::overflow_error("partition_count: result exceeds 64 bits");
    return nu[m].get_ui();
}

namespace {

void descend(unsigned part, unsigned remaining, PartitionVector& current,
             std::vector<PartitionVector>& out) {
    const unsigned length = static_cast<unsigned>(current.counts.size());
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (part > length || part > remaining) return;
    for (unsigned k = remaining / part + 1; k-- > 0;) {
        current.counts[part - 1] = k;
        descend(part + 1, remaining - k * part, current, out);
    }
    current.counts[part - 1] = 0;
}

}  // namespace

std::vector<PartitionVector> enumerate_weighted(unsigned weight, unsigned length) {
    if (length < weight) throw std::invalid_argument("enumerate_weighted: length < weight");
    PartitionVector current{std::vector<unsigned>(length, 0), weight};
    std::vector<PartitionVector> out;
    descend(1, weight, current, out);
    return out;
}

std::vector<PartitionVector> enumerate_diophantine(unsigned n) {
    if (n == 0) throw std::invalid_argument("enumerate_diophantine: n must be >= 1");
    return enumerate_weighted(n, n);
}

std::vector<ShiftedPartition> enumerate_shifted(unsigned n) {
    if (n == 0) throw std::invalid_argument("enumerate_shifted: n must be >= 1");
    std::vector<ShiftedPartition> out;
    for (unsigned s = n; s-- > 0;) {
        for (auto& parts : enumerate_weighted(n - 1 - s, n - 1)) {
            out.push_back({s, std::move(parts)});
        }
    }
    return out;
}

Integer binomial(unsigned n, unsigned k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

template <Scalar T>
BellTable<T> complete_bell(std::span<const T> args) {
    const std::size_t order = args.size();
    BellTable<T> table;
    table.args.assign(args.begin(), args.end());
    table.values.reserve(order + 1);
    table.values.push_back(T(1));
    for (std::size_t n = 1; n <= order; ++n) {
        T acc(0);
        for (std::size_t m = 1; m <= n; ++m) {
            const T coeff = ScalarTraits<T>::from_integer(
                binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(m - 1)));
            acc += coeff * args[m - 1] * table.values[n - m];
        }
        table.values.push_back(acc);
    }
    return table;
}

template <Scalar T>
std::vector<T> normalized_bell(std::span<const T> scaled_args) {
    const std::size_t order = scaled_args.size();
    std::vector<T> c;
    c.reserve(order + 1);
    c.push_back(T(1));
    for (std::size_t n = 1; n <= order; ++n) {
        T acc(0);
        for (std::size_t m = 1; m <= n; ++m) {
            acc += T(static_cast<long>(m)) * scaled_args[m - 1] * c[n - m];
        }
        acc /= T(static_cast<long>(n));
        c.push_back(acc);
    }
    return c;
}

template BellTable<Rational> complete_bell(std::span<const Rational>);
template BellTable<double> complete_bell(std::span<const double>);
template std::vector<Rational> normalized_bell(std::span<const Rational>);
template std::vector<double> normalized_bell(std::span<const double>);

}  // namespace pftrace
