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

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace pftrace {
namespace {

using testing::Q;
using MatQ = Matrix<Q>;

TEST(DetDefinition, Examples) {
    EXPECT_EQ(det_definition(MatQ::identity(4)), 1);
    EXPECT_EQ(det_definition(MatQ{{1, 2}, {3, 4}}), -2);
    EXPECT_EQ(det_definition(MatQ{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}), 0);
    EXPECT_EQ(det_definition(MatQ{{Q(7, 3)}}), Q(7, 3));
}

TEST(DetDefinition, ThreeByThreeRuleOfSarrus) {
    MatQ c{{2, -1, 0}, {1, 3, 4}, {0, 5, -2}};
    const Q sarrus = Q(2 * 3 * -2) + Q(-1 * 4 * 0) + Q(0 * 1 * 5) - Q(0 * 3 * 0) - Q(2 * 4 * 5) - Q(-1 * 1 * -2);
    EXPECT_EQ(det_definition(c), sarrus);
}

TEST(DetDefinition, Multiplicative) {
    MatrixSampler s(21);
    for (std::size_t n = 1; n <= 5; ++n) {
        const MatQ x = s.general<Q>(n);
        const MatQ y = s.general<Q>(n);
        EXPECT_EQ(det_definition(MatQ(x * y)), det_definition(x) * det_definition(y));
    }
}

TEST(DetDefinition, OracleCap) {
    EXPECT_THROW(det_definition(MatQ(9)), DimensionTooLargeForOracle);
    EXPECT_NO_THROW(det_definition(MatQ(9), OracleLimits{9, 12}));
}

TEST(PfDefinition, Examples) {
    EXPECT_EQ(pf_definition(check_skew(MatQ{{0, 1}, {-1, 0}})), 1);
    for (std::size_t n = 1; n <= 6; ++n) EXPECT_EQ(pf_definition(reference_skew<Q>(n)), 1);
}

TEST(PfDefinition, FourByFourClosedForm) {
    MatrixSampler s(8);
    for (int t = 0; t < 20; ++t) {
        const auto a = s.skew<Q>(4);
        EXPECT_EQ(pf_definition(a), a(0, 1) * a(2, 3) - a(0, 2) * a(1, 3) + a(0, 3) * a(1, 2));
    }
}

TEST(PfDefinition, Errors) {
    EXPECT_THROW(pf_definition(check_skew(MatQ(3))), OddDimension);
    EXPECT_THROW(pf_definition(check_skew(MatQ(14))), DimensionTooLargeForOracle);
}

TEST(PfDefinition, CayleySquareIsDeterminant) {
    MatrixSampler s(31);
    for (std::size_t d = 2; d <= 8; d += 2) {
        for (int t = 0; t < 10; ++t) {
            const auto a = s.skew<Q>(d);
            const Q pf = pf_definition(a);
            EXPECT_EQ(pf * pf, det_definition(a.matrix()));
        }
    }
}

TEST(PfDefinition, CongruenceCovariance) {
    MatrixSampler s(41);
    for (std::size_t d = 2; d <= 6; d += 2) {
        const auto a = s.skew<Q>(d);
        const MatQ b = s.general<Q>(d);
        const auto bab = check_skew(MatQ(b * a.matrix() * b.transpose()));
        EXPECT_EQ(pf_definition(bab), det_definition(b) * pf_definition(a));
    }
}

TEST(AdjugateDefinition, Examples) {
    EXPECT_EQ(adjugate_definition(MatQ{{1, 2}, {3, 4}}), MatQ({{4, -2}, {-3, 1}}));
    EXPECT_EQ(adjugate_definition(MatQ::identity(3)), MatQ::identity(3));
    EXPECT_EQ(adjugate_definition(MatQ{{1, 1}, {1, 1}}), MatQ({{1, -1}, {-1, 1}}));
    EXPECT_EQ(adjugate_definition(MatQ{{5}}), MatQ::identity(1));
}

TEST(AdjugateDefinition, DefiningProperty) {
    MatrixSampler s(51);
    for (std::size_t n = 1; n <= 5; ++n) {
        const MatQ c = s.general<Q>(n);
        EXPECT_EQ(c * adjugate_definition(c), testing::scaled_identity(n, det_definition(c)));
    }
}

TEST(PfAdjugateDefinition, Examples) {
    const Q a = Q(7, 2);
    const auto m = check_skew(MatQ{{0, a}, {-a, 0}});
    EXPECT_EQ(pf_adjugate_definition(m), MatQ({{0, -1}, {1, 0}}));
    const auto j = reference_skew<Q>(2);
    EXPECT_EQ(pf_adjugate_definition(j), -j.matrix());
}

TEST(PfAdjugateDefinition, DefiningProperty) {
    MatrixSampler s(61);
    for (std::size_t d = 2; d <= 8; d += 2) {
        for (int t = 0; t < 5; ++t) {
            const auto a = s.skew<Q>(d);
            EXPECT_EQ(a.matrix() * pf_adjugate_definition(a), testing::scaled_identity(d, pf_definition(a)));
        }
    }
}

}  // namespace
}  // namespace pftrace
