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

#include "pftrace/matrix.hpp"
#include "pftrace/random.hpp"

namespace pftrace {
namespace {

using Q = Rational;
using MatQ = Matrix<Q>;

TEST(Matrix, IdentityProduct) {
    MatQ x{{1, 2}, {3, 4}};
    EXPECT_EQ(MatQ::identity(2) * x, x);
    EXPECT_EQ(x * MatQ::identity(2), x);
}

TEST(Matrix, SigmaSquaredIsMinusIdentity) {
    MatQ j{{0, 1}, {-1, 0}};
    EXPECT_EQ(j * j, MatQ({{-1, 0}, {0, -1}}));
}

TEST(Matrix, ProductMatchesHandExpansion) {
    MatQ x{{1, 2}, {3, 4}};
    MatQ y{{Q(1, 2), 0}, {-1, 3}};
    EXPECT_EQ(x * y, MatQ({{Q(-3, 2), 6}, {Q(-5, 2), 12}}));
    Matrix<double> xf{{1, 2}, {3, 4}};
    Matrix<double> yf{{0.5, 0}, {-1, 3}};
    EXPECT_EQ(xf * yf, Matrix<double>({{-1.5, 6}, {-2.5, 12}}));
}

TEST(Matrix, DimensionMismatch) {
    MatQ a(2), b(3);
    EXPECT_THROW(a * b, DimensionMismatch);
    EXPECT_THROW(a + b, DimensionMismatch);
    EXPECT_THROW(MatQ(2, std::vector<Q>(3)), DimensionMismatch);
}

TEST(Matrix, TraceAndTranspose) {
    MatQ x{{1, 2}, {3, 4}};
    EXPECT_EQ(x.trace(), 5);
    EXPECT_EQ(x.transpose(), MatQ({{1, 3}, {2, 4}}));
    EXPECT_EQ(trace_of_product(x, x), 29);
}

TEST(CheckSkew, AcceptsSkew) {
    auto s = check_skew(MatQ{{0, 1}, {-1, 0}});
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_EQ(s.half_dim(), 1u);
}

TEST(CheckSkew, ReportsFirstOffendingPair) {
    try {
        check_skew(MatQ{{0, 1}, {1, 0}});
        FAIL() << "expected NotSkew";
    } catch (const NotSkew& e) {
        EXPECT_EQ(e.row(), 1u);
        EXPECT_EQ(e.col(), 0u);
    }
    EXPECT_THROW(check_skew(MatQ{{1, 0}, {0, 0}}), NotSkew);
}

TEST(CheckSkew, FloatTolerance) {
    Matrix<double> near{{0, 1}, {-1 - 1e-15, 0}};
    EXPECT_NO_THROW(check_skew(near));
    Matrix<double> far{{0, 1}, {-1.001, 0}};
    EXPECT_THROW(check_skew(far), NotSkew);
}

TEST(CheckSkew, OddHalfDimThrows) {
    auto s = check_skew(MatQ(3));
    EXPECT_THROW(s.half_dim(), OddDimension);
}

TEST(SkewPart, AlwaysSkew) {
    MatrixSampler s(3);
    for (int t = 0; t < 10; ++t) {
        const MatQ x = s.general<Q>(5);
        const auto k = skew_part(x);
        EXPECT_EQ(k.matrix(), (x - x.transpose()) * Q(1, 2));
        EXPECT_NO_THROW(check_skew(k.matrix()));
    }
}

TEST(ReferenceSkew, BlockDiagonal) {
    auto j = reference_skew<Q>(2);
    EXPECT_EQ(j.matrix(), MatQ({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}));
    EXPECT_EQ(j.matrix() * j.matrix(), MatQ::identity(4) * Q(-1));
}

TEST(TracePowers, Examples) {
    auto t = trace_powers(MatQ::identity(3), 2);
    ASSERT_EQ(t.size(), 2u);
    EXPECT_EQ(t[1], 3);
    EXPECT_EQ(t[2], 3);

    auto u = trace_powers(MatQ{{1, 2}, {3, 4}}, 2);
    EXPECT_EQ(u[1], 5);
    EXPECT_EQ(u[2], 29);
}

TEST(TracePowers, OddPowersOfSkewVanish) {
    MatrixSampler s(5);
    for (std::size_t d : {2, 3, 4, 6}) {
        auto a = s.skew<Q>(d);
        auto t = trace_powers(a.matrix(), 7);
        for (std::size_t l = 1; l <= 7; l += 2) EXPECT_EQ(t[l], 0) << "d=" << d << " l=" << l;
    }
}

TEST(PowerTable, PowersAndTraces) {
    MatQ x{{1, 1}, {0, 1}};
    auto p = power_table(x, 3, 4);
    ASSERT_EQ(p.powers.size(), 4u);
    EXPECT_EQ(p.powers[0], MatQ::identity(2));
    EXPECT_EQ(p.powers[3], MatQ({{1, 3}, {0, 1}}));
    EXPECT_EQ(p.traces[4], 2);
}

TEST(ParseRational, AcceptsAndRejects) {
    EXPECT_EQ(parse_rational("3"), 3);
    EXPECT_EQ(parse_rational("-6/4"), Q(-3, 2));
    EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
    EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
    EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Sampler, Deterministic) {
    MatrixSampler a(99), b(99);
    EXPECT_EQ(a.skew<Q>(6), b.skew<Q>(6));
    EXPECT_EQ(a.general<double>(4), b.general<double>(4));
}

TEST(Sampler, EntryRanges) {
    MatrixSampler s(1);
    for (int i = 0; i < 500; ++i) {
        const Q q = s.entry<Q>();
        EXPECT_LE(abs(q.get_num()), 9);
        EXPECT_LE(q.get_den(), 9);
        const double d = s.entry<double>();
        EXPECT_GE(d, -1.0);
        EXPECT_LT(d, 1.0);
    }
}

}  // namespace
}  // namespace pftrace
