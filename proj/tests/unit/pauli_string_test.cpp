// Copyright 2026 The pcsmp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pcsmp/pauli_string.hpp"

#include <random>

#include <gtest/gtest.h>

#include "pcsmp/errors.hpp"
#include "support.hpp"

namespace pcs {
namespace {

using testing::pauli_oracle;

TEST(PauliStringTest, ParsesSignsAndIdentityLetters) {
    const auto p = PauliString::from_str("-iX.Z_Y");
    EXPECT_EQ(p.size(), 5u);
    EXPECT_EQ(p.log_i(), 3);
    EXPECT_EQ(p[0], Pauli::X);
    EXPECT_EQ(p[1], Pauli::I);
    EXPECT_EQ(p[2], Pauli::Z);
    EXPECT_EQ(p[3], Pauli::I);
    EXPECT_EQ(p[4], Pauli::Y);
    EXPECT_EQ(p.str(), "-iXIZIY");
    EXPECT_EQ(PauliString::from_str("XY").log_i(), 0);
    EXPECT_EQ(PauliString::from_str("iZ").log_i(), 1);
    EXPECT_EQ(PauliString::from_str("-Z").log_i(), 2);
}

TEST(PauliStringTest, StrRoundTrips) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const auto p = testing::random_pauli(1 + i % 7, rng);
        EXPECT_EQ(PauliString::from_str(p.str()), p);
    }
}

TEST(PauliStringTest, RejectsBadText) {
    EXPECT_THROW(PauliString::from_str("+XQ"), InvalidParameterError);
    EXPECT_THROW(PauliString::from_str("+"), InvalidParameterError);
}

TEST(PauliStringTest, XTimesYIsIZ) {
    const auto xy = PauliString::from_str("X") * PauliString::from_str("Y");
    EXPECT_EQ(xy, PauliString::from_str("iZ"));
    const auto yx = PauliString::from_str("Y") * PauliString::from_str("X");
    EXPECT_EQ(yx, PauliString::from_str("-iZ"));
}

TEST(PauliStringTest, TwoQubitProductMatchesDenseOracle) {
    const auto a = PauliString::from_str("XZ");
    const auto b = PauliString::from_str("ZX");
    const auto ab = a * b;
    EXPECT_LT(testing::max_abs_diff(pauli_oracle(ab), pauli_oracle(a) * pauli_oracle(b)), 1e-12);
    EXPECT_EQ(ab, PauliString::from_str("YY"));
}

TEST(PauliStringTest, RandomProductsMatchDenseOracle) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        const std::size_t n = 1 + i % 4;
        const auto a = testing::random_pauli(n, rng);
        const auto b = testing::random_pauli(n, rng);
        EXPECT_LT(testing::max_abs_diff(pauli_oracle(a * b), pauli_oracle(a) * pauli_oracle(b)), 1e-12)
            << a.str() << " * " << b.str();
    }
}

TEST(PauliStringTest, ProductIsAssociative) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + i % 9;
        const auto a = testing::random_pauli(n, rng);
        const auto b = testing::random_pauli(n, rng);
        const auto c = testing::random_pauli(n, rng);
        ASSERT_EQ((a * b) * c, a * (b * c));
    }
}

TEST(PauliStringTest, CommutesAgreesWithProductOrder) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 1000; ++i) {
        const std::size_t n = 1 + i % 6;
        const auto a = testing::random_pauli(n, rng);
        const auto b = testing::random_pauli(n, rng);
        ASSERT_EQ(commutes(a, b), a * b == b * a);
        if (!commutes(a, b)) {
            auto ba = b * a;
            ba.negate();
            ASSERT_EQ(a * b, ba);
        }
    }
}

TEST(PauliStringTest, SquareOfHermitianIsIdentity) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 200; ++i) {
        const auto p = testing::random_pauli(1 + i % 5, rng, true);
        const auto sq = p * p;
        EXPECT_TRUE(sq.is_identity_ops());
        EXPECT_EQ(sq.log_i(), 0);
    }
}

TEST(PauliStringTest, LengthMismatchThrows) {
    const auto a = PauliString::from_str("XX");
    const auto b = PauliString::from_str("XXX");
    EXPECT_THROW(a * b, ShapeError);
    EXPECT_THROW((void)commutes(a, b), ShapeError);
}

TEST(PauliStringTest, WeightSupportAndSingle) {
    const auto p = PauliString::single(5, 3, Pauli::Y);
    EXPECT_EQ(p.str(), "+IIIYI");
    EXPECT_EQ(p.weight(), 1u);
    EXPECT_EQ(p.support(), std::vector<std::size_t>{3});
    EXPECT_TRUE(PauliString(4).is_identity_ops());
    EXPECT_FALSE(PauliString::from_str("iX").is_hermitian());
    EXPECT_EQ(PauliString::from_str("-iXZ").ops_only().str(), "+XZ");
}

TEST(PauliStringTest, PhaseValues) {
    EXPECT_EQ(PauliString::from_str("-iX").phase(), std::complex<double>(0, -1));
    EXPECT_EQ(PauliString::from_str("+X").phase(), std::complex<double>(1, 0));
}

}  // namespace
}  // namespace pcs
