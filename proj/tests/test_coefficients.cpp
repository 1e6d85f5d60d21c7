/*
   Copyright 2026 The ftmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"

using namespace ftmod;
using namespace ftmod::testing;

TEST(FiniteField, DefaultHeadersAndModuli) {
    EXPECT_EQ(gf("GF(3^2)")->header(), "GF(3^2; mod=g^2+g+2)");
    EXPECT_EQ(gf("GF(2^3)")->header(), "GF(2^3; mod=g^3+g+1)");
    EXPECT_EQ(gf("GF(5)")->header(), "GF(5)");
}

TEST(FiniteField, PrimeFieldRendersIntegers) {
    auto f = gf("GF(5)");
    EXPECT_EQ((GF::from_int(f, 3) * GF::from_int(f, 4)).str(), "2");
    EXPECT_EQ(GF::from_int(f, -1).str(), "4");
    EXPECT_EQ(GF::theta(f), GF::generator(f));
    EXPECT_EQ(GF::theta(f).pow(4), GF::one(f));
    EXPECT_NE(GF::theta(f).pow(2), GF::one(f));
}

TEST(FiniteField, ThetaIsGeneratorAndTwistIsFrobenius) {
    auto f = gf("GF(3^2)");
    const GF g = GF::theta(f);
    EXPECT_EQ(g, GF::generator(f));
    EXPECT_EQ(g.twist(1), g.pow(3));
    EXPECT_EQ(g.twist(2), g);
    EXPECT_EQ(g.twist(-1), g.pow(3));
    EXPECT_EQ(g * g.inv(), GF::one(f));
}

TEST(FiniteField, FieldAxiomsOnAllOfF8) {
    auto f = gf("GF(2^3)");
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b) {
            const GF x = GF::from_index(f, a), y = GF::from_index(f, b);
            EXPECT_EQ(x * y, y * x);
            EXPECT_EQ((x + y).twist(1), x.twist(1) + y.twist(1));
            EXPECT_EQ((x * y).twist(1), x.twist(1) * y.twist(1));
            if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
        }
}

TEST(FiniteField, SmallerConstantFieldTwistsBySubfieldFrobenius) {
    auto f = gf("GF(2^4; q=2^2)");
    const GF g = GF::generator(f);
    EXPECT_EQ(g.twist(1), g.pow(4));
    EXPECT_EQ(GF::from_index(f, 0).twist(1), GF::zero(f));
}

TEST(FiniteField, MixedFieldsAreRejected) {
    auto f = gf("GF(3^2)"), g = gf("GF(3^2)");
    EXPECT_THROW((void)(GF::one(f) + GF::one(g)), MixedFields);
}

TEST(FiniteField, InvalidFieldSpecs) {
    EXPECT_THROW(gf("GF(4)"), InvalidField);
    EXPECT_THROW(gf("GF(3^2; mod=g^2+1+1)"), Error);
}

TEST(RationalFunctions, NormalizedFractions) {
    auto f = rf();
    const RF th = RF::theta(f);
    EXPECT_EQ((th / (th + RF::one(f))).str(), "th/(th + 1)");
    EXPECT_EQ(((th * th - RF::one(f)) / (th - RF::one(f))).str(), "th + 1");
    EXPECT_EQ((th - th.twist(1)).str(), "2*th^3 + th");
}

TEST(RationalFunctions, TwistIsQthPower) {
    auto f = rf();
    const RF x = RF::theta(f) / (RF::theta(f) + RF::one(f));
    EXPECT_EQ(x.twist(1), x.pow(3));
    EXPECT_EQ(x.twist(2), x.pow(9));
}

TEST(RationalFunctions, NegativeTwistNeedsExactRoot) {
    auto f = rf();
    const RF th = RF::theta(f);
    EXPECT_EQ(th.pow(3).twist(-1), th);
    EXPECT_EQ(th.twist(1).twist(-1), th);
    EXPECT_THROW(th.twist(-1), NotAQthPower);
}

TEST(RationalFunctions, DivisionByZero) {
    auto f = rf();
    EXPECT_THROW(RF::one(f) / RF::zero(f), DivisionByZero);
}

TEST(FormalTwistField, RenderingSortsSymbols) {
    auto f = ft();
    const FT a = *FT::symbol(f, "a", 0), b = *FT::symbol(f, "b", 0), th = FT::theta(f);
    EXPECT_EQ((b * b.twist(2) * b.twist(4) / (a.twist(2) * a.twist(5))).str(), "b*b[2]*b[4]/(a[2]*a[5])");
    EXPECT_EQ(((b / a.twist(1)) * (th - th.twist(1))).str(), "(b*th + 2*b*th[1])/a[1]");
}

TEST(FormalTwistField, TwistShiftsIndicesBothWays) {
    auto f = ft();
    const FT a = *FT::symbol(f, "a", 0), th = FT::theta(f);
    EXPECT_EQ((a * th.twist(1)).twist(-1), a.twist(-1) * th);
    EXPECT_EQ(a.twist(3).twist(-3), a);
    EXPECT_EQ((a.twist(-5) * a.twist(-8)).str(), "a[-8]*a[-5]");
}

TEST(FormalTwistField, OnlyInvertibleGeneratorsDivide) {
    auto f = ft();
    const FT a = *FT::symbol(f, "a", 0), b = *FT::symbol(f, "b", 0);
    EXPECT_NO_THROW(b / a);
    EXPECT_THROW(a / b, NonMonomialDenominator);
    EXPECT_THROW(a / (a + b), NonMonomialDenominator);
}

TEST(FormalTwistField, RingLawsOnRandomExpressions) {
    auto f = ft();
    const FT a = *FT::symbol(f, "a", 0), b = *FT::symbol(f, "b", 0), th = FT::theta(f);
    std::mt19937 rng(3);
    auto pick = [&] {
        const FT atoms[] = {a, b, th, FT::one(f), FT::from_int(f, 2)};
        FT x = FT::zero(f);
        for (int k = 0; k < 3; ++k) x = x + atoms[rng() % 5].twist(static_cast<int>(rng() % 5) - 2) * atoms[rng() % 5];
        return x;
    };
    for (int s = 0; s < 50; ++s) {
        const FT x = pick(), y = pick(), z = pick();
        EXPECT_EQ((x + y) * z, x * z + y * z);
        EXPECT_EQ((x * y).twist(2), x.twist(2) * y.twist(2));
        EXPECT_EQ(x - x, FT::zero(f));
    }
}
