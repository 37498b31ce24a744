#include "vieta/exactnum.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using vieta::BigInt;
using vieta::ExactQuad;
using vieta::Rational;

namespace {

ExactQuad q(long pn, long pd, long qn, long qd, long d) { return {Rational(pn, pd), Rational(qn, qd), d}; }

const ExactQuad phi = q(1, 2, 1, 2, 5);

}  // namespace

TEST(BigInt, DecimalRoundTrip) {
    std::string digits(100000, '7');
    digits.front() = '-';
    BigInt x = vieta::parse_bigint(digits);
    EXPECT_EQ(vieta::to_string(x), digits);
    EXPECT_EQ(vieta::to_string(x * x / x), digits);
    EXPECT_EQ(vieta::parse_bigint("+42"), 42);
    EXPECT_THROW(vieta::parse_bigint("12a"), std::invalid_argument);
    EXPECT_THROW(vieta::parse_bigint(""), std::invalid_argument);
    EXPECT_THROW(vieta::parse_bigint("-"), std::invalid_argument);
}

TEST(Rational, NormalizesEagerly) {
    Rational x(BigInt(6), BigInt(-4));
    EXPECT_EQ(x.num(), -3);
    EXPECT_EQ(x.den(), 2);
    EXPECT_EQ(x.str(), "-3/2");
    EXPECT_EQ(Rational(BigInt(0), BigInt(-7)).den(), 1);
    EXPECT_EQ(Rational::parse("2848/11").str(), "2848/11");
    EXPECT_EQ(Rational::parse("10/5"), Rational(2));
    EXPECT_THROW(Rational(BigInt(1), BigInt(0)), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, OperationsStayReduced) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-500, 500);
    for (int i = 0; i < 2000; ++i) {
        long d1 = dist(rng), d2 = dist(rng);
        if (d1 == 0 || d2 == 0) continue;
        Rational x(BigInt(dist(rng)), BigInt(d1)), y(BigInt(dist(rng)), BigInt(d2));
        std::vector<Rational> results{x + y, x - y, x * y};
        if (!y.is_zero()) results.push_back(x / y);
        for (const auto& z : results) {
            ASSERT_GT(z.den(), 0);
            ASSERT_EQ(vieta::gcd(z.num(), z.den()), 1) << z;
        }
        ASSERT_EQ((x + y) - y, x);
        ASSERT_EQ(x < y, x.num() * y.den() < y.num() * x.den());
    }
}

TEST(ExactQuad, AddExamples) {
    EXPECT_EQ(q(1, 1, 0, 1, 5) + q(0, 1, 1, 1, 5), q(1, 1, 1, 1, 5));
    EXPECT_EQ(q(3, 2, 1, 2, 5) + q(3, 2, -1, 2, 5), ExactQuad::rational(3, 5));
    EXPECT_EQ(q(2, 1, 1, 1, 3) + q(2, 1, -1, 1, 3), ExactQuad::rational(4, 3));
}

TEST(ExactQuad, MulExamples) {
    EXPECT_EQ(phi * phi, q(3, 2, 1, 2, 5));
    EXPECT_EQ(phi * phi, phi + ExactQuad::one(5));
    EXPECT_EQ(q(2, 1, 1, 1, 3) * q(2, 1, -1, 1, 3), ExactQuad::one(3));
    EXPECT_EQ(q(3, 2, 1, 2, 5) * q(3, 2, -1, 2, 5), ExactQuad::one(5));
}

TEST(ExactQuad, MixedFieldsRejected) {
    EXPECT_THROW(phi + ExactQuad::one(3), std::domain_error);
    EXPECT_THROW(phi * ExactQuad::one(3), std::domain_error);
    EXPECT_THROW(ExactQuad(1, 1, 4), std::domain_error);
    EXPECT_THROW(ExactQuad(1, 1, 12), std::domain_error);
    EXPECT_THROW(ExactQuad(1, 1, 1), std::domain_error);
}

TEST(ExactQuad, PowExamples) {
    EXPECT_EQ(vieta::quad_pow(q(2, 1, 1, 1, 3), 2), q(7, 1, 4, 1, 3));
    // oracle: five repeated multiplications
    ExactQuad five = oracle::repeated_mul(phi, 5);
    EXPECT_EQ(five, q(11, 2, 5, 2, 5));
    EXPECT_EQ(vieta::quad_pow(phi, 5), five);
    EXPECT_EQ(vieta::quad_pow(phi, 0), ExactQuad::one(5));
    EXPECT_EQ(vieta::quad_pow(q(-7, 3, 2, 9, 3), 0), ExactQuad::one(3));
}

TEST(ExactQuad, RationalPart) {
    EXPECT_EQ(vieta::rational_part(ExactQuad::rational(3, 5)), Rational(3));
    EXPECT_FALSE(vieta::rational_part(q(1, 1, 1, 1, 5)).has_value());
}

TEST(ExactQuad, PrintsPlusQSqrtD) {
    EXPECT_EQ(q(-1, 2, 3, 4, 5).str(), "-1/2 + 3/4*sqrt(5)");
    EXPECT_EQ(q(0, 1, -1, 1, 3).str(), "0 + -1*sqrt(3)");
}

TEST(ExactQuad, RingLaws) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 6), exp(0, 12);
    for (long d : {3L, 5L}) {
        for (int i = 0; i < 300; ++i) {
            ExactQuad x = q(num(rng), den(rng), num(rng), den(rng), d);
            ExactQuad y = q(num(rng), den(rng), num(rng), den(rng), d);
            ASSERT_EQ(x * y, y * x);
            ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
            ASSERT_EQ((x + y).conj(), x.conj() + y.conj());
            auto m = static_cast<std::uint64_t>(exp(rng)), n = static_cast<std::uint64_t>(exp(rng));
            ASSERT_EQ(vieta::quad_pow(x, m + n), vieta::quad_pow(x, m) * vieta::quad_pow(x, n));
            ASSERT_EQ(vieta::quad_pow(x, n), oracle::repeated_mul(x, static_cast<int>(n)));
            if (!(y == ExactQuad::rational(0, d))) {
                ASSERT_EQ(x / y * y, x);
            }
        }
    }
}
