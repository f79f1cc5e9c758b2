#include "cdiff/polynomial.hpp"
#include "cdiff/rational.hpp"
#include "cdiff/triangle.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cdiff;

TEST(Rational, ConstructionCanonicalizes) {
    Rational r(6, -8);
    EXPECT_EQ(r.num(), -3);
    EXPECT_EQ(r.den(), 4);
    EXPECT_EQ(r.str(), "-3/4");
    EXPECT_EQ(Rational(10, 5).str(), "2");
    EXPECT_TRUE(Rational(10, 5).is_integer());
    EXPECT_EQ(Rational().sign(), 0);
}

TEST(Rational, ZeroDenominatorAndDivisionThrow) {
    EXPECT_THROW(Rational(1, 0), std::domain_error);
    EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
    EXPECT_THROW(Rational(0).inverse(), std::domain_error);
    EXPECT_THROW(Rational(1, 3).to_integer(), std::domain_error);
}

TEST(Rational, ParseAcceptsIntegersAndFractions) {
    EXPECT_EQ(Rational::parse("-1/4"), Rational(-1, 4));
    EXPECT_EQ(Rational::parse("12"), Rational(12));
    EXPECT_EQ(Rational::parse("4/8"), Rational(1, 2));
    EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("1/x"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, OrderingAndArithmetic) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
    EXPECT_EQ(Rational(1, 2) * Rational(2, 3), Rational(1, 3));
    EXPECT_EQ(Rational(3, 7).inverse(), Rational(7, 3));
    EXPECT_EQ(pow(Rational(-2, 3), 3), Rational(-8, 27));
    EXPECT_EQ(pow(Rational(0), 0), Rational(1));
}

TEST(Rational, PropertyStringRoundTripAndFieldAxioms) {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        long d = dist(rng);
        if (d == 0) d = 1;
        const Rational a(dist(rng), d);
        const Rational b(dist(rng), std::abs(d) + 1);
        EXPECT_EQ(Rational::parse(a.str()), a);
        EXPECT_EQ(a + b - b, a);
        EXPECT_EQ((a + b) * b, a * b + b * b);
        if (!b.is_zero()) EXPECT_EQ(a / b * b, a);
        EXPECT_GT(a.den(), 0);
    }
}

TEST(Combinatorics, FactorialsAndBinomials) {
    EXPECT_EQ(factorial(0), 1);
    EXPECT_EQ(factorial(10), 3628800);
    EXPECT_EQ(double_factorial(7), 105);
    EXPECT_EQ(double_factorial(8), 384);
    EXPECT_EQ(binomial(10, 3), 120);
    EXPECT_EQ(binomial(3, 5), 0);
    EXPECT_EQ(ipow(Integer(3), 4), 81);
    EXPECT_EQ(sign_pow(3), -1);
    EXPECT_EQ(sign_pow(4), 1);
}

TEST(Combinatorics, GeneralizedBinomialKnownValues) {
    // (1+x)^(-1/2) = 1 - x/2 + 3x^2/8 - 5x^3/16
    EXPECT_EQ(binomial_general(Rational(-1, 2), 0), Rational(1));
    EXPECT_EQ(binomial_general(Rational(-1, 2), 1), Rational(-1, 2));
    EXPECT_EQ(binomial_general(Rational(-1, 2), 2), Rational(3, 8));
    EXPECT_EQ(binomial_general(Rational(-1, 2), 3), Rational(-5, 16));
    EXPECT_EQ(binomial_general(Rational(-3), 2), Rational(6));
}

TEST(Combinatorics, PropertyGeneralizedBinomialPascalRule) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-40, 40), den(1, 9);
    for (int i = 0; i < 100; ++i) {
        const Rational alpha(num(rng), den(rng));
        for (std::size_t k = 1; k < 8; ++k) {
            EXPECT_EQ(binomial_general(alpha + Rational(1), k),
                      binomial_general(alpha, k) + binomial_general(alpha, k - 1));
        }
    }
    for (std::size_t n = 0; n < 15; ++n) {
        for (std::size_t k = 0; k <= n + 2; ++k) {
            EXPECT_EQ(binomial_general(Rational(static_cast<long>(n)), k), Rational(binomial(n, k)));
        }
    }
}

TEST(Polynomial, ArithmeticEvaluationAndShift) {
    const Polynomial p({Rational(1), Rational(2), Rational(3)});  // 1 + 2x + 3x^2
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(p(Rational(2)), Rational(17));
    EXPECT_EQ(p.derivative(), Polynomial({Rational(2), Rational(6)}));
    EXPECT_EQ(p.shifted(Rational(1))(Rational(0)), p(Rational(1)));
    EXPECT_EQ((p - p).degree(), -1);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(pow(Polynomial::linear(Rational(1)), 3).coeff(1), Rational(3));
    EXPECT_EQ(p.coeff(17), Rational(0));
    EXPECT_EQ(Polynomial::monomial(2, Rational(5)) * Polynomial::monomial(3), Polynomial::monomial(5, Rational(5)));
}

TEST(Polynomial, PropertyProductEvaluatesPointwise) {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> c(-9, 9);
    for (int i = 0; i < 50; ++i) {
        std::vector<Rational> a(5), b(4);
        for (auto& v : a) v = Rational(c(rng), 3);
        for (auto& v : b) v = Rational(c(rng), 2);
        const Polynomial pa(a), pb(b);
        const Rational x(c(rng), 7);
        EXPECT_EQ((pa * pb)(x), pa(x) * pb(x));
        EXPECT_EQ((pa + pb)(x), pa(x) + pb(x));
        EXPECT_EQ(pa.shifted(Rational(1, 2))(x), pa(x + Rational(1, 2)));
    }
}

TEST(Triangle, ValidatesShapeAndBounds) {
    EXPECT_THROW(Triangle<int>("bad", {}, {{1}, {1}}), std::invalid_argument);
    const Triangle<int> t("ok", {{"rows", "1"}}, {{1}, {2, 3}});
    EXPECT_EQ(t(1, 1), 3);
    EXPECT_EQ(t.rows(), 2u);
    EXPECT_EQ(t.name(), "ok");
    EXPECT_THROW(t.at(1, 2), std::out_of_range);
    EXPECT_THROW(t.at(2, 0), std::out_of_range);
    EXPECT_THROW(t.row(5), std::out_of_range);
}
