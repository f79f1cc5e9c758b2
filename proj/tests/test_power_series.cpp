#include "cdiff/power_series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cdiff;

namespace {

Series from(std::initializer_list<Rational> c) { return Series(std::vector<Rational>(c)); }

}  // namespace

TEST(PowerSeries, BasicAccessAndErrors) {
    const Series f = from({1, 2, 3});
    EXPECT_EQ(f.order(), 2u);
    EXPECT_EQ(coefficient(f, 1), Rational(2));
    EXPECT_THROW(coefficient(f, 3), std::out_of_range);
    EXPECT_THROW(f + Series(3), std::invalid_argument);
    EXPECT_THROW(ps_reciprocal(from({0, 1})), std::domain_error);
    EXPECT_THROW(ps_compose(elem_series("exp", 4), elem_series("cosh", 4)), std::domain_error);
    EXPECT_THROW(ps_compose(elem_series("exp", 2), elem_series("sinh", 4)), std::invalid_argument);
    EXPECT_THROW(ps_derivative(Series(0)), std::invalid_argument);
    EXPECT_THROW(elem_series("tan", 4), std::invalid_argument);
    EXPECT_THROW(ps_pow(from({0, 1}), -1), std::domain_error);
}

TEST(PowerSeries, SechMatchesKnownExpansion) {
    // 1/cosh x = 1 - x^2/2 + 5x^4/24 - 61x^6/720
    const Series s = elem_series(ElemFunction::sech, 6);
    EXPECT_EQ(s[0], Rational(1));
    EXPECT_EQ(s[2], Rational(-1, 2));
    EXPECT_EQ(s[4], Rational(5, 24));
    EXPECT_EQ(s[6], Rational(-61, 720));
    EXPECT_TRUE(s[1].is_zero() && s[3].is_zero() && s[5].is_zero());
}

TEST(PowerSeries, SechSquaredIsOneMinusTanhSquared) {
    const Series sech2 = ps_pow(elem_series("sech", 8), 2);
    EXPECT_EQ(sech2[0], Rational(1));
    EXPECT_EQ(sech2[2], Rational(-1));
    EXPECT_EQ(sech2[4], Rational(2, 3));
    const Series tanh = elem_series("tanh", 8);
    EXPECT_EQ(sech2, Series::one(8) - tanh * tanh);
    EXPECT_EQ(ps_derivative(tanh), sech2.truncated(7));
}

TEST(PowerSeries, AsinhKnownCoefficients) {
    const Series a = elem_series("asinh", 9);
    EXPECT_EQ(a[1], Rational(1));
    EXPECT_EQ(a[3], Rational(-1, 6));
    EXPECT_EQ(a[5], Rational(3, 40));
    EXPECT_EQ(a[7], Rational(-5, 112));
    EXPECT_EQ(a[9], Rational(35, 1152));
}

TEST(PowerSeries, CompositionInverses) {
    const std::size_t n = 15;
    EXPECT_EQ(ps_compose(elem_series("asinh", n), elem_series("sinh", n)), Series::identity(n));
    EXPECT_EQ(ps_compose(elem_series("sinh", n), elem_series("asinh", n)), Series::identity(n));
    // exp(2 asinh x) = (x + sqrt(1+x^2))^2, whose even part is 1 + 2x^2
    const Series e = ps_compose(elem_series("exp", n), ps_scale(elem_series("asinh", n), Rational(2)));
    EXPECT_EQ(e[0], Rational(1));
    EXPECT_EQ(e[2], Rational(2));
    EXPECT_TRUE(e[4].is_zero());
}

TEST(PowerSeries, PowersAndDilation) {
    const Series f = from({1, 1, 0, 0, 0});
    EXPECT_EQ(ps_pow(f, 4), binomial_series(Rational(4), 4));
    EXPECT_EQ(ps_pow(f, -2), binomial_series(Rational(-2), 4));
    EXPECT_EQ(ps_pow(f, 0), Series::one(4));
    EXPECT_EQ(ps_dilate(elem_series("exp", 4), Rational(2))[3], Rational(8, 6));
    EXPECT_EQ(ps_integral(ps_derivative(elem_series("sinh", 6))), elem_series("sinh", 6));
}

TEST(PowerSeries, PropertyReciprocalAndParity) {
    std::mt19937 rng(314159);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int trial = 0; trial < 40; ++trial) {
        Series f(10);
        for (std::size_t k = 0; k <= 10; ++k) f[k] = Rational(c(rng), (c(rng) % 5 + 6));
        if (f[0].is_zero()) f[0] = 1;
        EXPECT_EQ(f * ps_reciprocal(f), Series::one(10));
        // composing with an odd series preserves the parity of the outer series
        Series even(10);
        for (std::size_t k = 0; k <= 10; k += 2) even[k] = f[k];
        const Series g = ps_compose(even, elem_series("sinh", 10));
        for (std::size_t k = 1; k <= 10; k += 2) EXPECT_TRUE(g[k].is_zero());
    }
}

TEST(PowerSeries, PolynomialCoefficientsSupportComposition) {
    // exp(y x) as a series in x with polynomial coefficients y^k / k!
    const std::size_t n = 6;
    PolySeries yx(n);
    yx[1] = Polynomial::monomial(1);
    const PolySeries e = ps_compose(elem_series("exp", n), yx);
    for (std::size_t k = 0; k <= n; ++k) {
        EXPECT_EQ(e[k], Polynomial::monomial(k, Rational(Integer(1), factorial(k))));
    }
}
