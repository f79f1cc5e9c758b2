#include "cdiff/identities.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace cdiff;

namespace {

void expect_pass(const VerificationReport& r) {
    EXPECT_TRUE(r.passed()) << r.identity_id() << " [" << r.param_range() << "] "
                            << (r.passed() ? "" : r.counterexample()->parameters + ": " + r.counterexample()->lhs +
                                                      " vs " + r.counterexample()->rhs);
}

}  // namespace

TEST(ReportBuilder, KeepsOnlyFirstFailure) {
    ReportBuilder rb("demo", "0..3");
    EXPECT_TRUE(rb.check(Rational(1), Rational(1), [] { return std::string("a"); }));
    EXPECT_FALSE(rb.check(Rational(1), Rational(2), [] { return std::string("b"); }));
    EXPECT_FALSE(rb.check(Rational(3), Rational(4), [] { return std::string("c"); }));
    const auto r = rb.report();
    ASSERT_FALSE(r.passed());
    EXPECT_EQ(r.counterexample()->parameters, "b");
    EXPECT_EQ(r.counterexample()->lhs, "1");
    EXPECT_EQ(r.counterexample()->rhs, "2");
}

TEST(ReportBuilder, AbsorbPrefixesSubReport) {
    ReportBuilder rb("outer", "");
    rb.absorb(VerificationReport("ok", ""));
    EXPECT_FALSE(rb.failed());
    rb.absorb(VerificationReport("inner", "", Counterexample{"x=1", "2", "3"}));
    EXPECT_EQ(rb.report().counterexample()->parameters, "inner: x=1");
}

TEST(Identities, SumRuleAgainstClosedFormInTestCode) {
    // sum_n E_{2n}/2^{2n} t(2s, 2n) = (-1)^s ((2s-1)!!)^2 / 2^{2s}, Euler numbers frozen here
    const std::vector<long> e{1, -1, 5, -61, 1385, -50521, 2702765};
    const auto t = t_table(12);
    for (std::size_t s = 1; s <= 6; ++s) {
        Rational lhs;
        for (std::size_t n = 0; n <= s; ++n) lhs += Rational(e[n]) / Rational(ipow(Integer(2), 2 * n)) * t(2 * s, 2 * n);
        const Integer df = double_factorial(2 * s - 1);
        Rational rhs = Rational(df * df, ipow(Integer(2), 2 * s));
        if (s % 2 == 1) rhs = -rhs;
        EXPECT_EQ(lhs, rhs) << "s=" << s;
    }
    expect_pass(verify_SR(30));
}

TEST(Identities, ApplyToCentralFactorial) {
    const auto t = t_table(6);
    // D applied to 0^[3] is t(3,1) = -1/4; exp(D) 0^[n] = sum_k t(n,k) = (1)^[n]
    EXPECT_EQ(apply_to_central_factorial(Series::identity(6), 3, t), Rational(-1, 4));
    for (std::size_t n = 0; n <= 6; ++n) {
        EXPECT_EQ(apply_to_central_factorial(elem_series("exp", 6), n, t),
                  central_factorial_polynomial(n)(Rational(1)));
    }
    EXPECT_THROW(apply_to_central_factorial(Series(2), 5, t), std::invalid_argument);
}

TEST(Identities, SumRulesAndOrthogonality) {
    expect_pass(verify_SR1(25));
    expect_pass(verify_SR2(25));
    expect_pass(verify_orthogonality(30));
}

TEST(Identities, OperatorIdentityAndChains) {
    expect_pass(verify_jeffery_D(14));
    expect_pass(verify_jeffery_D(14, 12345));
}

TEST(Identities, SeriesIdentities) {
    expect_pass(verify_ident3(3, 16));
    expect_pass(verify_lonexp({-3, -2, -1, 0, 1, 2, 3}, 16));
    expect_pass(verify_genfuncs(8, 8));
    expect_pass(verify_newton_expansions(8));
    expect_pass(verify_nested_asinh(15));
    expect_pass(verify_mean(16));
    expect_pass(verify_invsh(10));
}

TEST(Identities, NestedAsinhKnownCoefficients) {
    // 2 asinh(asinh(x/2)) = x - x^3/12 + 7x^5/480 - x^7/315 + 4477x^9/5806080
    const std::size_t n = 9;
    const Series inner = ps_compose(elem_series("asinh", n), ps_dilate(Series::identity(n), Rational(1, 2)));
    const Series s = ps_scale(ps_compose(elem_series("asinh", n), inner), Rational(2));
    EXPECT_EQ(s[1], Rational(1));
    EXPECT_EQ(s[3], Rational(-1, 12));
    EXPECT_EQ(s[5], Rational(7, 480));
    EXPECT_EQ(s[7], Rational(-1, 315));
    EXPECT_EQ(s[9], Rational(4477, 5806080));
}

TEST(Identities, EulerAgreementReports) {
    expect_pass(verify_euler_agreement(60));
    expect_pass(verify_gen_euler_agreement(6, 30));
}

TEST(Identities, RandomPolynomialIsSeeded) {
    EXPECT_EQ(random_rational_polynomial(5, 8, 42), random_rational_polynomial(5, 8, 42));
    EXPECT_NE(random_rational_polynomial(5, 8, 42), random_rational_polynomial(5, 8, 43));
    const Series p = random_rational_polynomial(5, 8, 1);
    EXPECT_EQ(p.order(), 8u);
    for (std::size_t k = 6; k <= 8; ++k) EXPECT_TRUE(p[k].is_zero());
}

TEST(Suites, RegistryIsCompleteAndRunnable) {
    const std::set<std::string> want{"SR",     "SR1",    "SR2",     "orthogonality", "gcoeff-t", "stern",
                                     "jeffery-D", "ident3", "lonexp", "genfuncs", "newton", "nested-asinh",
                                     "mean",   "invsh",  "euler",   "gen-euler"};
    std::set<std::string> got;
    for (const auto& s : identity_suites()) {
        got.insert(s.id);
        const auto r = s.run(6);
        EXPECT_EQ(r.identity_id(), s.id);
        expect_pass(r);
    }
    EXPECT_EQ(got, want);
    EXPECT_EQ(find_suite("SR").id, "SR");
    EXPECT_THROW(find_suite("nope"), std::invalid_argument);
}

TEST(Suites, SmallestSizesStillRun) {
    for (const auto& s : identity_suites()) {
        for (std::size_t m : {0u, 1u, 2u}) expect_pass(s.run(m));
    }
}
