#include "cdiff/euler_numbers.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace cdiff;

namespace {

// Signed E_0, E_2, ..., E_40, frozen from an external computer algebra system.
const std::vector<std::string> kFrozen{
    "1", "-1", "5", "-61", "1385", "-50521", "2702765", "-199360981", "19391512145", "-2404879675441",
    "370371188237525", "-69348874393137901", "15514534163557086905", "-4087072509293123892361",
    "1252259641403629865468285", "-441543893249023104553682821", "177519391579539289436664789665",
    "-80723299235887898062168247453281", "41222060339517702122347079671259045",
    "-23489580527043108252017828576198947741", "14851150718114980017877156781405826684425",
};

// Zigzag numbers by the Seidel-Entringer boustrophedon; the even-indexed ones
// are the unsigned secant numbers.
std::vector<Integer> zigzag(std::size_t n_max) {
    std::vector<Integer> out{1};
    std::vector<Integer> row{1};
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<Integer> next(n + 1);
        next[0] = 0;
        for (std::size_t k = 1; k <= n; ++k) next[k] = next[k - 1] + row[n - k];
        row = std::move(next);
        out.push_back(row.back());
    }
    return out;
}

}  // namespace

TEST(EulerNumbers, EveryMethodMatchesFrozenValues) {
    for (auto m : all_euler_methods) {
        const auto seq = euler_sequence(m, 40);
        ASSERT_EQ(seq.size(), kFrozen.size());
        for (std::size_t i = 0; i < seq.size(); ++i) {
            EXPECT_EQ(seq[i].signed_value, Integer(kFrozen[i])) << method_name(m) << " 2n=" << seq[i].index;
            EXPECT_EQ(seq[i].index, 2 * i);
            EXPECT_EQ(seq[i].method, m);
        }
    }
}

TEST(EulerNumbers, SignConventionAndSingleValues) {
    const auto v = euler_shov(2);
    EXPECT_EQ(v.signed_value, -1);
    EXPECT_EQ(v.unsigned_value, 1);
    EXPECT_EQ(euler_shov2(4).signed_value, 5);
    EXPECT_EQ(euler_herschel(6).unsigned_value, 61);
    EXPECT_EQ(euler_kb(8).signed_value, 1385);
    EXPECT_EQ(euler_oracle(10).signed_value, -50521);
    EXPECT_EQ(euler_value(EulerMethod::kb, 0).signed_value, 1);
}

TEST(EulerNumbers, OddIndexRejected) {
    EXPECT_THROW(euler_kb(3), std::invalid_argument);
    EXPECT_THROW(euler_shov(5), std::invalid_argument);
    EXPECT_THROW(euler_shov2(1), std::invalid_argument);
    EXPECT_THROW(euler_herschel(7), std::invalid_argument);
    EXPECT_THROW(euler_oracle(9), std::invalid_argument);
}

TEST(EulerNumbers, MethodNamesRoundTrip) {
    for (auto m : all_euler_methods) EXPECT_EQ(parse_euler_method(method_name(m)), m);
    EXPECT_THROW(parse_euler_method("bogus"), std::invalid_argument);
}

TEST(EulerNumbers, HerschelOperatorCoefficients) {
    // (1 + D)/(1 + D + D^2/2) = 1 - D^2/2 + D^3/2 - D^4/4 + 0 D^5 + D^6/8
    const Series op = herschel_operator(6);
    const std::vector<Rational> want{1, 0, Rational(-1, 2), Rational(1, 2), Rational(-1, 4), 0, Rational(1, 8)};
    for (std::size_t k = 0; k <= 6; ++k) EXPECT_EQ(op[k], want[k]) << k;
}

TEST(EulerNumbers, PropertyKbAgainstBoustrophedonTo300) {
    const auto z = zigzag(300);
    const auto kb = euler_kb_sequence(300);
    for (const auto& v : kb) {
        EXPECT_EQ(v.unsigned_value, z[v.index]) << v.index;
        EXPECT_TRUE(mpz_odd_p(v.signed_value.get_mpz_t())) << v.index;
        EXPECT_EQ(sgn(v.signed_value), (v.index / 2) % 2 == 0 ? 1 : -1);
    }
}

TEST(EulerNumbers, PropertySequencesAreDeterministic) {
    for (auto m : all_euler_methods) {
        const auto a = euler_sequence(m, 30);
        const auto b = euler_sequence(m, 30);
        for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].signed_value, b[i].signed_value);
    }
    EXPECT_EQ(euler_sequence(EulerMethod::shov, 7).size(), 4u);
    const auto signed_list = signed_euler_numbers(10);
    EXPECT_EQ(signed_list, (std::vector<Integer>{1, -1, 5, -61, 1385, -50521}));
}
