#include "cdiff/table_io.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace cdiff;

namespace {

ExactTable sample_triangle() {
    return {"cfn-first", {{"max", "2"}}, true, {{0, 0, Rational(1)}, {1, 0, Rational(0)}, {1, 1, Rational(-1, 4)}}};
}

}  // namespace

TEST(TableIo, CsvExactBytes) {
    EXPECT_EQ(to_csv(sample_triangle()), "n,k,value\n0,0,1\n1,0,0\n1,1,-1/4\n");
    const ExactTable seq{"euler", {}, false, {{0, std::nullopt, Rational(1)}, {2, std::nullopt, Rational(-1)}}};
    EXPECT_EQ(to_csv(seq), "n,value\n0,1\n2,-1\n");
}

TEST(TableIo, CsvRoundTripAndCrlf) {
    const auto t = sample_triangle();
    EXPECT_EQ(from_csv(to_csv(t)).rows, t.rows);
    EXPECT_TRUE(from_csv(to_csv(t)).triangular);
    const auto crlf = from_csv("n,value\r\n4,5\r\n");
    ASSERT_EQ(crlf.rows.size(), 1u);
    EXPECT_EQ(crlf.rows[0].value, Rational(5));
    EXPECT_FALSE(crlf.rows[0].k.has_value());
}

TEST(TableIo, CsvRejectsMalformedInput) {
    EXPECT_THROW(from_csv(""), std::invalid_argument);
    EXPECT_THROW(from_csv("a,b\n"), std::invalid_argument);
    EXPECT_THROW(from_csv("n,value\n1,2,3\n"), std::invalid_argument);
    EXPECT_THROW(from_csv("n,value\n-1,2\n"), std::invalid_argument);
    EXPECT_THROW(from_csv("n,k,value\n1,,2\n"), std::invalid_argument);
    EXPECT_THROW(from_csv("n,value\n1,x\n"), std::invalid_argument);
}

TEST(TableIo, JsonShapeAndRoundTrip) {
    const auto j = to_json(sample_triangle());
    EXPECT_EQ(j.at("family"), "cfn-first");
    EXPECT_EQ(j.at("params").at("max"), "2");
    EXPECT_EQ(j.at("rows")[2].at("value"), "-1/4");
    EXPECT_EQ(j.at("rows")[2].at("k"), 1);
    const auto back = from_json(j);
    EXPECT_EQ(back.rows, sample_triangle().rows);
    EXPECT_EQ(back.family, "cfn-first");
    EXPECT_TRUE(back.triangular);
    EXPECT_THROW(from_json(nlohmann::json::object()), nlohmann::json::exception);
}

TEST(TableIo, PropertyRandomTablesRoundTrip) {
    std::mt19937_64 rng(8675309);
    std::uniform_int_distribution<long> v(-1000000, 1000000);
    for (int trial = 0; trial < 30; ++trial) {
        ExactTable t{"x", {{"seed", std::to_string(trial)}}, trial % 2 == 0, {}};
        for (std::size_t n = 0; n < 12; ++n) {
            long d = v(rng);
            if (d == 0) d = 3;
            const Rational value(Integer(v(rng)) * Integer(v(rng)), Integer(d));
            t.rows.push_back({n, t.triangular ? std::optional<std::size_t>(n / 2) : std::nullopt, value});
        }
        EXPECT_EQ(from_csv(to_csv(t)).rows, t.rows);
        const auto j = from_json(nlohmann::json::parse(to_json(t).dump()));
        EXPECT_EQ(j.rows, t.rows);
        EXPECT_EQ(j.params, t.params);
    }
}
