#include "generators.hpp"

#include <cohom/closed_form.hpp>
#include <cohom/io.hpp>

#include <gtest/gtest.h>

using namespace cohom;
using cohom::testing::Gen;

TEST(Json, Rationals)
{
    EXPECT_EQ(to_json(Rational(-3, 4)), Json("-3/4"));
    EXPECT_EQ(to_json(Rational(5)), Json("5"));
    EXPECT_EQ(rational_from_json(Json("6/8")), Rational(3, 4));
    EXPECT_EQ(rational_from_json(Json(-2)), Rational(-2));
    EXPECT_THROW((void)rational_from_json(Json(0.5)), std::invalid_argument);
    EXPECT_THROW((void)rational_from_json(Json("1/0")), std::invalid_argument);
}

TEST(Json, PolynomialsAndWeights)
{
    const Polynomial p({Rational(1), Rational(0), Rational(-1, 2)});
    EXPECT_EQ(to_json(p), Json::parse(R"(["1","0","-1/2"])"));
    EXPECT_EQ(polynomial_from_json(to_json(p)), p);
    EXPECT_THROW((void)polynomial_from_json(Json("x")), std::invalid_argument);

    const Weights w{{Rational(1, 2), Rational(-1)}, Rational(3)};
    const Json j = to_json(w);
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(weights_from_json(j), w);
    Json bad = j;
    bad["n"] = 3;
    EXPECT_THROW((void)weights_from_json(bad), std::invalid_argument);
}

TEST(Json, OperatorsAndCochainsRoundTrip)
{
    Gen g(61);
    for (int trial = 0; trial < 25; ++trial) {
        const Weights w = g.weights(g.natural(2) + 1);
        const DiffOperator op = g.diff_operator(w, 3, 3, 4);
        EXPECT_EQ(diff_operator_from_json(Json::parse(to_json(op).dump())), op);
        const ReducedTwoCochain f = g.two_cochain(w, 3, 2, 3);
        EXPECT_EQ(reduced_two_cochain_from_json(Json::parse(to_json(f).dump())), f);
    }
}

TEST(Json, CochainFamiliesMustShareWeights)
{
    const ReducedTwoCochain f{Weights{{Rational(1)}, Rational(0)}, {}, {}, {}};
    Json j = to_json(f);
    j["B"]["mu"] = "7";
    EXPECT_THROW((void)reduced_two_cochain_from_json(j), std::invalid_argument);
}

TEST(Json, Results)
{
    const Weights w{{Rational(0), Rational(0)}, Rational(1)};
    const Json j = to_json(closed_form_result(w));
    EXPECT_EQ(j.at("dim"), 4);
    EXPECT_EQ(j.at("method"), "closed");
    EXPECT_EQ(j.at("case").at("case"), "singular");
    EXPECT_EQ(j.at("case").at("t"), Json::parse("[0,0]"));
    EXPECT_TRUE(j.at("stable").get<bool>());

    CohomResult fractional;
    fractional.dim = Rational(3, 2);
    EXPECT_EQ(to_json(fractional).at("dim"), "3/2");

    const Json unsupported = to_json(summary_result(Weights{{Rational(1)}, Rational(3)}));
    EXPECT_TRUE(unsupported.at("dim").is_null());
    EXPECT_EQ(unsupported.at("note"), "unsupported");
}
