#include "generators.hpp"
#include "reference.hpp"

#include <cohom/multi_index.hpp>
#include <cohom/polynomial.hpp>
#include <cohom/rational.hpp>

#include <gtest/gtest.h>

#include <set>

using namespace cohom;
using cohom::testing::Gen;
namespace ref = cohom::testing::ref;

TEST(Rational, ParsesAndCanonicalizes)
{
    EXPECT_EQ(Rational::parse("2/4").str(), "1/2");
    EXPECT_EQ(Rational::parse("-6/3").str(), "-2");
    EXPECT_EQ(Rational::parse("0/7").str(), "0");
    EXPECT_EQ(Rational::parse("5").str(), "5");
    EXPECT_EQ(Rational(3, -9).str(), "-1/3");
    EXPECT_EQ(Rational(3, -9).denominator(), 3);
}

TEST(Rational, RejectsMalformedText)
{
    for (const char* bad : {"", "1/", "/2", "1.5", " 1", "1 /2", "a", "1/0", "--1", "+"})
        EXPECT_THROW((void)Rational::parse(bad), std::invalid_argument) << bad;
}

TEST(Rational, ExactArithmetic)
{
    EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
    EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
    EXPECT_EQ(Rational(1) / Rational(3), Rational(1, 3));
    EXPECT_THROW((void)(Rational(1) / Rational(0)), std::domain_error);
    EXPECT_LT(Rational(-1, 2), Rational(1, 3));
}

TEST(Rational, NaturalAndIntegerPredicates)
{
    EXPECT_EQ(Rational(4).to_natural(), 4u);
    EXPECT_FALSE(Rational(-1).to_natural());
    EXPECT_FALSE(Rational(3, 2).to_natural());
    EXPECT_EQ(Rational(-7).to_long(), -7);
    EXPECT_TRUE(Rational(6, 3).is_integer());
}

TEST(Rational, CanonicalFormProperty)
{
    Gen g(11);
    for (int i = 0; i < 300; ++i) {
        const Rational a = g.rational(40, 30), b = g.rational(40, 30);
        for (const Rational& r : {a + b, a - b, a * b}) {
            EXPECT_GT(r.denominator(), 0);
            mpz_class gcd;
            mpz_gcd(gcd.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
            EXPECT_TRUE(r.is_zero() ? r.denominator() == 1 : gcd == 1);
            EXPECT_EQ(Rational::parse(r.str()), r);
        }
    }
}

TEST(Polynomial, DerivativeExamples)
{
    EXPECT_EQ(poly_derivative(Polynomial::monomial(2)), Polynomial::monomial(1, 2));
    EXPECT_TRUE(poly_derivative(Polynomial()).is_zero());
    const Polynomial p = Polynomial(std::vector<Rational>{3, 0, 0, 5});
    const Polynomial dp = poly_derivative(p);
    EXPECT_EQ(dp, Polynomial::monomial(2, 15));
    for (long a : {-2, 0, 3}) {
        const Rational exact =
            ref::derivative_from_samples([&](const Rational& x) { return p.evaluate(x); }, 3, Rational(a));
        EXPECT_EQ(dp.evaluate(Rational(a)), exact);
    }
}

TEST(Polynomial, DerivativeAgreesWithInterpolation)
{
    Gen g(12);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = g.polynomial(6);
        const Rational a = g.rational();
        const Rational exact = ref::derivative_from_samples([&](const Rational& x) { return p.evaluate(x); }, 6, a);
        EXPECT_EQ(p.derivative().evaluate(a), exact);
    }
}

TEST(Polynomial, StripsTrailingZerosAndTracksDegree)
{
    EXPECT_EQ(Polynomial(std::vector<Rational>{1, 2, 0, 0}).degree(), 1);
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_TRUE(Polynomial(Rational(0)).is_zero());
    EXPECT_TRUE(Polynomial::monomial(3, 0).is_zero());
    EXPECT_TRUE(Polynomial(Rational(7)).derivative().is_zero());
}

TEST(Polynomial, RingAndLeibnizProperties)
{
    Gen g(13);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = g.polynomial(5), q = g.polynomial(5);
        EXPECT_EQ((p + q).derivative(), p.derivative() + q.derivative());
        EXPECT_EQ((p * q).derivative(), p.derivative() * q + p * q.derivative());
        if (!p.is_zero() && !q.is_zero())
            EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
        const Rational x = g.rational();
        EXPECT_EQ((p * q).evaluate(x), p.evaluate(x) * q.evaluate(x));
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST(MultiIndex, GradedLexOrder)
{
    EXPECT_LT((MultiIndex{0, 1}), (MultiIndex{1, 0}));
    EXPECT_LT((MultiIndex{2, 0}), (MultiIndex{0, 3}));
    EXPECT_LT((MultiIndex{5, 0}), (MultiIndex{0, 6}));
    EXPECT_EQ((MultiIndex{1, 2}).total(), 3u);
    EXPECT_EQ((MultiIndex{1, 2}).incremented(0), (MultiIndex{2, 2}));
    EXPECT_THROW((void)(MultiIndex{0, 2}).decremented(0), std::logic_error);
}

TEST(MultiIndex, TextRoundTrip)
{
    EXPECT_EQ((MultiIndex{1, 0, 3}).str(), "[1,0,3]");
    EXPECT_EQ(MultiIndex::parse("[1,0,3]"), (MultiIndex{1, 0, 3}));
    for (const char* bad : {"1,2", "[1,,2]", "[a]", "[1,2"})
        EXPECT_THROW((void)MultiIndex::parse(bad), std::invalid_argument) << bad;
}

TEST(MultisetCoeff, Examples)
{
    EXPECT_EQ(multiset_coeff(1, 5), 1u);
    EXPECT_EQ(multiset_coeff(2, 3), 4u);
    EXPECT_EQ(multiset_coeff(3, 2), 6u);
    for (unsigned k = 0; k < 8; ++k)
        EXPECT_EQ(multiset_coeff(1, k), binomial(k, k));
    EXPECT_EQ(multiset_coeff(4, 0), 1u);
    EXPECT_EQ(multiset_coeff(0, 0), 1u);
    EXPECT_EQ(multiset_coeff(3, -1), 0u);
    EXPECT_EQ(multiset_coeff(0, 2), 0u);
}

TEST(MultisetCoeff, MatchesExhaustiveCount)
{
    for (unsigned m = 0; m <= 4; ++m)
        for (unsigned k = 0; k <= 6; ++k)
            EXPECT_EQ(multiset_coeff(m, k), ref::count_compositions(m, k)) << m << "," << k;
}

TEST(MultisetCoeff, PascalAndDifferenceIdentities)
{
    for (long m = 1; m <= 8; ++m)
        for (long k = 1; k <= 8; ++k) {
            EXPECT_EQ(multiset_coeff(m, k), multiset_coeff(m - 1, k) + multiset_coeff(m, k - 1));
            EXPECT_EQ(multiset_coeff(m, k) - multiset_coeff(m, k - 1), multiset_coeff(m - 1, k));
        }
}

TEST(Binomial, OverflowIsReported)
{
    EXPECT_EQ(binomial(5, 2), 10u);
    EXPECT_EQ(binomial(2, 5), 0u);
    EXPECT_EQ(binomial(-1, 0), 0u);
    EXPECT_EQ(binomial(66, 33), 7219428434016265740ull);
    EXPECT_THROW((void)binomial(200, 100), std::overflow_error);
}

TEST(Enumerate, Examples)
{
    const auto two = enumerate_multiindices(2, 1);
    ASSERT_EQ(two.size(), 2u);
    EXPECT_EQ(two[0], (MultiIndex{0, 1}));
    EXPECT_EQ(two[1], (MultiIndex{1, 0}));
    const auto zero = enumerate_multiindices(3, 0);
    ASSERT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero[0], MultiIndex::zero(3));
    EXPECT_EQ(enumerate_multiindices(3, 2).size(), 6u);
}

TEST(Enumerate, CountSortedAndDistinct)
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (unsigned w = 0; w <= 6; ++w) {
            const auto list = enumerate_multiindices(n, w);
            EXPECT_EQ(list.size(), multiset_coeff(static_cast<long>(n), w));
            EXPECT_TRUE(std::is_sorted(list.begin(), list.end()));
            EXPECT_EQ(std::set<MultiIndex>(list.begin(), list.end()).size(), list.size());
            for (const auto& a : list) {
                EXPECT_EQ(a.total(), w);
                EXPECT_EQ(a.size(), n);
            }
        }
    const auto upto = enumerate_multiindices_upto(3, 4);
    EXPECT_TRUE(std::is_sorted(upto.begin(), upto.end()));
    EXPECT_EQ(upto.size(), multiset_coeff(4, 4));
}
