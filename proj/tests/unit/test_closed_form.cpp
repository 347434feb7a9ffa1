#include <cohom/case_tag.hpp>
#include <cohom/closed_form.hpp>
#include <cohom/reduced.hpp>

#include <gtest/gtest.h>

using namespace cohom;

namespace {

Weights singular_weights(const std::vector<unsigned>& t, unsigned k)
{
    Weights w;
    long sigma = 0;
    for (unsigned ti : t) {
        w.lambdas.push_back(Rational(-static_cast<long>(ti), 2));
        sigma += ti;
    }
    w.mu = Rational(k) - Rational(sigma, 2);
    return w;
}

/// Every t in {0..k-1}^n.
std::vector<MultiIndex> resonant_ts(unsigned n, unsigned k)
{
    std::vector<MultiIndex> out;
    for (const auto& t : enumerate_multiindices_upto(n, n * (k - 1)))
        if (std::all_of(t.entries().begin(), t.entries().end(), [k](unsigned ti) { return ti < k; }))
            out.push_back(t);
    return out;
}

} // namespace

TEST(Classify, Cases)
{
    EXPECT_TRUE(std::holds_alternative<NonIntegerDelta>(classify(Weights{{Rational(1, 3)}, Rational(0)})));
    EXPECT_TRUE(std::holds_alternative<NonIntegerDelta>(classify(Weights{{Rational(1)}, Rational(0)})));
    const CaseTag nr = classify(Weights{{Rational(1), Rational(1)}, Rational(5)});
    ASSERT_TRUE(std::holds_alternative<NonResonant>(nr));
    EXPECT_EQ(std::get<NonResonant>(nr).k, 3u);
    // t_2 = 3 >= k.
    EXPECT_TRUE(std::holds_alternative<NonResonant>(classify(singular_weights({0, 3}, 3))));

    const CaseTag s = classify(singular_weights({2, 1, 0}, 3));
    ASSERT_TRUE(std::holds_alternative<Singular>(s));
    const Singular& sg = std::get<Singular>(s);
    EXPECT_EQ(sg.k, 3u);
    EXPECT_EQ(sg.sigma, 3u);
    EXPECT_EQ(sg.m, 0);
    EXPECT_EQ(sg.s, 2u);
    EXPECT_EQ(sg.t, (MultiIndex{2, 1, 0}));

    EXPECT_EQ(case_name(s), "singular");
    EXPECT_EQ(case_name(nr), "nonresonant");
    EXPECT_EQ(case_name(NonIntegerDelta{}), "delta-not-natural");
    EXPECT_EQ(tag_k(s), 3u);
    EXPECT_FALSE(tag_k(NonIntegerDelta{}));
}

TEST(Classify, CountsFollowTheSelectedTheorem)
{
    const Singular plus_one = make_singular(3, MultiIndex{2, 1, 1});
    EXPECT_EQ(plus_one.s, 3u);
    EXPECT_EQ(plus_one.r, 2u);
    const Singular plus_two = make_singular(2, MultiIndex{1, 1, 1, 1});
    EXPECT_EQ(plus_two.m, 2);
    EXPECT_EQ(plus_two.s, 0u);
    const Singular plus_two_again = make_singular(4, MultiIndex{3, 3, 0});
    EXPECT_EQ(plus_two_again.s, 2u);
    EXPECT_EQ(make_singular(4, MultiIndex{3, 3, 1}).s, 0u);
    const Singular below = make_singular(4, MultiIndex{1, 0});
    EXPECT_EQ(below.s, 0u);
    EXPECT_EQ(below.r, 0u);
}

TEST(ClosedForm, BaseDimension)
{
    EXPECT_EQ(base_dimension(1, 0), Rational(1));
    EXPECT_EQ(base_dimension(1, 3), Rational(0));
    EXPECT_EQ(base_dimension(2, 5), Rational(1));
    EXPECT_EQ(base_dimension(3, 2), Rational(3));
    EXPECT_EQ(base_dimension(4, 2), Rational(6));
}

TEST(ClosedForm, BranchExamples)
{
    EXPECT_EQ(dim_h2_closed_form(NonIntegerDelta{}, 3), Rational(0));
    EXPECT_EQ(dim_h2_closed_form(NonResonant{2}, 3), Rational(3));
    // sigma < k - 1
    EXPECT_EQ(dim_h2_closed_form(make_singular(4, MultiIndex{1, 0, 1}), 3), Rational(5));
    // sigma = k - 1
    EXPECT_EQ(dim_h2_closed_form(make_singular(3, MultiIndex{1, 1, 0}), 3), Rational(7));
    // sigma = k, s = 3
    EXPECT_EQ(dim_h2_closed_form(make_singular(3, MultiIndex{1, 1, 1}), 3), Rational(10));
    // sigma = k + 1, max t >= 2: s = 3, r = 2
    EXPECT_EQ(dim_h2_closed_form(make_singular(3, MultiIndex{2, 1, 1}), 3), Rational(7));
    // sigma = k + 1, max t = 1
    EXPECT_EQ(dim_h2_closed_form(make_singular(2, MultiIndex{1, 1, 1}), 3), Rational(3));
    // sigma = k + 2: s = #{t > 2} = 2
    EXPECT_EQ(dim_h2_closed_form(make_singular(4, MultiIndex{3, 3, 0}), 3), Rational(8));
}

TEST(ClosedForm, UnsupportedInputs)
{
    EXPECT_FALSE(dim_h2_closed_form(make_singular(2, MultiIndex{1, 1}), 3));
    // sigma = k + 1 with every t_i = 0 cannot happen for k >= 0; the branch reports none.
    Singular odd = make_singular(0, MultiIndex{0, 0});
    odd.sigma = 1;
    EXPECT_FALSE(dim_h2_closed_form(odd, 2));
    const CohomResult r = closed_form_result(Weights{{Rational(1, 3)}, Rational(0)});
    EXPECT_EQ(r.dim, Rational(0));
    EXPECT_EQ(r.method, Method::Closed);
}

// For two densities the closed form collapses to 4 when sigma >= k - 1 and
// to 1 otherwise.
TEST(ClosedForm, TwoDensitiesCollapse)
{
    for (unsigned k = 1; k <= 6; ++k)
        for (const auto& t : resonant_ts(2, k)) {
            const Singular tag = make_singular(k, t);
            const Rational expected = tag.sigma + 1 >= k ? Rational(4) : Rational(1);
            EXPECT_EQ(dim_h2_closed_form(tag, 2), expected) << "k=" << k << " t=" << t;
        }
}

TEST(ClosedForm, FirstTheoremMatchesTheBinomial)
{
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned k = n == 1 ? 1 : 0; k <= 6; ++k)
            EXPECT_EQ(dim_h2_closed_form(NonResonant{k}, n), Rational(static_cast<long>(binomial(n + k - 2, k))))
                << n << "," << k;
}

TEST(ClosedForm, AgreesWithTheSystemForAtMostTwoDensities)
{
    for (unsigned n = 1; n <= 2; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (const auto& t : resonant_ts(n, k)) {
                const Weights w = singular_weights(t.entries(), k);
                const auto closed = closed_form_result(w);
                if (!closed.dim)
                    continue;
                EXPECT_EQ(*closed.dim, *dim_h2_via_system(w).dim) << w.str();
            }
}

TEST(ClosedForm, NeverBelowTheBase)
{
    for (unsigned n = 1; n <= 4; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (const auto& t : resonant_ts(n, k))
                if (const auto d = dim_h2_closed_form(make_singular(k, t), n))
                    EXPECT_GE(*d, base_dimension(n, k));
}

TEST(Summary, ExamplesAndScope)
{
    EXPECT_FALSE(dim_h2_summary(NonResonant{2}, 2));
    EXPECT_FALSE(dim_h2_summary(NonIntegerDelta{}, 1));
    // Twice the two-density value: 2 (1 + 3).
    EXPECT_EQ(dim_h2_summary(make_singular(3, MultiIndex{1, 1}), 2), Rational(8));
    EXPECT_EQ(dim_h2_summary(make_singular(4, MultiIndex{1, 0}), 2), Rational(2));
    // sigma = k: 2 (base + 3/2 (s - 1)), s = #{t > 0} = 3.
    EXPECT_EQ(dim_h2_summary(make_singular(3, MultiIndex{1, 1, 1}), 3), Rational(14));
    const CohomResult r = summary_result(Weights{{Rational(1)}, Rational(3)});
    EXPECT_FALSE(r.dim);
    EXPECT_EQ(r.note, "unsupported");
}

TEST(Summary, IsIntegral)
{
    for (unsigned n = 1; n <= 3; ++n)
        for (unsigned k = 1; k <= 4; ++k)
            for (const auto& t : resonant_ts(n, k)) {
                const Rational d = *dim_h2_summary(make_singular(k, t), n);
                EXPECT_TRUE(d.is_integer()) << t;
            }
}
