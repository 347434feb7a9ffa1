#include "generators.hpp"
#include "reference.hpp"

#include <cohom/linalg.hpp>
#include <cohom/reduced.hpp>

#include <gtest/gtest.h>

using namespace cohom;
using cohom::testing::Gen;
namespace ref = cohom::testing::ref;

namespace {

RationalMatrix random_matrix(Gen& g, std::size_t rows, std::size_t cols, double zero_chance = 0.4)
{
    RationalMatrix m(rows, cols);
    std::bernoulli_distribution zero(zero_chance);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (!zero(g.engine()))
                m(i, j) = g.rational(7, 5);
    return m;
}

/// rows x cols of rank at most r, as a product of random factors.
RationalMatrix low_rank(Gen& g, std::size_t rows, std::size_t cols, std::size_t r)
{
    const RationalMatrix a = random_matrix(g, rows, r, 0.2), b = random_matrix(g, r, cols, 0.2);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t l = 0; l < r; ++l)
                m(i, j) += a(i, l) * b(l, j);
    return m;
}

std::vector<std::vector<Rational>> rows_of(const RationalMatrix& m)
{
    std::vector<std::vector<Rational>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        out.emplace_back(m.row(i).begin(), m.row(i).end());
    return out;
}

} // namespace

TEST(Rank, Examples)
{
    EXPECT_EQ(rank(RationalMatrix(3, 4)), 0u);
    EXPECT_EQ(rank(RationalMatrix::identity(4)), 4u);
    const LinearSystem sys = build_system(2, 1, std::vector<Rational>{0, 0});
    EXPECT_EQ(rank(sys.matrix), 0u);
    EXPECT_EQ(rank(RationalMatrix()), 0u);
    EXPECT_EQ(rank(RationalMatrix::from_rows({{1, 2}, {2, 4}, {Rational(1, 2), 1}})), 1u);
}

TEST(Rank, MatchesTextbookElimination)
{
    Gen g(31);
    for (int i = 0; i < 200; ++i) {
        const std::size_t rows = g.natural(7), cols = g.natural(7);
        const RationalMatrix m = g.coin() ? random_matrix(g, rows, cols)
                                          : low_rank(g, rows, cols, g.natural(3));
        EXPECT_EQ(rank(m), ref::rank(rows_of(m)));
    }
}

TEST(Rank, TransposeInvariant)
{
    Gen g(32);
    for (int i = 0; i < 200; ++i) {
        const RationalMatrix m = low_rank(g, g.natural(6) + 1, g.natural(6) + 1, g.natural(4));
        EXPECT_EQ(rank(m), rank(m.transpose()));
    }
}

TEST(Rank, InvariantUnderRowScalingAndSwaps)
{
    Gen g(33);
    for (int i = 0; i < 200; ++i) {
        RationalMatrix m = low_rank(g, g.natural(6) + 2, g.natural(6) + 1, g.natural(4));
        const std::size_t before = rank(m);
        const std::size_t a = g.natural(static_cast<unsigned>(m.rows() - 1));
        const std::size_t b = g.natural(static_cast<unsigned>(m.rows() - 1));
        const Rational s = g.nonzero_rational();
        for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(a, j), m(b, j));
            m(a, j) *= s;
        }
        EXPECT_EQ(rank(m), before);
    }
}

TEST(Kernel, Examples)
{
    EXPECT_TRUE(kernel_basis(RationalMatrix::identity(3)).empty());
    EXPECT_EQ(kernel_basis(RationalMatrix(1, 2)).size(), 2u);
    const LinearSystem sys = build_system(2, 2, std::vector<Rational>{Rational(-1, 2), 0});
    const auto kernel = kernel_basis(sys.matrix);
    EXPECT_EQ(kernel.size(), sys.matrix.cols() - rank(sys.matrix));
    const std::size_t ell = sys.matrix.rows() - rank(sys.matrix);
    EXPECT_EQ(kernel.size(), multiset_coeff(1, 2) + ell);
}

TEST(Kernel, VectorsAreIndependentNullVectors)
{
    Gen g(34);
    for (int i = 0; i < 150; ++i) {
        const RationalMatrix m = low_rank(g, g.natural(6) + 1, g.natural(7) + 1, g.natural(4));
        const auto kernel = kernel_basis(m);
        EXPECT_EQ(kernel.size() + rank(m), m.cols());
        for (const auto& v : kernel)
            for (const auto& entry : m.multiply(v))
                EXPECT_TRUE(entry.is_zero());
        if (!kernel.empty())
            EXPECT_EQ(rank(RationalMatrix::from_rows(kernel)), kernel.size());
    }
}

TEST(Solve, FindsSolutionsAndDetectsInconsistency)
{
    Gen g(35);
    for (int i = 0; i < 150; ++i) {
        const RationalMatrix m = low_rank(g, g.natural(6) + 1, g.natural(6) + 1, g.natural(4));
        std::vector<Rational> x(m.cols());
        for (auto& e : x)
            e = g.rational();
        const auto rhs = m.multiply(x);
        const auto sol = solve(m, rhs);
        ASSERT_TRUE(sol);
        EXPECT_EQ(m.multiply(*sol), rhs);
    }
    const RationalMatrix singular = RationalMatrix::from_rows({{1, 1}, {2, 2}});
    EXPECT_FALSE(solve(singular, std::vector<Rational>{1, 3}));
    EXPECT_TRUE(solve(singular, std::vector<Rational>{1, 2}));
    EXPECT_THROW((void)solve(singular, std::vector<Rational>{1}), std::invalid_argument);
    EXPECT_FALSE(solve(RationalMatrix(1, 0), std::vector<Rational>{1}));
}

TEST(Matrix, ShapeChecks)
{
    EXPECT_THROW((void)RationalMatrix::from_rows({{1, 2}, {3}}), std::invalid_argument);
    EXPECT_THROW((void)RationalMatrix::identity(2).multiply(std::vector<Rational>{1}), std::invalid_argument);
    const RationalMatrix m = RationalMatrix::from_rows({{1, 0, 2}});
    EXPECT_EQ(m.nonzeros(), 2u);
    EXPECT_EQ(m.transpose().rows(), 3u);
}
