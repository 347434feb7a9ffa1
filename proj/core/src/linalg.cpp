#include "cohom/linalg.hpp"

#include <list>
#include <stdexcept>

namespace cohom {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = rows[i][j];
    }
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rational> RationalMatrix::multiply(std::span<const Rational> v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("RationalMatrix::multiply: size mismatch");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Rational& a = (*this)(i, j);
            if (!a.is_zero() && !v[j].is_zero())
                out[i] += a * v[j];
        }
    return out;
}

std::size_t RationalMatrix::nonzeros() const
{
    std::size_t count = 0;
    for (const auto& x : data_)
        count += !x.is_zero();
    return count;
}

namespace {

using IntRow = std::vector<mpz_class>;

/// Divides the row by the gcd of its entries; returns false for a zero row.
bool make_primitive(IntRow& row, std::size_t from)
{
    mpz_class g = 0;
    for (std::size_t j = from; j < row.size(); ++j)
        if (row[j] != 0) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
            if (g == 1)
                return true;
        }
    if (g == 0)
        return false;
    for (std::size_t j = from; j < row.size(); ++j)
        if (row[j] != 0)
            mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    return true;
}

IntRow to_integer_row(std::span<const Rational> row)
{
    mpz_class lcm = 1;
    for (const auto& x : row)
        if (!x.is_zero())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.value().get_den_mpz_t());
    IntRow out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j)
        if (!row[j].is_zero())
            out[j] = row[j].value().get_num() * (lcm / row[j].value().get_den());
    return out;
}

struct Echelon {
    std::vector<IntRow> rows; // pivot rows, in pivot order
    std::vector<std::size_t> pivot_cols;
};

Echelon integer_echelon(std::vector<IntRow> input, std::size_t cols)
{
    std::list<IntRow> active;
    for (auto& r : input)
        if (make_primitive(r, 0))
            active.push_back(std::move(r));

    Echelon e;
    mpz_class g, a, b;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && !active.empty(); ++c) {
        auto pivot_it = active.begin();
        while (pivot_it != active.end() && (*pivot_it)[c] == 0)
            ++pivot_it;
        if (pivot_it == active.end())
            continue;
        IntRow pivot = std::move(*pivot_it);
        active.erase(pivot_it);

        support.clear();
        for (std::size_t j = c; j < cols; ++j)
            if (pivot[j] != 0)
                support.push_back(j);

        for (auto it = active.begin(); it != active.end();) {
            IntRow& row = *it;
            if (row[c] == 0) {
                ++it;
                continue;
            }
            // row <- (p/g) row - (r_c/g) pivot
            mpz_gcd(g.get_mpz_t(), pivot[c].get_mpz_t(), row[c].get_mpz_t());
            mpz_divexact(a.get_mpz_t(), pivot[c].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(b.get_mpz_t(), row[c].get_mpz_t(), g.get_mpz_t());
            if (a != 1)
                for (std::size_t j = c; j < cols; ++j)
                    if (row[j] != 0)
                        row[j] *= a;
            for (std::size_t j : support)
                mpz_submul(row[j].get_mpz_t(), b.get_mpz_t(), pivot[j].get_mpz_t());
            if (make_primitive(row, c))
                ++it;
            else
                it = active.erase(it);
        }
        e.rows.push_back(std::move(pivot));
        e.pivot_cols.push_back(c);
    }
    return e;
}

std::vector<IntRow> integer_rows(const RationalMatrix& m, std::span<const Rational> extra_column = {})
{
    std::vector<IntRow> rows;
    rows.reserve(m.rows());
    std::vector<Rational> buffer(m.cols() + (extra_column.empty() ? 0 : 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = m.row(i);
        std::copy(r.begin(), r.end(), buffer.begin());
        if (!extra_column.empty())
            buffer.back() = extra_column[i];
        rows.push_back(to_integer_row(buffer));
    }
    return rows;
}

/// Reduced row echelon form over Q from an integer echelon form: each pivot
/// row scaled to a leading 1 with zeros above and below every pivot.
std::vector<std::vector<Rational>> reduce(const Echelon& e, std::size_t cols)
{
    std::vector<std::vector<Rational>> rref(e.rows.size(), std::vector<Rational>(cols));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const mpz_class& lead = e.rows[i][e.pivot_cols[i]];
        for (std::size_t j = 0; j < cols; ++j)
            if (e.rows[i][j] != 0)
                rref[i][j] = Rational(mpq_class(e.rows[i][j], lead));
    }
    for (std::size_t i = e.rows.size(); i-- > 0;) {
        const std::size_t pc = e.pivot_cols[i];
        for (std::size_t above = 0; above < i; ++above) {
            const Rational factor = rref[above][pc];
            if (factor.is_zero())
                continue;
            for (std::size_t j = pc; j < cols; ++j)
                if (!rref[i][j].is_zero())
                    rref[above][j] -= factor * rref[i][j];
        }
    }
    return rref;
}

} // namespace

std::size_t rank(const RationalMatrix& m)
{
    if (m.empty())
        return 0;
    return integer_echelon(integer_rows(m), m.cols()).pivot_cols.size();
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m)
{
    const std::size_t cols = m.cols();
    std::vector<std::vector<Rational>> basis;
    if (cols == 0)
        return basis;
    const Echelon e = m.rows() == 0 ? Echelon{} : integer_echelon(integer_rows(m), cols);
    const auto rref = reduce(e, cols);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t pc : e.pivot_cols)
        is_pivot[pc] = true;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rational> v(cols);
        v[f] = Rational(1);
        for (std::size_t i = 0; i < rref.size(); ++i)
            if (!rref[i][f].is_zero())
                v[e.pivot_cols[i]] = -rref[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> rhs)
{
    if (rhs.size() != m.rows())
        throw std::invalid_argument("solve: right-hand side has wrong length");
    const std::size_t cols = m.cols();
    std::vector<Rational> x(cols);
    if (m.rows() == 0)
        return x;

    std::vector<Rational> column(rhs.begin(), rhs.end());
    std::vector<IntRow> rows;
    if (cols == 0) {
        for (const auto& r : column)
            if (!r.is_zero())
                return std::nullopt;
        return x;
    }
    const Echelon e = integer_echelon(integer_rows(m, column), cols + 1);
    if (!e.pivot_cols.empty() && e.pivot_cols.back() == cols)
        return std::nullopt;
    const auto rref = reduce(e, cols + 1);
    for (std::size_t i = 0; i < rref.size(); ++i)
        x[e.pivot_cols[i]] = rref[i][cols];
    return x;
}

} // namespace cohom
