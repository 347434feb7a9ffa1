#include "cohom/reduced.hpp"

#include "cohom/closed_form.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace cohom {

void accumulate(Family& family, const MultiIndex& alpha, const Polynomial& p)
{
    if (p.is_zero())
        return;
    auto [it, inserted] = family.try_emplace(alpha, p);
    if (!inserted) {
        it->second += p;
        if (it->second.is_zero())
            family.erase(it);
    }
}

namespace {

const Polynomial& x_poly()
{
    static const Polynomial x = Polynomial::monomial(1);
    return x;
}

const Polynomial& x2_poly()
{
    static const Polynomial x2 = Polynomial::monomial(2);
    return x2;
}

void add_family(DiffOperator& op, const Family& family, const Polynomial& factor)
{
    for (const auto& [alpha, p] : family)
        op.add_term(alpha, factor * p);
}

/// (alpha_i + 1)(alpha_i + 2 lambda_i)
Rational system_coefficient(const MultiIndex& alpha, std::size_t i, const Weights& w)
{
    const Rational ai(alpha[i]);
    return (ai + Rational(1)) * (ai + Rational(2) * w.lambdas[i]);
}

/// 1/2 sum_i (a_i+1)(a_i+2 lambda_i) X_{a+e_i}, accumulated into out.
void add_lowering(Family& out, const Family& source, const Weights& w, const Rational& scale)
{
    for (const auto& [beta, p] : source)
        for (std::size_t i = 0; i < beta.size(); ++i) {
            if (beta[i] == 0)
                continue;
            const MultiIndex alpha = beta.decremented(i);
            const Rational c = scale * system_coefficient(alpha, i, w);
            if (!c.is_zero())
                accumulate(out, alpha, c * p);
        }
}

Family family_of(const DiffOperator& op)
{
    return Family(op.terms().begin(), op.terms().end());
}

} // namespace

Cochain to_cochain(const ReducedTwoCochain& f)
{
    Cochain c(2, f.weights);
    const Polynomial two(Rational(2));
    add_family(c.component(0), f.A, Polynomial(Rational(1)));
    add_family(c.component(1), f.A, two * x_poly());
    add_family(c.component(1), f.B, two);
    add_family(c.component(2), f.A, x2_poly());
    add_family(c.component(2), f.B, two * x_poly());
    add_family(c.component(2), f.C, two);
    return c;
}

Cochain to_cochain(const ReducedOneCochain& b)
{
    Cochain c(1, b.weights);
    const Polynomial two(Rational(2));
    add_family(c.component(0), b.U, Polynomial(Rational(1)));
    add_family(c.component(1), b.U, x_poly());
    add_family(c.component(1), b.V, Polynomial(Rational(1)));
    add_family(c.component(2), b.U, x2_poly());
    add_family(c.component(2), b.V, two * x_poly());
    add_family(c.component(2), b.W, two);
    return c;
}

ReducedTwoCochain reduce_two_cochain(const Cochain& f)
{
    if (f.degree() != 2)
        throw std::invalid_argument("reduce_two_cochain: expected a 2-cochain");
    ReducedTwoCochain r{f.weights(), {}, {}, {}};
    const Rational half(1, 2);
    r.A = family_of(f.component(0));
    Family b = family_of(f.component(1));
    for (const auto& [alpha, a] : r.A)
        accumulate(b, alpha, Rational(-2) * (x_poly() * a));
    for (const auto& [alpha, p] : b)
        accumulate(r.B, alpha, half * p);
    Family c = family_of(f.component(2));
    for (const auto& [alpha, a] : r.A)
        accumulate(c, alpha, -(x2_poly() * a));
    for (const auto& [alpha, p] : r.B)
        accumulate(c, alpha, Rational(-2) * (x_poly() * p));
    for (const auto& [alpha, p] : c)
        accumulate(r.C, alpha, half * p);
    return r;
}

ReducedOneCochain reduce_one_cochain(const Cochain& b)
{
    if (b.degree() != 1)
        throw std::invalid_argument("reduce_one_cochain: expected a 1-cochain");
    ReducedOneCochain r{b.weights(), {}, {}, {}};
    const Rational half(1, 2);
    r.U = family_of(b.component(0));
    Family v = family_of(b.component(1));
    for (const auto& [alpha, u] : r.U)
        accumulate(v, alpha, -(x_poly() * u));
    r.V = v;
    Family w = family_of(b.component(2));
    for (const auto& [alpha, u] : r.U)
        accumulate(w, alpha, -(x2_poly() * u));
    for (const auto& [alpha, p] : r.V)
        accumulate(w, alpha, Rational(-2) * (x_poly() * p));
    for (const auto& [alpha, p] : w)
        accumulate(r.W, alpha, half * p);
    return r;
}

Family cocycle_residual(const ReducedTwoCochain& f)
{
    const Rational delta = f.weights.delta();
    Family out;
    for (const auto& [alpha, c] : f.C)
        accumulate(out, alpha, c.derivative());
    for (const auto& [alpha, b] : f.B)
        accumulate(out, alpha, (Rational(alpha.total()) - delta + Rational(1)) * b);
    add_lowering(out, f.A, f.weights, Rational(-1, 2));
    return out;
}

ReducedTwoCochain coboundary_reduced(const ReducedOneCochain& b)
{
    const Rational delta = b.weights.delta();
    const Rational half(1, 2);
    ReducedTwoCochain f{b.weights, {}, {}, {}};
    for (const auto& [alpha, u] : b.U)
        accumulate(f.A, alpha, (Rational(alpha.total()) - delta) * u);
    for (const auto& [alpha, v] : b.V)
        accumulate(f.A, alpha, v.derivative());
    add_lowering(f.B, b.U, b.weights, half);
    for (const auto& [alpha, w] : b.W)
        accumulate(f.B, alpha, w.derivative());
    add_lowering(f.C, b.V, b.weights, half);
    for (const auto& [alpha, w] : b.W)
        accumulate(f.C, alpha, (delta - Rational(alpha.total()) - Rational(1)) * w);
    return f;
}

LinearSystem build_system(unsigned n, unsigned k, std::span<const Rational> lambdas)
{
    if (lambdas.size() != n)
        throw std::invalid_argument("build_system: expected " + std::to_string(n) + " weights, got " +
                                    std::to_string(lambdas.size()));
    if (n == 0)
        throw std::invalid_argument("build_system: arity must be at least 1");
    LinearSystem sys;
    sys.n = n;
    sys.k = k;
    sys.lambdas.assign(lambdas.begin(), lambdas.end());
    if (k > 0)
        sys.row_labels = enumerate_multiindices(n, k - 1);
    sys.col_labels = enumerate_multiindices(n, k);
    sys.matrix = RationalMatrix(sys.row_labels.size(), sys.col_labels.size());

    std::map<MultiIndex, std::size_t> col_of;
    for (std::size_t c = 0; c < sys.col_labels.size(); ++c)
        col_of.emplace(sys.col_labels[c], c);
    const Weights w{sys.lambdas, Rational(0)};
    for (std::size_t r = 0; r < sys.row_labels.size(); ++r) {
        const MultiIndex& alpha = sys.row_labels[r];
        for (std::size_t i = 0; i < n; ++i)
            sys.matrix(r, col_of.at(alpha.incremented(i))) = system_coefficient(alpha, i, w);
    }
    return sys;
}

namespace {

std::string quoted(const std::string& s)
{
    return "\"" + s + "\"";
}

LinearSystem submatrix(const LinearSystem& sys, const std::function<bool(const MultiIndex&)>& keep_row,
                       const std::function<bool(const MultiIndex&)>& keep_col)
{
    LinearSystem out;
    out.n = sys.n;
    out.k = sys.k;
    out.lambdas = sys.lambdas;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 0; r < sys.row_labels.size(); ++r)
        if (keep_row(sys.row_labels[r])) {
            rows.push_back(r);
            out.row_labels.push_back(sys.row_labels[r]);
        }
    for (std::size_t c = 0; c < sys.col_labels.size(); ++c)
        if (keep_col(sys.col_labels[c])) {
            cols.push_back(c);
            out.col_labels.push_back(sys.col_labels[c]);
        }
    out.matrix = RationalMatrix(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.matrix(i, j) = sys.matrix(rows[i], cols[j]);
    return out;
}

} // namespace

std::string system_csv(const LinearSystem& sys)
{
    std::ostringstream os;
    os << quoted("alpha\\beta");
    for (const auto& c : sys.col_labels)
        os << ',' << quoted(c.str());
    os << '\n';
    for (std::size_t r = 0; r < sys.row_labels.size(); ++r) {
        os << quoted(sys.row_labels[r].str());
        for (std::size_t c = 0; c < sys.col_labels.size(); ++c)
            os << ',' << sys.matrix(r, c);
        os << '\n';
    }
    return os.str();
}

SplitSystems split_systems(const LinearSystem& sys, unsigned t1)
{
    if (sys.lambdas.empty())
        throw std::invalid_argument("split_systems: empty system");
    const auto t = (Rational(-2) * sys.lambdas.front()).to_natural();
    if (!t)
        throw std::invalid_argument("split_systems: -2 lambda_1 = " + (Rational(-2) * sys.lambdas.front()).str() +
                                    " is not a natural number");
    if (*t != t1)
        throw std::invalid_argument("split_systems: t1 = " + std::to_string(t1) + " but -2 lambda_1 = " +
                                    std::to_string(*t));
    auto all = [](const MultiIndex&) { return true; };
    SplitSystems out;
    out.s1 = submatrix(sys, [t1](const MultiIndex& a) { return a[0] != t1; }, all);
    out.s2 = submatrix(sys, [t1](const MultiIndex& a) { return a[0] == t1; }, all);
    if (t1 == 0) {
        auto none = [](const MultiIndex&) { return false; };
        out.s1prime = submatrix(sys, none, none);
    } else {
        auto on_slice = [t1](const MultiIndex& a) { return a[0] == t1 - 1; };
        out.s1prime = submatrix(sys, on_slice, on_slice);
    }
    return out;
}

SplitSystems split_systems(const LinearSystem& sys)
{
    if (sys.lambdas.empty())
        throw std::invalid_argument("split_systems: empty system");
    const auto t = (Rational(-2) * sys.lambdas.front()).to_natural();
    if (!t)
        throw std::invalid_argument("split_systems: -2 lambda_1 = " + (Rational(-2) * sys.lambdas.front()).str() +
                                    " is not a natural number");
    return split_systems(sys, static_cast<unsigned>(*t));
}

CohomResult dim_h2_from_system(const Weights& w, const LinearSystem& sys)
{
    CohomResult r;
    r.method = Method::System;
    r.tag = classify(w);
    r.weights = w;
    const std::size_t rho = rank(sys.matrix);
    const std::size_t ell = sys.row_labels.size() - rho;
    r.rank = rho;
    r.ell = ell;
    r.dim = base_dimension(sys.n, sys.k) + Rational(3) * Rational(ell);
    if (sys.k == 0)
        r.note = "k = 0: empty system";
    return r;
}

CohomResult dim_h2_via_system(const Weights& w)
{
    const auto k = w.delta_natural();
    if (!k) {
        CohomResult r;
        r.method = Method::System;
        r.tag = classify(w);
        r.weights = w;
        r.dim = Rational(0);
        return r;
    }
    return dim_h2_from_system(w, build_system(static_cast<unsigned>(w.n()), *k, w.lambdas));
}

std::vector<ReducedTwoCochain> cocycle_basis(const Weights& w)
{
    std::vector<ReducedTwoCochain> basis;
    const auto k = w.delta_natural();
    if (!k)
        return basis;
    const LinearSystem sys = build_system(static_cast<unsigned>(w.n()), *k, w.lambdas);
    for (const auto& v : kernel_basis(sys.matrix)) {
        ReducedTwoCochain f{w, {}, {}, {}};
        for (std::size_t c = 0; c < v.size(); ++c)
            accumulate(f.A, sys.col_labels[c], Polynomial(v[c]));
        basis.push_back(std::move(f));
    }
    const auto left = kernel_basis(sys.matrix.transpose());
    for (Family ReducedTwoCochain::*family : {&ReducedTwoCochain::B, &ReducedTwoCochain::C})
        for (const auto& y : left) {
            ReducedTwoCochain f{w, {}, {}, {}};
            for (std::size_t r = 0; r < y.size(); ++r)
                accumulate(f.*family, sys.row_labels[r], Polynomial(y[r]));
            basis.push_back(std::move(f));
        }
    return basis;
}

namespace {

/// One coefficient slot x^power Omega^alpha of family 0, 1 or 2 (A/U, B/V,
/// C/W). Its X_x weight is power + delta - |alpha| + {1, 0, -1}[family].
struct Slot {
    int family;
    MultiIndex alpha;
    unsigned power;
    friend auto operator<=>(const Slot&, const Slot&) = default;
};

constexpr std::array<int, 3> kOffsets{1, 0, -1};

Rational slot_weight(int family, const MultiIndex& alpha, unsigned power, const Rational& delta)
{
    return Rational(power) + delta - Rational(alpha.total()) + Rational(kOffsets[static_cast<std::size_t>(family)]);
}

std::vector<Slot> slots_of_weight(const Weights& w, unsigned alpha_max, const Rational& weight)
{
    const Rational delta = w.delta();
    std::vector<Slot> out;
    const auto alphas = enumerate_multiindices_upto(w.n(), alpha_max);
    for (int family = 0; family < 3; ++family)
        for (const auto& alpha : alphas) {
            const Rational m = weight - slot_weight(family, alpha, 0, delta);
            if (const auto power = m.to_natural())
                out.push_back({family, alpha, static_cast<unsigned>(*power)});
        }
    return out;
}

std::array<const Family*, 3> families(const ReducedTwoCochain& f)
{
    return {&f.A, &f.B, &f.C};
}

std::array<Family*, 3> families(ReducedOneCochain& b)
{
    return {&b.U, &b.V, &b.W};
}

Rational slot_value(const ReducedTwoCochain& f, const Slot& s)
{
    const Family& fam = *families(f)[static_cast<std::size_t>(s.family)];
    const auto it = fam.find(s.alpha);
    return it == fam.end() ? Rational(0) : it->second.coefficient(s.power);
}

/// Solves d b = f on the slots selected by `constrained`, weight by weight,
/// with |alpha| <= alpha_max for both b and f.
std::optional<ReducedOneCochain> solve_by_weight(const ReducedTwoCochain& f, unsigned alpha_max,
                                                 const std::function<bool(const Slot&)>& constrained)
{
    const Rational delta = f.weights.delta();
    std::set<Rational> weights;
    for (int family = 0; family < 3; ++family)
        for (const auto& [alpha, p] : *families(f)[static_cast<std::size_t>(family)]) {
            const auto coeffs = p.coefficients();
            for (std::size_t j = 0; j < coeffs.size(); ++j)
                if (!coeffs[j].is_zero())
                    weights.insert(slot_weight(family, alpha, static_cast<unsigned>(j), delta));
        }

    ReducedOneCochain b{f.weights, {}, {}, {}};
    for (const Rational& weight : weights) {
        const auto slots = slots_of_weight(f.weights, alpha_max, weight);
        std::map<Slot, std::size_t> row_of;
        std::vector<Slot> rows;
        for (const auto& s : slots)
            if (constrained(s)) {
                row_of.emplace(s, rows.size());
                rows.push_back(s);
            }
        if (rows.empty())
            continue;

        RationalMatrix m(rows.size(), slots.size());
        for (std::size_t c = 0; c < slots.size(); ++c) {
            ReducedOneCochain unit{f.weights, {}, {}, {}};
            (*families(unit)[static_cast<std::size_t>(slots[c].family)])[slots[c].alpha] =
                Polynomial::monomial(slots[c].power);
            const ReducedTwoCochain image = coboundary_reduced(unit);
            for (int family = 0; family < 3; ++family)
                for (const auto& [alpha, p] : *families(image)[static_cast<std::size_t>(family)]) {
                    const auto coeffs = p.coefficients();
                    for (std::size_t j = 0; j < coeffs.size(); ++j) {
                        if (coeffs[j].is_zero())
                            continue;
                        const auto it = row_of.find(Slot{family, alpha, static_cast<unsigned>(j)});
                        if (it != row_of.end())
                            m(it->second, c) = coeffs[j];
                    }
                }
        }
        std::vector<Rational> rhs;
        rhs.reserve(rows.size());
        for (const auto& s : rows)
            rhs.push_back(slot_value(f, s));
        const auto x = solve(m, rhs);
        if (!x)
            return std::nullopt;
        for (std::size_t c = 0; c < slots.size(); ++c)
            if (!(*x)[c].is_zero())
                accumulate(*families(b)[static_cast<std::size_t>(slots[c].family)], slots[c].alpha,
                           Polynomial::monomial(slots[c].power, (*x)[c]));
    }
    return b;
}

unsigned support_bound(const ReducedTwoCochain& f)
{
    unsigned a = 0;
    for (const Family* fam : families(f))
        for (const auto& [alpha, p] : *fam)
            a = std::max(a, alpha.total());
    return a;
}

} // namespace

std::optional<ReducedOneCochain> find_primitive(const ReducedTwoCochain& f)
{
    const unsigned k = f.weights.delta_natural().value_or(0);
    const unsigned alpha_max = std::max(support_bound(f), k) + 1;
    auto b = solve_by_weight(f, alpha_max, [](const Slot&) { return true; });
    if (b && coboundary_reduced(*b) != f)
        throw std::logic_error("find_primitive: solution does not reproduce the target");
    return b;
}

bool is_coboundary(const ReducedTwoCochain& f)
{
    return find_primitive(f).has_value();
}

bool is_normalized(const ReducedTwoCochain& f, unsigned k)
{
    const auto only_at = [](const Family& fam, long level) {
        return std::all_of(fam.begin(), fam.end(),
                           [level](const auto& kv) { return static_cast<long>(kv.first.total()) == level; });
    };
    return only_at(f.A, k) && only_at(f.B, static_cast<long>(k) - 1) && only_at(f.C, static_cast<long>(k) - 1);
}

std::optional<ReducedOneCochain> find_normalizing_primitive(const ReducedTwoCochain& f, unsigned k)
{
    const unsigned alpha_max = std::max(support_bound(f), k) + 1;
    auto forbidden = [k](const Slot& s) {
        const long level = s.family == 0 ? static_cast<long>(k) : static_cast<long>(k) - 1;
        return static_cast<long>(s.alpha.total()) != level;
    };
    return solve_by_weight(f, alpha_max, forbidden);
}

} // namespace cohom
