#include "cohom/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace cohom {

const std::vector<Form>& basis_forms(unsigned p)
{
    using G = Generator;
    static const std::vector<std::vector<Form>> table{
        {Form{}},
        {{G::X1}, {G::Xx}, {G::Xx2}},
        {{G::X1, G::Xx}, {G::X1, G::Xx2}, {G::Xx, G::Xx2}},
        {{G::X1, G::Xx, G::Xx2}},
    };
    if (p > 3)
        throw std::invalid_argument("basis_forms: sl(2) has no " + std::to_string(p) + "-forms");
    return table[p];
}

Cochain::Cochain(unsigned degree, std::shared_ptr<const Weights> weights)
    : degree_(degree), weights_(std::move(weights))
{
    const auto count = basis_forms(degree).size();
    components_.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        components_.emplace_back(weights_);
}

Cochain::Cochain(unsigned degree, Weights weights) : Cochain(degree, std::make_shared<const Weights>(std::move(weights)))
{
}

namespace {

std::size_t form_index(unsigned p, const Form& form)
{
    const auto& forms = basis_forms(p);
    const auto it = std::find(forms.begin(), forms.end(), form);
    if (it == forms.end())
        throw std::invalid_argument("not an increasing basis form of degree " + std::to_string(p));
    return static_cast<std::size_t>(it - forms.begin());
}

} // namespace

const DiffOperator& Cochain::component(const Form& form) const
{
    return components_[form_index(degree_, form)];
}

DiffOperator& Cochain::component(const Form& form)
{
    return components_[form_index(degree_, form)];
}

DiffOperator Cochain::evaluate(std::span<const Generator> args) const
{
    if (args.size() != degree_)
        throw std::invalid_argument("Cochain::evaluate: expected " + std::to_string(degree_) + " arguments");
    Form sorted(args.begin(), args.end());
    int sign = 1;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j + 1 < sorted.size() - i; ++j)
            if (sorted[j] > sorted[j + 1]) {
                std::swap(sorted[j], sorted[j + 1]);
                sign = -sign;
            }
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return DiffOperator(weights_);
    DiffOperator out = components_[form_index(degree_, sorted)];
    if (sign < 0)
        out *= Rational(-1);
    return out;
}

bool Cochain::is_zero() const
{
    return std::all_of(components_.begin(), components_.end(), [](const DiffOperator& d) { return d.is_zero(); });
}

Cochain& Cochain::operator+=(const Cochain& rhs)
{
    if (degree_ != rhs.degree_)
        throw std::invalid_argument("Cochain: degree mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] += rhs.components_[i];
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& rhs)
{
    if (degree_ != rhs.degree_)
        throw std::invalid_argument("Cochain: degree mismatch");
    for (std::size_t i = 0; i < components_.size(); ++i)
        components_[i] -= rhs.components_[i];
    return *this;
}

Cochain& Cochain::operator*=(const Rational& s)
{
    for (auto& c : components_)
        c *= s;
    return *this;
}

bool operator==(const Cochain& a, const Cochain& b)
{
    return a.degree_ == b.degree_ && a.components_ == b.components_;
}

Cochain coboundary(const Cochain& f)
{
    const unsigned p = f.degree();
    if (p >= 3)
        throw std::invalid_argument("coboundary: degree 3 is the top degree");
    Cochain out(p + 1, f.shared_weights());
    const auto& targets = basis_forms(p + 1);
    Form rest;
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Form& u = targets[t];
        DiffOperator& value = out.component(t);
        for (std::size_t i = 0; i < u.size(); ++i) {
            rest.clear();
            for (std::size_t l = 0; l < u.size(); ++l)
                if (l != i)
                    rest.push_back(u[l]);
            DiffOperator term = act_on_operator(u[i], f.evaluate(rest));
            if (i % 2)
                value -= term;
            else
                value += term;
        }
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = i + 1; j < u.size(); ++j) {
                const auto br = bracket(u[i], u[j]);
                rest.clear();
                rest.push_back(br->generator);
                for (std::size_t l = 0; l < u.size(); ++l)
                    if (l != i && l != j)
                        rest.push_back(u[l]);
                const Rational sign = (i + j) % 2 ? Rational(-1) : Rational(1);
                value += (sign * br->coefficient) * f.evaluate(rest);
            }
    }
    return out;
}

Rational weight_of(unsigned m, const MultiIndex& alpha, std::span<const Generator> args, const Rational& delta)
{
    long contribution = 0;
    for (Generator g : args)
        contribution += weight_contribution(g);
    return Rational(m) + delta - Rational(alpha.total()) + Rational(contribution);
}

std::vector<BlockCell> weight_block_basis(unsigned p, const Truncation& tr, const Weights& w)
{
    const Rational delta = w.delta();
    const auto alphas = enumerate_multiindices_upto(w.n(), tr.alpha_max);
    const auto& forms = basis_forms(p);
    std::vector<BlockCell> cells;
    for (std::size_t f = 0; f < forms.size(); ++f)
        for (const auto& alpha : alphas) {
            // weight_of(m, ...) = tr.weight, solved for m
            const Rational m = tr.weight - weight_of(0, alpha, forms[f], delta);
            if (const auto power = m.to_natural())
                cells.push_back({static_cast<unsigned>(*power), alpha, f});
        }
    return cells;
}

Cochain to_cochain(const BlockCell& cell, unsigned p, std::shared_ptr<const Weights> w)
{
    Cochain c(p, std::move(w));
    c.component(cell.form).add_term(cell.alpha, Polynomial::monomial(cell.power));
    return c;
}

RationalMatrix differential_matrix(unsigned p, const Truncation& tr, const Weights& w)
{
    const auto shared = std::make_shared<const Weights>(w);
    const auto cols = weight_block_basis(p, tr, w);
    const auto rows = weight_block_basis(p + 1, tr, w);

    std::map<std::tuple<std::size_t, MultiIndex, unsigned>, std::size_t> row_of;
    for (std::size_t r = 0; r < rows.size(); ++r)
        row_of.emplace(std::make_tuple(rows[r].form, rows[r].alpha, rows[r].power), r);

    RationalMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Cochain image = coboundary(to_cochain(cols[c], p, shared));
        for (std::size_t f = 0; f < basis_forms(p + 1).size(); ++f)
            for (const auto& [alpha, poly] : image.component(f).terms()) {
                const auto coeffs = poly.coefficients();
                for (std::size_t power = 0; power < coeffs.size(); ++power) {
                    if (coeffs[power].is_zero())
                        continue;
                    const auto it = row_of.find(std::make_tuple(f, alpha, static_cast<unsigned>(power)));
                    if (it == row_of.end())
                        throw std::logic_error("differential_matrix: coboundary left the truncated weight block at " +
                                               alpha.str());
                    m(it->second, c) = coeffs[power];
                }
            }
    }
    return m;
}

BlockCohomology block_cohomology(unsigned p, const Truncation& tr, const Weights& w)
{
    if (p > 3)
        throw std::invalid_argument("block_cohomology: degree out of range");
    BlockCohomology h;
    h.cochains = weight_block_basis(p, tr, w).size();
    if (p < 3)
        h.rank_out = rank(differential_matrix(p, tr, w));
    if (p > 0)
        h.rank_in = rank(differential_matrix(p - 1, tr, w));
    return h;
}

unsigned default_alpha_max(const Weights& w)
{
    if (const auto k = w.delta_natural())
        return *k + 3;
    return 3;
}

CohomResult brute_force_h2(const Weights& w, std::optional<unsigned> alpha_max)
{
    const unsigned base = alpha_max.value_or(default_alpha_max(w));
    if (base == 0)
        throw std::invalid_argument("brute_force_h2: alpha_max must be at least 1");

    CohomResult result;
    result.method = Method::Oracle;
    result.tag = classify(w);
    result.weights = w;
    result.alpha_max = base;

    std::size_t dims[3];
    for (unsigned i = 0; i < 3; ++i)
        dims[i] = block_cohomology(2, Truncation{base + i, Rational(0)}, w).dim();
    result.dim = Rational(dims[0]);
    result.stable = dims[0] == dims[1] && dims[1] == dims[2];
    if (!result.stable)
        result.note = "unstable: " + std::to_string(dims[0]) + "," + std::to_string(dims[1]) + "," +
                      std::to_string(dims[2]) + " at alpha_max " + std::to_string(base) + ".." +
                      std::to_string(base + 2);
    return result;
}

} // namespace cohom
