#include "cohom/density.hpp"

#include <sstream>
#include <stdexcept>

namespace cohom {

Rational Weights::delta() const
{
    Rational d = mu;
    for (const auto& l : lambdas)
        d -= l;
    return d;
}

std::optional<unsigned> Weights::delta_natural() const
{
    auto k = delta().to_natural();
    if (!k)
        return std::nullopt;
    return static_cast<unsigned>(*k);
}

std::optional<std::vector<unsigned>> Weights::t_vector() const
{
    std::vector<unsigned> t;
    t.reserve(lambdas.size());
    for (const auto& l : lambdas) {
        auto ti = (Rational(-2) * l).to_natural();
        if (!ti)
            return std::nullopt;
        t.push_back(static_cast<unsigned>(*ti));
    }
    return t;
}

std::optional<unsigned> Weights::sigma() const
{
    auto t = t_vector();
    if (!t)
        return std::nullopt;
    unsigned s = 0;
    for (unsigned ti : *t)
        s += ti;
    return s;
}

std::string Weights::str() const
{
    std::ostringstream os;
    os << "lambdas=[";
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        os << (i ? "," : "") << lambdas[i];
    os << "] mu=" << mu;
    return os.str();
}

Polynomial field_of(Generator g)
{
    switch (g) {
    case Generator::X1:
        return Polynomial::monomial(0);
    case Generator::Xx:
        return Polynomial::monomial(1);
    case Generator::Xx2:
        return Polynomial::monomial(2);
    }
    throw std::logic_error("field_of: bad generator");
}

const char* name_of(Generator g)
{
    switch (g) {
    case Generator::X1:
        return "X1";
    case Generator::Xx:
        return "Xx";
    case Generator::Xx2:
        return "Xx2";
    }
    return "?";
}

int weight_contribution(Generator g)
{
    switch (g) {
    case Generator::X1:
        return 1;
    case Generator::Xx:
        return 0;
    case Generator::Xx2:
        return -1;
    }
    throw std::logic_error("weight_contribution: bad generator");
}

std::optional<Bracket> bracket(Generator a, Generator b)
{
    if (a == b)
        return std::nullopt;
    const bool swapped = static_cast<int>(a) > static_cast<int>(b);
    if (swapped)
        std::swap(a, b);
    Bracket r{Rational(1), Generator::X1};
    if (a == Generator::X1 && b == Generator::Xx)
        r = {Rational(1), Generator::X1};
    else if (a == Generator::X1 && b == Generator::Xx2)
        r = {Rational(2), Generator::Xx};
    else
        r = {Rational(1), Generator::Xx2};
    if (swapped)
        r.coefficient = -r.coefficient;
    return r;
}

DiffOperator::DiffOperator(std::shared_ptr<const Weights> weights) : weights_(std::move(weights))
{
    if (!weights_)
        throw std::invalid_argument("DiffOperator: null weights");
}

DiffOperator::DiffOperator(Weights weights) : DiffOperator(std::make_shared<const Weights>(std::move(weights))) {}

void DiffOperator::add_term(const MultiIndex& alpha, const Polynomial& coefficient)
{
    if (alpha.size() != n())
        throw std::invalid_argument("DiffOperator::add_term: multi-index " + alpha.str() + " has wrong arity");
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(alpha, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Polynomial DiffOperator::coefficient(const MultiIndex& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Polynomial{} : it->second;
}

void DiffOperator::check_compatible(const DiffOperator& rhs) const
{
    if (weights_ != rhs.weights_ && *weights_ != *rhs.weights_)
        throw std::invalid_argument("DiffOperator: operands act between different modules");
}

DiffOperator& DiffOperator::operator+=(const DiffOperator& rhs)
{
    check_compatible(rhs);
    for (const auto& [alpha, c] : rhs.terms_)
        add_term(alpha, c);
    return *this;
}

DiffOperator& DiffOperator::operator-=(const DiffOperator& rhs)
{
    check_compatible(rhs);
    for (const auto& [alpha, c] : rhs.terms_)
        add_term(alpha, -c);
    return *this;
}

DiffOperator& DiffOperator::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_)
        c *= scalar;
    return *this;
}

bool operator==(const DiffOperator& a, const DiffOperator& b)
{
    return a.terms_ == b.terms_ && (a.weights_ == b.weights_ || *a.weights_ == *b.weights_);
}

Polynomial lie_derivative_density(Generator g, const Polynomial& f, const Rational& mu)
{
    const Polynomial h = field_of(g);
    return h * f.derivative() + mu * (h.derivative() * f);
}

Polynomial apply_operator(const DiffOperator& op, std::span<const Polynomial> densities)
{
    if (densities.size() != op.n())
        throw std::invalid_argument("apply_operator: expected " + std::to_string(op.n()) + " densities, got " +
                                    std::to_string(densities.size()));
    Polynomial total;
    for (const auto& [alpha, coeff] : op.terms()) {
        Polynomial product = coeff;
        for (std::size_t i = 0; i < alpha.size() && !product.is_zero(); ++i) {
            Polynomial d = densities[i];
            for (unsigned j = 0; j < alpha[i]; ++j)
                d = d.derivative();
            product = product * d;
        }
        total += product;
    }
    return total;
}

DiffOperator act_on_operator(Generator g, const DiffOperator& op)
{
    const Weights& w = op.weights();
    const Rational delta = w.delta();
    const Polynomial h = field_of(g);
    const Polynomial dh = h.derivative();
    const Polynomial ddh = dh.derivative();

    DiffOperator out(op.shared_weights());
    for (const auto& [alpha, a] : op.terms()) {
        const Rational shift = delta - Rational(alpha.total());
        out.add_term(alpha, a.derivative() * h + shift * (a * dh));
        if (ddh.is_zero())
            continue;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0)
                continue; // the factor alpha_i vanishes
            const Rational ai(alpha[i]);
            const Rational factor = Rational(-1, 2) * ai * (ai + Rational(2) * w.lambdas[i] - Rational(1));
            if (factor.is_zero())
                continue;
            out.add_term(alpha.decremented(i), factor * (a * ddh));
        }
    }
    return out;
}

} // namespace cohom
