#include "cohom/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cohom {

Polynomial::Polynomial(const Rational& constant)
{
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> ascending_coefficients) : coeffs_(std::move(ascending_coefficients))
{
    strip();
}

Polynomial Polynomial::monomial(unsigned power, const Rational& c)
{
    if (c.is_zero())
        return {};
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        out[i - 1] = coeffs_[i] * Rational(i);
    return Polynomial(std::move(out));
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] += rhs.coeffs_[i];
    strip();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
        coeffs_[i] -= rhs.coeffs_[i];
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar)
{
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string Polynomial::str() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeffs_[i];
        if (i == 1)
            os << "*x";
        else if (i > 1)
            os << "*x^" << i;
    }
    return os.str();
}

void Polynomial::strip()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Polynomial poly_derivative(const Polynomial& p)
{
    return p.derivative();
}

} // namespace cohom
