#include "cohom/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cohom {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational::Rational(long numerator, long denominator)
{
    if (denominator == 0)
        throw std::domain_error("Rational: zero denominator");
    value_ = mpq_class(numerator, 1);
    value_ /= mpq_class(denominator, 1);
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value))
{
    if (value_.get_den() == 0)
        throw std::domain_error("Rational: zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw std::invalid_argument("malformed rational (zero denominator): '" + std::string(text) + "'");
    if (negative)
        n = -n;
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(std::move(q));
}

std::string Rational::str() const
{
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::optional<long> Rational::to_long() const
{
    if (!is_integer() || !value_.get_num().fits_slong_p())
        return std::nullopt;
    return value_.get_num().get_si();
}

std::optional<unsigned long> Rational::to_natural() const
{
    if (!is_integer() || sign() < 0 || !value_.get_num().fits_ulong_p())
        return std::nullopt;
    return value_.get_num().get_ui();
}

Rational& Rational::operator+=(const Rational& rhs)
{
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("Rational: division by zero");
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const
{
    Rational r(*this);
    r.value_ = -r.value_;
    return r;
}

} // namespace cohom
