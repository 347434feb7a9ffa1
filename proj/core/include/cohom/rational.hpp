#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace cohom {

/// Exact rational number in canonical form (positive denominator, reduced).
///
/// Thin value wrapper over GMP's mpq_class. Every arithmetic result is
/// canonicalized, so equality is structural.
class Rational {
public:
    Rational() = default;

    template <std::signed_integral I>
    Rational(I value) : value_(static_cast<long>(value)) {}

    template <std::unsigned_integral U>
    Rational(U value) : value_(static_cast<unsigned long>(value)) {}

    Rational(long numerator, long denominator);
    explicit Rational(mpq_class value);

    /// Parses "p" or "p/q" with an optional leading '-'. No whitespace,
    /// no decimal points. Non-reduced input such as "2/4" is accepted and
    /// canonicalized. Throws std::invalid_argument on malformed text.
    static Rational parse(std::string_view text);

    /// Canonical text: "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const;

    [[nodiscard]] const mpq_class& value() const noexcept { return value_; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(value_) == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return value_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(value_); }

    /// The value as a long when it is an integer that fits.
    [[nodiscard]] std::optional<long> to_long() const;
    /// The value when it is a natural number (0, 1, 2, ...).
    [[nodiscard]] std::optional<unsigned long> to_natural() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

} // namespace cohom
