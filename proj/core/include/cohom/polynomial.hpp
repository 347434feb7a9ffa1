#pragma once

#include "cohom/rational.hpp"

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cohom {

/// Univariate polynomial in x with exact rational coefficients.
///
/// Coefficients are stored in ascending powers with trailing zeros stripped,
/// so the zero polynomial has an empty coefficient list and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> ascending_coefficients);

    /// c * x^power
    static Polynomial monomial(unsigned power, const Rational& c = Rational(1));

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Coefficient of x^power; zero beyond the degree.
    [[nodiscard]] Rational coefficient(std::size_t power) const;
    [[nodiscard]] std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    [[nodiscard]] Polynomial derivative() const;
    [[nodiscard]] Rational evaluate(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Human-readable form, e.g. "3 + 5*x^3". Not a serialization format.
    [[nodiscard]] std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

private:
    void strip();

    std::vector<Rational> coeffs_;
};

/// d/dx of p.
[[nodiscard]] Polynomial poly_derivative(const Polynomial& p);

} // namespace cohom
