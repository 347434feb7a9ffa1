#pragma once

#include "cohom/multi_index.hpp"
#include "cohom/polynomial.hpp"
#include "cohom/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cohom {

/// Weights (lambda_1, ..., lambda_n; mu) of the operator module
/// F_{lambda_1} (x) ... (x) F_{lambda_n} -> F_mu.
struct Weights {
    std::vector<Rational> lambdas;
    Rational mu;

    [[nodiscard]] std::size_t n() const noexcept { return lambdas.size(); }
    /// mu - sum(lambda_i)
    [[nodiscard]] Rational delta() const;
    /// delta when it is a natural number.
    [[nodiscard]] std::optional<unsigned> delta_natural() const;
    /// t_i = -2 lambda_i, defined only when every t_i is a natural number.
    [[nodiscard]] std::optional<std::vector<unsigned>> t_vector() const;
    /// sum of t_vector(), when defined.
    [[nodiscard]] std::optional<unsigned> sigma() const;

    /// "lambdas=[a,b] mu=c", for diagnostics.
    [[nodiscard]] std::string str() const;

    friend bool operator==(const Weights&, const Weights&) = default;
};

/// Basis of sl(2) realized as vector fields X_h = h d/dx.
enum class Generator : std::uint8_t { X1 = 0, Xx = 1, Xx2 = 2 };

inline constexpr std::array<Generator, 3> kGenerators{Generator::X1, Generator::Xx, Generator::Xx2};

/// The vector-field coefficient h: 1, x or x^2.
[[nodiscard]] Polynomial field_of(Generator g);
[[nodiscard]] const char* name_of(Generator g);

/// Contribution of the dual basis form g* to the X_x eigenvalue of a
/// cochain: X1 -> +1, Xx -> 0, Xx2 -> -1.
[[nodiscard]] int weight_contribution(Generator g);

struct Bracket {
    Rational coefficient;
    Generator generator;
};

/// [a, b] = coefficient * generator, or nullopt when a == b.
/// [X1, Xx] = X1, [X1, Xx2] = 2 Xx, [Xx, Xx2] = Xx2.
[[nodiscard]] std::optional<Bracket> bracket(Generator a, Generator b);

/// An n-ary differential operator sum_alpha A_alpha(x) Omega^alpha between
/// density modules. Zero coefficients are never stored.
///
/// Weights are shared immutably between operators built from one instance.
class DiffOperator {
public:
    explicit DiffOperator(std::shared_ptr<const Weights> weights);
    explicit DiffOperator(Weights weights);

    /// Adds coefficient * Omega^alpha. Throws std::invalid_argument when
    /// alpha has the wrong length.
    void add_term(const MultiIndex& alpha, const Polynomial& coefficient);
    [[nodiscard]] Polynomial coefficient(const MultiIndex& alpha) const;

    [[nodiscard]] const std::map<MultiIndex, Polynomial>& terms() const noexcept { return terms_; }
    [[nodiscard]] const Weights& weights() const noexcept { return *weights_; }
    [[nodiscard]] const std::shared_ptr<const Weights>& shared_weights() const noexcept { return weights_; }
    [[nodiscard]] std::size_t n() const noexcept { return weights_->n(); }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }

    DiffOperator& operator+=(const DiffOperator& rhs);
    DiffOperator& operator-=(const DiffOperator& rhs);
    DiffOperator& operator*=(const Rational& scalar);
    friend DiffOperator operator+(DiffOperator a, const DiffOperator& b) { return a += b; }
    friend DiffOperator operator-(DiffOperator a, const DiffOperator& b) { return a -= b; }
    friend DiffOperator operator*(const Rational& s, DiffOperator a) { return a *= s; }

    friend bool operator==(const DiffOperator& a, const DiffOperator& b);

private:
    void check_compatible(const DiffOperator& rhs) const;

    std::shared_ptr<const Weights> weights_;
    std::map<MultiIndex, Polynomial> terms_;
};

/// Lie derivative of the mu-density f dx^mu along the generator:
/// h f' + mu h' f.
[[nodiscard]] Polynomial lie_derivative_density(Generator g, const Polynomial& f, const Rational& mu);

/// sum_alpha A_alpha * prod_i f_i^(alpha_i). Throws std::invalid_argument
/// when the tuple length differs from the arity.
[[nodiscard]] Polynomial apply_operator(const DiffOperator& op, std::span<const Polynomial> densities);

/// The sl(2) action on operators, L^mu o A - A o L^lambda, computed in closed
/// form term by term:
///   A' h Omega^a + (delta - |a|) A h' Omega^a
///     - 1/2 sum_i a_i (a_i + 2 lambda_i - 1) A h'' Omega^(a - e_i).
[[nodiscard]] DiffOperator act_on_operator(Generator g, const DiffOperator& op);

} // namespace cohom
