#pragma once

#include "cohom/density.hpp"
#include "cohom/linalg.hpp"
#include "cohom/result.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace cohom {

/// A basis p-form of Lambda^p sl(2)*: a strictly increasing tuple of
/// generators.
using Form = std::vector<Generator>;

/// The C(3, p) basis p-forms in lexicographic order. Throws for p > 3.
[[nodiscard]] const std::vector<Form>& basis_forms(unsigned p);

/// A p-cochain: one operator per basis p-form.
class Cochain {
public:
    Cochain(unsigned degree, std::shared_ptr<const Weights> weights);
    Cochain(unsigned degree, Weights weights);

    [[nodiscard]] unsigned degree() const noexcept { return degree_; }
    [[nodiscard]] const Weights& weights() const noexcept { return *weights_; }
    [[nodiscard]] const std::shared_ptr<const Weights>& shared_weights() const noexcept { return weights_; }
    [[nodiscard]] const std::vector<Form>& forms() const { return basis_forms(degree_); }

    [[nodiscard]] const DiffOperator& component(std::size_t form_index) const { return components_.at(form_index); }
    DiffOperator& component(std::size_t form_index) { return components_.at(form_index); }
    /// The component on an increasing form. Throws std::invalid_argument
    /// if the form is not a basis form of this degree.
    [[nodiscard]] const DiffOperator& component(const Form& form) const;
    DiffOperator& component(const Form& form);

    /// f(args) for any argument tuple: antisymmetric, so repeated
    /// arguments give zero and permutations contribute their sign.
    [[nodiscard]] DiffOperator evaluate(std::span<const Generator> args) const;

    [[nodiscard]] bool is_zero() const;

    Cochain& operator+=(const Cochain& rhs);
    Cochain& operator-=(const Cochain& rhs);
    Cochain& operator*=(const Rational& s);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }

    friend bool operator==(const Cochain&, const Cochain&);

private:
    unsigned degree_;
    std::shared_ptr<const Weights> weights_;
    std::vector<DiffOperator> components_;
};

/// The Chevalley-Eilenberg differential
///   (df)(u_0..u_p) = sum_i (-1)^i u_i . f(..^u_i..)
///                  + sum_{i<j} (-1)^{i+j} f([u_i,u_j], ..^u_i..^u_j..).
/// Throws std::invalid_argument for degree 3.
[[nodiscard]] Cochain coboundary(const Cochain& f);

/// X_x-eigenvalue of x^m Omega^alpha on the dual of args:
/// m + delta - |alpha| + sum of weight_contribution(args).
[[nodiscard]] Rational weight_of(unsigned m, const MultiIndex& alpha, std::span<const Generator> args,
                                 const Rational& delta);

struct Truncation {
    unsigned alpha_max = 0;
    Rational weight;
};

/// One basis cochain x^power Omega^alpha on basis form `form`.
struct BlockCell {
    unsigned power = 0;
    MultiIndex alpha;
    std::size_t form = 0;

    friend bool operator==(const BlockCell&, const BlockCell&) = default;
};

/// All basis cochains of degree p, |alpha| <= alpha_max, with the given
/// weight. Ordered by form, then alpha in graded-lex order. Empty when no
/// power m solves the weight equation.
[[nodiscard]] std::vector<BlockCell> weight_block_basis(unsigned p, const Truncation& tr, const Weights& w);

[[nodiscard]] Cochain to_cochain(const BlockCell& cell, unsigned p, std::shared_ptr<const Weights> w);

/// Matrix of d: C^p -> C^{p+1} on a weight block, columns indexed by the
/// degree-p basis and rows by the degree-(p+1) basis. Throws
/// std::logic_error if d leaves the block.
[[nodiscard]] RationalMatrix differential_matrix(unsigned p, const Truncation& tr, const Weights& w);

struct BlockCohomology {
    std::size_t cochains = 0;
    std::size_t rank_out = 0; // rank of d_p
    std::size_t rank_in = 0;  // rank of d_{p-1}
    [[nodiscard]] std::size_t dim() const { return cochains - rank_out - rank_in; }
};

/// H^p of one truncated weight block, p in {0, 1, 2, 3}.
[[nodiscard]] BlockCohomology block_cohomology(unsigned p, const Truncation& tr, const Weights& w);

/// k + 3 when delta = k is natural, 3 otherwise.
[[nodiscard]] unsigned default_alpha_max(const Weights& w);

/// dim H^2 of the weight-0 block truncated at |alpha| <= alpha_max,
/// recomputed at alpha_max + 1 and + 2. `stable` is false unless all three
/// agree; the reported dim is then the one at alpha_max.
/// Throws std::invalid_argument when alpha_max == 0.
[[nodiscard]] CohomResult brute_force_h2(const Weights& w, std::optional<unsigned> alpha_max = std::nullopt);

} // namespace cohom
