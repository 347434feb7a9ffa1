#pragma once

#include "cohom/complex.hpp"
#include "cohom/density.hpp"
#include "cohom/linalg.hpp"
#include "cohom/result.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cohom {

/// Coefficients indexed by multi-index; zero polynomials are never stored.
using Family = std::map<MultiIndex, Polynomial>;

/// Adds p to family[alpha], erasing the entry if it cancels.
void accumulate(Family& family, const MultiIndex& alpha, const Polynomial& p);

/// f(X_h1, X_h2) = sum A_a (h1 h2' - h2 h1') Omega^a
///               + sum B_a (h1 h2'' - h2 h1'') Omega^a
///               + sum C_a (h1' h2'' - h1'' h2') Omega^a
struct ReducedTwoCochain {
    Weights weights;
    Family A, B, C;

    [[nodiscard]] bool is_zero() const { return A.empty() && B.empty() && C.empty(); }
    friend bool operator==(const ReducedTwoCochain&, const ReducedTwoCochain&) = default;
};

/// b(X_h) = sum U_a h Omega^a + sum V_a h' Omega^a + sum W_a h'' Omega^a
struct ReducedOneCochain {
    Weights weights;
    Family U, V, W;

    [[nodiscard]] bool is_zero() const { return U.empty() && V.empty() && W.empty(); }
    friend bool operator==(const ReducedOneCochain&, const ReducedOneCochain&) = default;
};

[[nodiscard]] Cochain to_cochain(const ReducedTwoCochain& f);
[[nodiscard]] Cochain to_cochain(const ReducedOneCochain& b);
/// Inverse conversions; every 2- and 1-cochain has a unique reduced form.
/// Throw std::invalid_argument on a degree mismatch.
[[nodiscard]] ReducedTwoCochain reduce_two_cochain(const Cochain& f);
[[nodiscard]] ReducedOneCochain reduce_one_cochain(const Cochain& b);

/// R_a = C_a' + (|a| - delta + 1) B_a - 1/2 sum_i (a_i+1)(a_i+2 lambda_i) A_{a+e_i}.
/// f is a cocycle iff every R_a vanishes; only nonzero entries are returned.
/// (df)(X1, Xx, Xx2) = 2 sum R_a Omega^a.
[[nodiscard]] Family cocycle_residual(const ReducedTwoCochain& f);

/// The differential in reduced form:
///   A_a = (|a| - delta) U_a + V_a'
///   B_a = 1/2 sum_i (a_i+1)(a_i+2 lambda_i) U_{a+e_i} + W_a'
///   C_a = 1/2 sum_i (a_i+1)(a_i+2 lambda_i) V_{a+e_i} + (delta - |a| - 1) W_a
[[nodiscard]] ReducedTwoCochain coboundary_reduced(const ReducedOneCochain& b);

/// sum_i (a_i+1)(a_i+2 lambda_i) A_{a+e_i} = 0 for |a| = k-1, in unknowns
/// A_b with |b| = k. Rows and columns in graded-lex order.
struct LinearSystem {
    unsigned n = 0;
    unsigned k = 0;
    std::vector<Rational> lambdas;
    std::vector<MultiIndex> row_labels;
    std::vector<MultiIndex> col_labels;
    RationalMatrix matrix;
};

/// Throws std::invalid_argument when lambdas.size() != n.
[[nodiscard]] LinearSystem build_system(unsigned n, unsigned k, std::span<const Rational> lambdas);

/// CSV with a header of column labels and one labelled line per row.
[[nodiscard]] std::string system_csv(const LinearSystem& sys);

struct SplitSystems {
    LinearSystem s1;      // rows with a_1 != t1
    LinearSystem s2;      // rows with a_1 == t1
    LinearSystem s1prime; // rows a_1 == t1 - 1, terms i >= 2, unknowns with b_1 == t1 - 1
};

/// Throws std::invalid_argument unless -2 lambda_1 is the natural number t1.
[[nodiscard]] SplitSystems split_systems(const LinearSystem& sys, unsigned t1);
/// t1 taken from -2 lambda_1.
[[nodiscard]] SplitSystems split_systems(const LinearSystem& sys);

/// 0 when delta is not natural; otherwise Gamma_{n-1}^k + 3 ell with
/// ell = Gamma_n^{k-1} - rank.
[[nodiscard]] CohomResult dim_h2_via_system(const Weights& w);
/// As above but with a caller-supplied system for delta = k.
[[nodiscard]] CohomResult dim_h2_from_system(const Weights& w, const LinearSystem& sys);

/// Constant-coefficient cocycles: one A-family at |a| = k per kernel
/// vector of the system, and one B- and one C-family at |a| = k-1 per
/// vector of its left kernel. Empty when delta is not natural.
[[nodiscard]] std::vector<ReducedTwoCochain> cocycle_basis(const Weights& w);

/// Some b with coboundary_reduced(b) == f, or nullopt when f is not a
/// coboundary. Solved exactly, one weight block at a time.
[[nodiscard]] std::optional<ReducedOneCochain> find_primitive(const ReducedTwoCochain& f);
[[nodiscard]] bool is_coboundary(const ReducedTwoCochain& f);

/// Some b such that f - d b has A supported on |a| = k and B, C on
/// |a| = k - 1; nullopt when none exists.
[[nodiscard]] std::optional<ReducedOneCochain> find_normalizing_primitive(const ReducedTwoCochain& f, unsigned k);

/// True when A lives only on |a| = k and B, C only on |a| = k - 1.
[[nodiscard]] bool is_normalized(const ReducedTwoCochain& f, unsigned k);

} // namespace cohom
