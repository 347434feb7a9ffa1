#pragma once

#include "cohom/density.hpp"
#include "cohom/multi_index.hpp"

#include <string>
#include <variant>

namespace cohom {

/// delta is not a natural number (negative integers included).
struct NonIntegerDelta {
    friend bool operator==(const NonIntegerDelta&, const NonIntegerDelta&) = default;
};

/// delta = k is natural but some -2 lambda_i lies outside {0, ..., k-1}.
struct NonResonant {
    unsigned k = 0;
    friend bool operator==(const NonResonant&, const NonResonant&) = default;
};

/// delta = k with every t_i = -2 lambda_i in {0, ..., k-1}.
///
/// s and r follow the theorem selected by sigma:
///   sigma = k      s = #{t_i >= 1}, r = 0
///   sigma = k + 1  s = #{t_i >= 1}, r = #{t_i = 1}
///   sigma = k + m  s = #{t_i > m} for m >= 2, r = 0
/// and both are 0 when sigma < k.
struct Singular {
    unsigned k = 0;
    MultiIndex t;
    unsigned sigma = 0;
    unsigned s = 0;
    unsigned r = 0;
    long m = 0; // sigma - k

    friend bool operator==(const Singular&, const Singular&) = default;
};

using CaseTag = std::variant<NonIntegerDelta, NonResonant, Singular>;

[[nodiscard]] CaseTag classify(const Weights& w);

/// Builds the Singular tag for (k, t), binding s and r per theorem.
[[nodiscard]] Singular make_singular(unsigned k, const MultiIndex& t);

/// "delta-not-natural", "nonresonant", "singular".
[[nodiscard]] std::string case_name(const CaseTag& tag);

/// delta as a natural number, when the tag carries one.
[[nodiscard]] std::optional<unsigned> tag_k(const CaseTag& tag);

} // namespace cohom
