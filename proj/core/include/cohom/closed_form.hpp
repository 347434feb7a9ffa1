#pragma once

#include "cohom/case_tag.hpp"
#include "cohom/rational.hpp"
#include "cohom/result.hpp"

#include <optional>

namespace cohom {

/// Gamma_{n-1}^k = C(n+k-2, k).
[[nodiscard]] Rational base_dimension(unsigned n, unsigned k);

/// dim H^2 from the per-case theorems. nullopt ("unsupported") when no
/// theorem's hypotheses match the tag.
[[nodiscard]] std::optional<Rational> dim_h2_closed_form(const CaseTag& tag, unsigned n);

/// The closing summary table, evaluated literally: leading factor 2,
/// s = #{t_i > sigma - k}, r = #{t_i = 1}. A comparison predictor only.
/// nullopt outside the Singular case.
[[nodiscard]] std::optional<Rational> dim_h2_summary(const CaseTag& tag, unsigned n);

[[nodiscard]] CohomResult closed_form_result(const Weights& w);
[[nodiscard]] CohomResult summary_result(const Weights& w);

} // namespace cohom
