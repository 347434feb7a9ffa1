#pragma once

#include "cohom/density.hpp"
#include "cohom/polynomial.hpp"
#include "cohom/rational.hpp"
#include "cohom/reduced.hpp"
#include "cohom/result.hpp"

#include <json.hpp>

namespace cohom {

using Json = nlohmann::ordered_json;

/// Canonical rational text.
[[nodiscard]] Json to_json(const Rational& r);
/// Accepts a rational string or an integer. Throws std::invalid_argument.
[[nodiscard]] Rational rational_from_json(const Json& j);

/// Ascending coefficient array of rational strings.
[[nodiscard]] Json to_json(const Polynomial& p);
[[nodiscard]] Polynomial polynomial_from_json(const Json& j);

[[nodiscard]] Json to_json(const Weights& w);
[[nodiscard]] Weights weights_from_json(const Json& j);

/// {"n", "lambdas", "mu", "terms": {"[a1,...,an]": [coeffs]}}
[[nodiscard]] Json to_json(const DiffOperator& op);
[[nodiscard]] DiffOperator diff_operator_from_json(const Json& j);

/// {"A": operator, "B": operator, "C": operator}, each a DiffOperator
/// object holding that family's coefficients.
[[nodiscard]] Json to_json(const ReducedTwoCochain& f);
[[nodiscard]] ReducedTwoCochain reduced_two_cochain_from_json(const Json& j);

[[nodiscard]] Json to_json(const CaseTag& tag);

/// dim is an integer when integral, a rational string otherwise, null when
/// unsupported.
[[nodiscard]] Json to_json(const CohomResult& r);

} // namespace cohom
