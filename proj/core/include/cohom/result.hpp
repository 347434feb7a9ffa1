#pragma once

#include "cohom/case_tag.hpp"
#include "cohom/density.hpp"
#include "cohom/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>

namespace cohom {

enum class Method { Closed, Summary, System, Oracle };

[[nodiscard]] const char* method_name(Method m);
/// Inverse of method_name; throws std::invalid_argument.
[[nodiscard]] Method parse_method(const std::string& name);

/// A dimension of H^2 produced by one method.
struct CohomResult {
    /// Empty when the method has no answer for this input (unsupported
    /// closed-form branch).
    std::optional<Rational> dim;
    Method method = Method::System;
    CaseTag tag;
    Weights weights;
    /// Oracle only.
    std::optional<unsigned> alpha_max;
    bool stable = true;
    /// System only: rank of the reduced system and its deficiency.
    std::optional<std::size_t> rank;
    std::optional<std::size_t> ell;
    std::string note;
};

} // namespace cohom
