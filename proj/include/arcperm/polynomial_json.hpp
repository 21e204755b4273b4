#pragma once

// JSON form of a polynomial: a list of {"coeff": "<decimal>", "monomial": {var: exp}}
// in canonical term order.

#include "arcperm/polynomial.hpp"

#include <json.hpp>

namespace arcperm {

nlohmann::json to_json(const Polynomial& p);
/// Throws std::invalid_argument on malformed input.
Polynomial polynomial_from_json(const nlohmann::json& j);

} // namespace arcperm
