#pragma once

#include <nlohmann/json.hpp>

#include "qmoments/ratfunc.hpp"

namespace qmoments {

using Json = nlohmann::ordered_json;

/// Wire form of a polynomial: array of terms [[num, den], eq, et, ex]
/// with num/den decimal strings, terms in canonical ascending order.
/// This schema is the contract for golden files and CLI output.
Json to_json(const Poly& p);

/// {"num": [...], "den": [...]}
Json to_json(const RatFunc& f);

Poly poly_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);

} // namespace qmoments
