#pragma once

#include <json.hpp>
#include <optional>

#include "bikei/birack.hpp"
#include "bikei/counting.hpp"
#include "bikei/polynomial.hpp"

namespace bikei {

// {"vars": [...], "terms": [{"exp": [...], "coeff": c}, ...]}
nlohmann::json to_json(const EnhancementPolynomial& p);
EnhancementPolynomial polynomial_from_json(const nlohmann::json& j);

// {"total": t, "per_framing": [{"w": [...], "count": c}, ...],
//  "polynomial": {...}}; "polynomial" is omitted when absent.
nlohmann::json to_json(const IntegralResult& r, const std::optional<EnhancementPolynomial>& poly);
IntegralResult integral_from_json(const nlohmann::json& j);

// {"n": n, "U": [[...]], "L": [[...]]}
nlohmann::json to_json(const BirackMatrix& m);

}  // namespace bikei
