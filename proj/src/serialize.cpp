#include "bikei/serialize.hpp"

namespace bikei {

nlohmann::json to_json(const EnhancementPolynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exp, coeff] : p.terms()) terms.push_back({{"exp", exp}, {"coeff", coeff}});
  return {{"vars", p.variables()}, {"terms", terms}};
}

EnhancementPolynomial polynomial_from_json(const nlohmann::json& j) {
  EnhancementPolynomial p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms"))
    p.add(t.at("exp").get<std::vector<int>>(), t.at("coeff").get<std::uint64_t>());
  return p;
}

nlohmann::json to_json(const IntegralResult& r, const std::optional<EnhancementPolynomial>& poly) {
  nlohmann::json per = nlohmann::json::array();
  for (const auto& f : r.per_framing) per.push_back({{"w", f.framing}, {"count", f.count}});
  nlohmann::json out = {{"total", r.total}, {"per_framing", per}};
  if (poly) out["polynomial"] = to_json(*poly);
  return out;
}

IntegralResult integral_from_json(const nlohmann::json& j) {
  IntegralResult r;
  r.total = j.at("total").get<std::uint64_t>();
  for (const auto& f : j.at("per_framing"))
    r.per_framing.push_back({f.at("w").get<std::vector<int>>(), f.at("count").get<std::uint64_t>()});
  return r;
}

nlohmann::json to_json(const BirackMatrix& m) {
  return {{"n", m.n}, {"U", m.upper}, {"L", m.lower}};
}

}  // namespace bikei
