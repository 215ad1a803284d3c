#include "bikei/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace bikei {

void EnhancementPolynomial::add(const Exponent& exp, std::uint64_t coeff) {
  if (exp.size() != variables_.size())
    throw std::invalid_argument("exponent length does not match variable count");
  if (coeff == 0) return;
  auto& slot = terms_[exp];
  if (__builtin_add_overflow(slot, coeff, &slot))
    throw std::overflow_error("polynomial coefficient overflow");
}

EnhancementPolynomial& EnhancementPolynomial::operator+=(const EnhancementPolynomial& other) {
  if (other.variables_ != variables_) throw std::invalid_argument("variable mismatch");
  for (const auto& [exp, coeff] : other.terms_) add(exp, coeff);
  return *this;
}

std::uint64_t EnhancementPolynomial::evaluate_at_one() const {
  std::uint64_t total = 0;
  for (const auto& term : terms_) total += term.second;
  return total;
}

std::string EnhancementPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [exp, coeff] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (mono.tellp() > 0) mono << "*";
      mono << variables_[i];
      if (exp[i] != 1) mono << "^" << exp[i];
    }
    const std::string m = mono.str();
    if (m.empty() || coeff != 1) os << coeff;
    os << m;
  }
  return os.str();
}

}  // namespace bikei
