#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bikei {

// Formal sum of monomials with positive integer coefficients, e.g.
// 3u + 6u^3 or 9 q1^0 q2^0. Zero coefficients are never stored.
class EnhancementPolynomial {
 public:
  using Exponent = std::vector<int>;

  EnhancementPolynomial() = default;
  explicit EnhancementPolynomial(std::vector<std::string> variables)
      : variables_(std::move(variables)) {}

  void add(const Exponent& exp, std::uint64_t coeff);
  EnhancementPolynomial& operator+=(const EnhancementPolynomial& other);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::map<Exponent, std::uint64_t>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  // Value with every variable set to 1.
  std::uint64_t evaluate_at_one() const;

  // "3u + 6u^3"; "0" when empty.
  std::string to_string() const;

  bool operator==(const EnhancementPolynomial&) const = default;

 private:
  std::vector<std::string> variables_;
  std::map<Exponent, std::uint64_t> terms_;
};

}  // namespace bikei
