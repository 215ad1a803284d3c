#include "bikei/tsr.hpp"

#include <numeric>
#include <string>

#include "bikei/errors.hpp"

namespace bikei {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

namespace {

std::string describe(const TsrParams& p) {
  return "(n,t,s,r)=(" + std::to_string(p.n) + "," + std::to_string(p.t) + "," +
         std::to_string(p.s) + "," + std::to_string(p.r) + ")";
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % n);
}

}  // namespace

TsrParams normalize_tsr(TsrParams p) {
  if (p.n < 1) throw InputError("modulus must be at least 1");
  p.t = mod(p.t, p.n);
  p.s = mod(p.s, p.n);
  p.r = mod(p.r, p.n);
  if (std::gcd(p.t, p.n) != 1) throw InputError("t is not a unit mod n: " + describe(p));
  if (std::gcd(p.r, p.n) != 1) throw InputError("r is not a unit mod n: " + describe(p));
  const std::int64_t lhs = mulmod(p.s, p.s, p.n);
  const std::int64_t rhs = mulmod(mod(1 - mulmod(p.t, p.r, p.n), p.n), p.s, p.n);
  if (lhs != rhs) throw InputError("s^2 != (1 - t r) s: " + describe(p));
  return p;
}

bool is_valid_tsr(const TsrParams& p) {
  try {
    normalize_tsr(p);
    return true;
  } catch (const InputError&) {
    return false;
  }
}

Element residue_to_element(std::int64_t residue, std::int64_t n) {
  return static_cast<Element>(mod(residue - 1, n));
}

std::int64_t element_to_residue(Element e, std::int64_t n) { return mod(e + 1, n); }

FiniteBirack make_tsr(const TsrParams& params) {
  const TsrParams p = normalize_tsr(params);
  if (p.n > 4096) throw ResourceError("tsr birack tables limited to n <= 4096");
  const int n = static_cast<int>(p.n);
  std::vector<Element> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (Element x = 0; x < n; ++x) {
    const std::int64_t rx = element_to_residue(x, p.n);
    for (Element y = 0; y < n; ++y) {
      const std::int64_t ry = element_to_residue(y, p.n);
      const std::size_t i = static_cast<std::size_t>(x) * n + y;
      first[i] = residue_to_element(mulmod(p.s, rx, p.n) + mulmod(p.t, ry, p.n), p.n);
      second[i] = residue_to_element(mulmod(p.r, rx, p.n), p.n);
    }
  }
  return FiniteBirack::from_tables(n, std::move(first), std::move(second));
}

bool tsr_involutory_criterion(const TsrParams& params) {
  const TsrParams p = normalize_tsr(params);
  const std::int64_t n = p.n;
  return mulmod(p.t, p.t, n) == mod(1, n) && mulmod(p.r, p.r, n) == mod(1, n) &&
         mulmod(p.t + p.r, p.s, n) == 0 && mulmod(1 - p.r + n, p.s, n) == 0;
}

int tsr_rank(const TsrParams& params) {
  const TsrParams p = normalize_tsr(params);
  const std::int64_t kink = mod(mulmod(p.t, p.r, p.n) + p.s, p.n);
  std::int64_t power = mod(kink, p.n);
  int order = 1;
  while (power != mod(1, p.n)) {
    power = mulmod(power, kink, p.n);
    ++order;
    if (order > p.n) throw std::logic_error("t r + s is not a unit");
  }
  return order;
}

}  // namespace bikei
