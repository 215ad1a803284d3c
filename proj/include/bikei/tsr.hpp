#pragma once

#include <cstdint>

#include "bikei/birack.hpp"

namespace bikei {

// Linear birack B(x, y) = (s x + t y, r x) on Z_n. Residues are stored
// reduced into [0, n).
struct TsrParams {
  std::int64_t n = 1;
  std::int64_t t = 0;
  std::int64_t s = 0;
  std::int64_t r = 0;
  bool operator==(const TsrParams&) const = default;
};

// Reduces t, s, r modulo n; throws InputError unless n >= 1, t and r are
// units and s^2 = (1 - t r) s.
TsrParams normalize_tsr(TsrParams p);
bool is_valid_tsr(const TsrParams& p);

// Residue k of Z_n is element index (k - 1) mod n, so that with 1-based
// external names the residues read 1, 2, ..., n with n = 0.
Element residue_to_element(std::int64_t residue, std::int64_t n);
std::int64_t element_to_residue(Element e, std::int64_t n);

FiniteBirack make_tsr(const TsrParams& p);

// t^2 = r^2 = 1 and (t + r) s = (1 - r) s = 0, evaluated on the parameters.
bool tsr_involutory_criterion(const TsrParams& p);

// Multiplicative order of t r + s mod n.
int tsr_rank(const TsrParams& p);

std::int64_t mod(std::int64_t a, std::int64_t n);

}  // namespace bikei
