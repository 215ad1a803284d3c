#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bikei/birack.hpp"
#include "bikei/tsr.hpp"

namespace bikei {

inline constexpr int kMaxEnumerationSize = 4;
inline constexpr std::int64_t kMaxTsrModulus = 64;

// Conjunctive predicates over raw tables B : X x X -> X x X.
struct SearchPredicate {
  bool require_bijective = false;
  bool require_yang_baxter = false;
  bool require_sideways = false;
  bool require_diagonal_bijectivity = false;
  bool require_involutory = false;
  bool require_column_involutions = false;
  bool require_rank_one = false;
  bool require_rack = false;

  bool any() const;
  SearchPredicate& operator|=(const SearchPredicate& other);

  // All four birack axioms.
  static SearchPredicate birack();
  // Comma-separated union of atoms (bijective, yb, sideways, diagonal, inv,
  // cols, rank1, rackcond) and presets, each of which includes the birack
  // axioms: birack, involutory, colinv, biquandle, bikei, rack, quandle, kei.
  static SearchPredicate parse(const std::string& spec);
  std::string describe() const;
};

bool satisfies(const FiniteBirack& b, const SearchPredicate& pred);

struct EnumerationResult {
  std::vector<FiniteBirack> structures;
  std::uint64_t nodes = 0;
};

// Every table on an n-element set satisfying pred, in lexicographic order
// of (B(0,0), B(0,1), ..., B(n-1,n-1)) with pairs ordered (first, second).
// Throws ResourceError for n > kMaxEnumerationSize or when the search tree
// exceeds node_budget.
EnumerationResult enumerate_biracks(int n, const SearchPredicate& pred,
                                    std::uint64_t node_budget = 1'000'000'000);

struct TsrCandidate {
  TsrParams params;
  bool involutory = false;
  int rank = 1;
};

// All valid (t, s, r) over Z_n, ordered by (t, s, r).
std::vector<TsrCandidate> search_tsr(std::int64_t n);

// Compares biracks with involutive columns u_x, l_x against involutory
// biracks of order n.
struct ConverseReport {
  int n = 0;
  std::size_t involutory = 0;
  std::size_t column_involutive = 0;
  // column-involutive biracks that are not involutory
  std::vector<FiniteBirack> witnesses;
  // every involutory birack has involutive columns
  bool inclusion_holds = true;
};

ConverseReport column_involution_converse(int n, std::uint64_t node_budget = 1'000'000'000);

}  // namespace bikei
