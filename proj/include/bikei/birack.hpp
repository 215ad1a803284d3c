#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bikei/permutation.hpp"

namespace bikei {

struct Pair {
  Element first = 0;
  Element second = 0;
  auto operator<=>(const Pair&) const = default;
};

// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

// The [U|L] matrix encoding with 1-based entries:
//   upper[i][j] = k  <=>  x_k = B_1(x_j, x_i)
//   lower[i][j] = h  <=>  x_h = B_2(x_i, x_j)
// so the columns of upper are the maps u_x and the columns of lower the maps l_x.
struct BirackMatrix {
  int n = 0;
  std::vector<std::vector<int>> upper;
  std::vector<std::vector<int>> lower;
  bool operator==(const BirackMatrix&) const = default;
};

// A map B : X x X -> X x X on X = {0, ..., n-1} stored as two n*n tables,
// together with whatever derived maps exist for it. Values are immutable
// once built; derived maps are computed eagerly at construction.
//
// A FiniteBirack need not satisfy the birack axioms (see verify_axioms);
// accessors for derived maps throw std::logic_error when the map does not
// exist for this table.
class FiniteBirack {
 public:
  // Raw tables, first[x*n + y] = B_1(x, y), second[x*n + y] = B_2(x, y).
  // Only the entry range is checked.
  static FiniteBirack from_tables(int n, std::vector<Element> first,
                                  std::vector<Element> second);

  int size() const noexcept { return n_; }

  Element first(Element x, Element y) const { return first_[index(x, y)]; }
  Element second(Element x, Element y) const { return second_[index(x, y)]; }
  Pair apply(Element x, Element y) const { return {first(x, y), second(x, y)}; }

  const std::vector<Element>& first_table() const noexcept { return first_; }
  const std::vector<Element>& second_table() const noexcept { return second_; }

  // B is a bijection of X x X.
  bool invertible() const noexcept { return inverse_.has_value(); }
  Pair apply_inverse(Element x, Element y) const;

  // S exists, is unique and is invertible: both (x,y) -> (B_1(x,y), x) and
  // (x,y) -> (B_2(x,y), y) are bijections.
  bool has_sideways() const noexcept { return sideways_.has_value(); }
  Pair sideways(Element u, Element v) const;
  Pair sideways_inverse(Element u, Element v) const;

  // alpha and the kink map pi exist when x -> S^{-1}_2(x,x) and
  // x -> S^{-1}_1(x,x) are bijections.
  bool has_kink_map() const noexcept { return kink_.has_value(); }
  const Permutation& alpha() const;
  const Permutation& kink_map() const;
  // Exponent of the kink map.
  int rank() const;

  // u_x(y) = B_1(x, y)
  Permutation upper_column(Element x) const;
  // l_x(y) = B_2(y, x)
  Permutation lower_column(Element x) const;

  bool operator==(const FiniteBirack& other) const {
    return n_ == other.n_ && first_ == other.first_ && second_ == other.second_;
  }

 private:
  FiniteBirack() = default;
  std::size_t index(Element x, Element y) const {
    return static_cast<std::size_t>(x) * n_ + y;
  }

  struct PairTable {
    std::vector<Pair> forward;
    std::vector<Pair> backward;
  };
  struct KinkData {
    Permutation alpha;
    Permutation pi;
    int rank = 1;
  };

  int n_ = 0;
  std::vector<Element> first_;
  std::vector<Element> second_;
  std::optional<PairTable> inverse_;   // backward = B^{-1}
  std::optional<PairTable> sideways_;  // forward = S, backward = S^{-1}
  std::optional<KinkData> kink_;
};

// Reads the [U|L] convention; rejects out-of-range entries and any column of
// U or L that is not a permutation (InputError).
FiniteBirack from_matrix(const BirackMatrix& m);
BirackMatrix to_matrix(const FiniteBirack& b);

// B(x, y) = (sigma(y), rho(x)); sigma and rho must commute (InputError).
FiniteBirack make_constant_action(const Permutation& sigma, const Permutation& rho);

enum class Axiom {
  pair_bijective,
  sideways_unique,
  sideways_invertible,
  diagonal_sideways_first,
  diagonal_sideways_second,
  diagonal_inverse_first,
  diagonal_inverse_second,
  yang_baxter,
};

const char* axiom_name(Axiom a);

struct AxiomResult {
  Axiom axiom = Axiom::pair_bijective;
  bool passed = true;
  bool evaluated = true;  // false when a prerequisite check failed
  // 0-based pair or triple exhibiting the failure.
  std::vector<Element> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomResult> results;
  bool all_passed() const;
  const AxiomResult& operator[](Axiom a) const;
};

AxiomReport verify_axioms(const FiniteBirack& b);

// (tau o B)^2 = Id and S = B^{-1}. False for tables without S or B^{-1}.
bool is_involutory(const FiniteBirack& b);

struct ClassificationFlags {
  bool is_birack = false;
  bool is_involutory = false;
  bool is_rack = false;
  bool is_quandle = false;
  bool is_biquandle = false;
  bool is_bikei = false;
  bool is_kei = false;
  bool operator==(const ClassificationFlags&) const = default;
};

ClassificationFlags classify(const FiniteBirack& b);

struct KinkMapAndRank {
  Permutation pi;
  int rank = 1;
};
KinkMapAndRank kink_map_and_rank(const FiniteBirack& b);

// Full table of S, indexed u*n + v.
std::vector<Pair> sideways_map(const FiniteBirack& b);

// Smallest superset of seed closed under B_1 and B_2.
ElementSet subbirack_closure(const FiniteBirack& b, const ElementSet& seed);

}  // namespace bikei
