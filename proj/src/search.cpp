#include "bikei/search.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "bikei/errors.hpp"

namespace bikei {

bool SearchPredicate::any() const {
  return require_bijective || require_yang_baxter || require_sideways ||
         require_diagonal_bijectivity || require_involutory || require_column_involutions ||
         require_rank_one || require_rack;
}

SearchPredicate& SearchPredicate::operator|=(const SearchPredicate& o) {
  require_bijective |= o.require_bijective;
  require_yang_baxter |= o.require_yang_baxter;
  require_sideways |= o.require_sideways;
  require_diagonal_bijectivity |= o.require_diagonal_bijectivity;
  require_involutory |= o.require_involutory;
  require_column_involutions |= o.require_column_involutions;
  require_rank_one |= o.require_rank_one;
  require_rack |= o.require_rack;
  return *this;
}

SearchPredicate SearchPredicate::birack() {
  SearchPredicate p;
  p.require_bijective = p.require_yang_baxter = p.require_sideways =
      p.require_diagonal_bijectivity = true;
  return p;
}

SearchPredicate SearchPredicate::parse(const std::string& spec) {
  SearchPredicate out;
  std::string cleaned = spec;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string word;
  while (in >> word) {
    SearchPredicate p;
    if (word == "birack") {
      p = birack();
    } else if (word == "involutory") {
      p = birack();
      p.require_involutory = true;
    } else if (word == "colinv") {
      p = birack();
      p.require_column_involutions = true;
    } else if (word == "biquandle") {
      p = birack();
      p.require_rank_one = true;
    } else if (word == "bikei") {
      p = birack();
      p.require_involutory = p.require_rank_one = true;
    } else if (word == "rack") {
      p = birack();
      p.require_rack = true;
    } else if (word == "quandle") {
      p = birack();
      p.require_rack = p.require_rank_one = true;
    } else if (word == "kei") {
      p = birack();
      p.require_rack = p.require_rank_one = p.require_involutory = true;
    } else if (word == "bijective") {
      p.require_bijective = true;
    } else if (word == "yb") {
      p.require_yang_baxter = true;
    } else if (word == "sideways") {
      p.require_sideways = true;
    } else if (word == "diagonal") {
      p.require_diagonal_bijectivity = true;
    } else if (word == "inv") {
      p.require_involutory = true;
    } else if (word == "cols") {
      p.require_column_involutions = true;
    } else if (word == "rank1") {
      p.require_rank_one = true;
    } else if (word == "rackcond") {
      p.require_rack = true;
    } else {
      throw InputError("unknown search predicate '" + word + "'");
    }
    out |= p;
  }
  if (!out.any()) throw InputError("at least one search predicate is required");
  return out;
}

std::string SearchPredicate::describe() const {
  std::vector<std::string> parts;
  if (require_bijective) parts.push_back("bijective");
  if (require_yang_baxter) parts.push_back("yb");
  if (require_sideways) parts.push_back("sideways");
  if (require_diagonal_bijectivity) parts.push_back("diagonal");
  if (require_involutory) parts.push_back("inv");
  if (require_column_involutions) parts.push_back("cols");
  if (require_rank_one) parts.push_back("rank1");
  if (require_rack) parts.push_back("rackcond");
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? "," : "") + parts[i];
  return out;
}

namespace {

bool involutory_condition(const FiniteBirack& b) {
  if (!b.invertible() || !b.has_sideways()) return false;
  const int n = b.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      const Pair uv = b.apply(x, y);
      if (b.apply(uv.second, uv.first) != Pair{y, x}) return false;
      if (b.sideways(x, y) != b.apply_inverse(x, y)) return false;
    }
  return true;
}

bool columns_involutive(const FiniteBirack& b) {
  for (Element x = 0; x < b.size(); ++x)
    if (!is_involution(b.upper_column(x)) || !is_involution(b.lower_column(x))) return false;
  return true;
}

}  // namespace

bool satisfies(const FiniteBirack& b, const SearchPredicate& pred) {
  if (pred.require_bijective && !b.invertible()) return false;
  if (pred.require_sideways && !b.has_sideways()) return false;
  if (pred.require_yang_baxter || pred.require_diagonal_bijectivity) {
    const AxiomReport report = verify_axioms(b);
    if (pred.require_yang_baxter && !report[Axiom::yang_baxter].passed) return false;
    if (pred.require_diagonal_bijectivity) {
      for (Axiom a : {Axiom::diagonal_sideways_first, Axiom::diagonal_sideways_second,
                      Axiom::diagonal_inverse_first, Axiom::diagonal_inverse_second})
        if (!report[a].passed) return false;
    }
  }
  if (pred.require_involutory && !involutory_condition(b)) return false;
  if (pred.require_column_involutions && !columns_involutive(b)) return false;
  if (pred.require_rank_one && !(b.has_kink_map() && b.rank() == 1)) return false;
  if (pred.require_rack) {
    for (Element x = 0; x < b.size(); ++x)
      for (Element y = 0; y < b.size(); ++y)
        if (b.second(x, y) != x) return false;
  }
  return true;
}

namespace {

// Cell-by-cell search; cell (x, y) holds B(x, y). Filling x-major fills the
// map u_x (a column of U) before moving on.
class TableSearch {
 public:
  TableSearch(int n, const SearchPredicate& pred, std::uint64_t budget)
      : n_(n), pred_(pred), budget_(budget), first_(n * n, -1), second_(n * n, -1),
        pair_used_(n * n, false), upper_used_(n * n, false), lower_used_(n * n, false) {}

  EnumerationResult run() {
    descend(0);
    return std::move(result_);
  }

 private:
  int cell(Element x, Element y) const { return x * n_ + y; }
  bool known(Element x, Element y) const { return first_[cell(x, y)] >= 0; }

  // Local conditions that only need assigned cells.
  bool partial_ok() const {
    for (Element x = 0; x < n_; ++x) {
      for (Element y = 0; y < n_; ++y) {
        if (!known(x, y)) continue;
        const Element a = first_[cell(x, y)], b = second_[cell(x, y)];
        if (pred_.require_column_involutions) {
          if (known(x, a) && first_[cell(x, a)] != y) return false;
          if (known(b, y) && second_[cell(b, y)] != x) return false;
        }
        if (pred_.require_involutory) {
          if (known(b, a) && (first_[cell(b, a)] != y || second_[cell(b, a)] != x)) return false;
          // S = B^{-1} means B(B_2(x,y), y) = (B_1(x,y), x)
          if (known(b, y) && (first_[cell(b, y)] != a || second_[cell(b, y)] != x)) return false;
        }
      }
    }
    if (pred_.require_yang_baxter) {
      auto at = [&](Element x, Element y, Pair& out) {
        if (!known(x, y)) return false;
        out = {first_[cell(x, y)], second_[cell(x, y)]};
        return true;
      };
      for (Element x = 0; x < n_; ++x)
        for (Element y = 0; y < n_; ++y) {
          Pair a;
          if (!at(x, y, a)) continue;
          for (Element z = 0; z < n_; ++z) {
            Pair c, d, p, q, r;
            if (!at(a.second, z, c) || !at(a.first, c.first, d)) continue;
            if (!at(y, z, p) || !at(x, p.first, q) || !at(q.second, p.second, r)) continue;
            if (d.first != q.first || d.second != r.first || c.second != r.second) return false;
          }
        }
    }
    return true;
  }

  void descend(int idx) {
    if (++result_.nodes > budget_)
      throw ResourceError("table search exceeded node budget " + std::to_string(budget_));
    if (idx == n_ * n_) {
      FiniteBirack b = FiniteBirack::from_tables(n_, first_, second_);
      if (satisfies(b, pred_)) result_.structures.push_back(std::move(b));
      return;
    }
    const Element x = idx / n_, y = idx % n_;
    const bool injective_cols = pred_.require_sideways || pred_.require_column_involutions;
    for (int v = 0; v < n_ * n_; ++v) {
      const Element a = v / n_, b = v % n_;
      if (pred_.require_rack && b != x) continue;
      if ((pred_.require_bijective || pred_.require_involutory) && pair_used_[v]) continue;
      const int up = x * n_ + a, low = y * n_ + b;
      if (injective_cols && (upper_used_[up] || lower_used_[low])) continue;
      first_[idx] = a;
      second_[idx] = b;
      pair_used_[v] = upper_used_[up] = lower_used_[low] = true;
      if (partial_ok()) descend(idx + 1);
      pair_used_[v] = upper_used_[up] = lower_used_[low] = false;
      first_[idx] = second_[idx] = -1;
    }
  }

  int n_;
  SearchPredicate pred_;
  std::uint64_t budget_;
  std::vector<Element> first_, second_;
  std::vector<bool> pair_used_, upper_used_, lower_used_;
  EnumerationResult result_;
};

}  // namespace

EnumerationResult enumerate_biracks(int n, const SearchPredicate& pred, std::uint64_t node_budget) {
  if (n < 1) throw InputError("enumeration size must be positive");
  if (n > kMaxEnumerationSize)
    throw ResourceError("full enumeration limited to n <= " +
                        std::to_string(kMaxEnumerationSize));
  if (!pred.any()) throw InputError("at least one search predicate is required");
  return TableSearch(n, pred, node_budget).run();
}

std::vector<TsrCandidate> search_tsr(std::int64_t n) {
  if (n < 1) throw InputError("modulus must be positive");
  if (n > kMaxTsrModulus)
    throw ResourceError("tsr search limited to n <= " + std::to_string(kMaxTsrModulus));
  std::vector<TsrCandidate> out;
  for (std::int64_t t = 0; t < n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    for (std::int64_t s = 0; s < n; ++s) {
      for (std::int64_t r = 0; r < n; ++r) {
        const TsrParams p{n, t, s, r};
        if (!is_valid_tsr(p)) continue;
        out.push_back({p, tsr_involutory_criterion(p), tsr_rank(p)});
      }
    }
  }
  return out;
}

ConverseReport column_involution_converse(int n, std::uint64_t node_budget) {
  SearchPredicate inv = SearchPredicate::birack();
  inv.require_involutory = true;
  SearchPredicate cols = SearchPredicate::birack();
  cols.require_column_involutions = true;
  const auto involutory = enumerate_biracks(n, inv, node_budget).structures;
  const auto column = enumerate_biracks(n, cols, node_budget).structures;

  ConverseReport report;
  report.n = n;
  report.involutory = involutory.size();
  report.column_involutive = column.size();
  for (const auto& b : involutory)
    if (std::find(column.begin(), column.end(), b) == column.end()) report.inclusion_holds = false;
  for (const auto& b : column)
    if (std::find(involutory.begin(), involutory.end(), b) == involutory.end())
      report.witnesses.push_back(b);
  return report;
}

}  // namespace bikei
