#include "bikei/birack.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bikei/errors.hpp"

namespace bikei {

namespace {

// Inverts a map on X x X given as n*n pairs; empty result if not bijective.
std::optional<std::vector<Pair>> invert_pair_map(int n, const std::vector<Pair>& forward) {
  std::vector<Pair> backward(forward.size());
  std::vector<bool> hit(forward.size(), false);
  for (std::size_t i = 0; i < forward.size(); ++i) {
    const std::size_t target = static_cast<std::size_t>(forward[i].first) * n + forward[i].second;
    if (hit[target]) return std::nullopt;
    hit[target] = true;
    backward[target] = {static_cast<Element>(i / n), static_cast<Element>(i % n)};
  }
  return backward;
}

std::string format_pair(Element a, Element b) {
  std::ostringstream os;
  os << "(" << a + 1 << "," << b + 1 << ")";
  return os.str();
}

}  // namespace

FiniteBirack FiniteBirack::from_tables(int n, std::vector<Element> first,
                                       std::vector<Element> second) {
  if (n < 1) throw InputError("birack size must be positive");
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  if (first.size() != cells || second.size() != cells)
    throw InputError("birack tables must have n*n entries");
  for (std::size_t i = 0; i < cells; ++i) {
    if (first[i] < 0 || first[i] >= n || second[i] < 0 || second[i] >= n)
      throw InputError("birack table entry out of range");
  }

  FiniteBirack b;
  b.n_ = n;
  b.first_ = std::move(first);
  b.second_ = std::move(second);

  std::vector<Pair> forward(cells);
  for (std::size_t i = 0; i < cells; ++i) forward[i] = {b.first_[i], b.second_[i]};
  if (auto backward = invert_pair_map(n, forward))
    b.inverse_ = PairTable{std::move(forward), std::move(*backward)};

  // S(B_1(x,y), x) = (B_2(x,y), y): S is well defined and total iff
  // (x,y) -> (B_1(x,y), x) is a bijection, and invertible iff
  // (x,y) -> (B_2(x,y), y) is one as well.
  std::vector<Pair> sideways(cells);
  std::vector<bool> hit_in(cells, false), hit_out(cells, false);
  bool ok = true;
  for (Element x = 0; x < n && ok; ++x) {
    for (Element y = 0; y < n; ++y) {
      const std::size_t in = static_cast<std::size_t>(b.first(x, y)) * n + x;
      const std::size_t out = static_cast<std::size_t>(b.second(x, y)) * n + y;
      if (hit_in[in] || hit_out[out]) {
        ok = false;
        break;
      }
      hit_in[in] = hit_out[out] = true;
      sideways[in] = {b.second(x, y), y};
    }
  }
  if (ok) {
    auto backward = invert_pair_map(n, sideways);
    b.sideways_ = PairTable{std::move(sideways), std::move(*backward)};

    Permutation inv_second(n), inv_first(n);
    for (Element x = 0; x < n; ++x) {
      const Pair p = b.sideways_->backward[static_cast<std::size_t>(x) * n + x];
      inv_first[x] = p.first;
      inv_second[x] = p.second;
    }
    if (is_permutation(inv_first) && is_permutation(inv_second)) {
      KinkData k;
      k.alpha = inverse(inv_second);
      k.pi = compose(inv_first, k.alpha);
      k.rank = static_cast<int>(exponent(k.pi));
      b.kink_ = std::move(k);
    }
  }
  return b;
}

Pair FiniteBirack::apply_inverse(Element x, Element y) const {
  if (!inverse_) throw std::logic_error("B is not invertible");
  return inverse_->backward[index(x, y)];
}

Pair FiniteBirack::sideways(Element u, Element v) const {
  if (!sideways_) throw std::logic_error("sideways map does not exist");
  return sideways_->forward[index(u, v)];
}

Pair FiniteBirack::sideways_inverse(Element u, Element v) const {
  if (!sideways_) throw std::logic_error("sideways map does not exist");
  return sideways_->backward[index(u, v)];
}

const Permutation& FiniteBirack::alpha() const {
  if (!kink_) throw std::logic_error("kink map does not exist");
  return kink_->alpha;
}

const Permutation& FiniteBirack::kink_map() const {
  if (!kink_) throw std::logic_error("kink map does not exist");
  return kink_->pi;
}

int FiniteBirack::rank() const {
  if (!kink_) throw std::logic_error("kink map does not exist");
  return kink_->rank;
}

Permutation FiniteBirack::upper_column(Element x) const {
  Permutation col(n_);
  for (Element y = 0; y < n_; ++y) col[y] = first(x, y);
  return col;
}

Permutation FiniteBirack::lower_column(Element x) const {
  Permutation col(n_);
  for (Element y = 0; y < n_; ++y) col[y] = second(y, x);
  return col;
}

FiniteBirack from_matrix(const BirackMatrix& m) {
  const int n = m.n;
  if (n < 1) throw InputError("matrix size must be positive");
  auto square = [n](const std::vector<std::vector<int>>& t) {
    return t.size() == static_cast<std::size_t>(n) &&
           std::all_of(t.begin(), t.end(), [n](const auto& row) {
             return row.size() == static_cast<std::size_t>(n);
           });
  };
  if (!square(m.upper) || !square(m.lower))
    throw InputError("matrix blocks must be " + std::to_string(n) + "x" + std::to_string(n));

  std::vector<Element> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const int u = m.upper[i][j], l = m.lower[i][j];
      if (u < 1 || u > n || l < 1 || l > n)
        throw InputError("matrix entry out of range at row " + std::to_string(i + 1) +
                         ", column " + std::to_string(j + 1));
      first[static_cast<std::size_t>(j) * n + i] = u - 1;
      second[static_cast<std::size_t>(i) * n + j] = l - 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    Permutation ucol(n), lcol(n);
    for (int i = 0; i < n; ++i) {
      ucol[i] = m.upper[i][j] - 1;
      lcol[i] = m.lower[i][j] - 1;
    }
    if (!is_permutation(ucol))
      throw InputError("column " + std::to_string(j + 1) + " of U is not a permutation");
    if (!is_permutation(lcol))
      throw InputError("column " + std::to_string(j + 1) + " of L is not a permutation");
  }
  return FiniteBirack::from_tables(n, std::move(first), std::move(second));
}

BirackMatrix to_matrix(const FiniteBirack& b) {
  const int n = b.size();
  BirackMatrix m;
  m.n = n;
  m.upper.assign(n, std::vector<int>(n));
  m.lower.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m.upper[i][j] = b.first(j, i) + 1;
      m.lower[i][j] = b.second(i, j) + 1;
    }
  }
  return m;
}

FiniteBirack make_constant_action(const Permutation& sigma, const Permutation& rho) {
  if (sigma.empty() || sigma.size() != rho.size())
    throw InputError("constant action maps must be non-empty and of equal size");
  if (!is_permutation(sigma) || !is_permutation(rho))
    throw InputError("constant action maps must be bijections");
  if (compose(sigma, rho) != compose(rho, sigma))
    throw InputError("constant action maps do not commute; Yang-Baxter fails");
  const int n = static_cast<int>(sigma.size());
  std::vector<Element> first(static_cast<std::size_t>(n) * n), second(first.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      first[static_cast<std::size_t>(x) * n + y] = sigma[y];
      second[static_cast<std::size_t>(x) * n + y] = rho[x];
    }
  }
  return FiniteBirack::from_tables(n, std::move(first), std::move(second));
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::pair_bijective: return "B bijective";
    case Axiom::sideways_unique: return "sideways map exists and is unique";
    case Axiom::sideways_invertible: return "sideways map invertible";
    case Axiom::diagonal_sideways_first: return "S_1 diagonal bijective";
    case Axiom::diagonal_sideways_second: return "S_2 diagonal bijective";
    case Axiom::diagonal_inverse_first: return "S^-1_1 diagonal bijective";
    case Axiom::diagonal_inverse_second: return "S^-1_2 diagonal bijective";
    case Axiom::yang_baxter: return "Yang-Baxter";
  }
  return "?";
}

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(),
                     [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& AxiomReport::operator[](Axiom a) const {
  for (const auto& r : results)
    if (r.axiom == a) return r;
  throw std::out_of_range("axiom not in report");
}

namespace {

AxiomResult check_pair_map(Axiom axiom, int n, auto&& map_fn) {
  AxiomResult r;
  r.axiom = axiom;
  std::vector<int> hits(static_cast<std::size_t>(n) * n, -1);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Pair p = map_fn(x, y);
      const std::size_t t = static_cast<std::size_t>(p.first) * n + p.second;
      if (hits[t] >= 0) {
        r.passed = false;
        r.witness = {p.first, p.second};
        r.detail = "pair " + format_pair(p.first, p.second) + " is hit by " +
                   format_pair(hits[t] / n, hits[t] % n) + " and " + format_pair(x, y);
        return r;
      }
      hits[t] = x * n + y;
    }
  }
  return r;
}

AxiomResult check_diagonal(Axiom axiom, int n, auto&& diag_fn) {
  AxiomResult r;
  r.axiom = axiom;
  std::vector<Element> seen(n, -1);
  for (Element x = 0; x < n; ++x) {
    const Element v = diag_fn(x);
    if (seen[v] >= 0) {
      r.passed = false;
      r.witness = {seen[v], x};
      r.detail = "elements " + std::to_string(seen[v] + 1) + " and " + std::to_string(x + 1) +
                 " both map to " + std::to_string(v + 1);
      return r;
    }
    seen[v] = x;
  }
  return r;
}

AxiomResult skipped(Axiom axiom) {
  AxiomResult r;
  r.axiom = axiom;
  r.passed = false;
  r.evaluated = false;
  r.detail = "not evaluated: sideways map unavailable";
  return r;
}

}  // namespace

AxiomReport verify_axioms(const FiniteBirack& b) {
  const int n = b.size();
  AxiomReport report;
  report.results.push_back(
      check_pair_map(Axiom::pair_bijective, n, [&](Element x, Element y) { return b.apply(x, y); }));
  report.results.push_back(check_pair_map(Axiom::sideways_unique, n, [&](Element x, Element y) {
    return Pair{b.first(x, y), x};
  }));
  report.results.push_back(check_pair_map(Axiom::sideways_invertible, n, [&](Element x, Element y) {
    return Pair{b.second(x, y), y};
  }));

  if (b.has_sideways()) {
    report.results.push_back(check_diagonal(Axiom::diagonal_sideways_first, n,
                                            [&](Element x) { return b.sideways(x, x).first; }));
    report.results.push_back(check_diagonal(Axiom::diagonal_sideways_second, n,
                                            [&](Element x) { return b.sideways(x, x).second; }));
    report.results.push_back(check_diagonal(Axiom::diagonal_inverse_first, n, [&](Element x) {
      return b.sideways_inverse(x, x).first;
    }));
    report.results.push_back(check_diagonal(Axiom::diagonal_inverse_second, n, [&](Element x) {
      return b.sideways_inverse(x, x).second;
    }));
  } else {
    for (Axiom a : {Axiom::diagonal_sideways_first, Axiom::diagonal_sideways_second,
                    Axiom::diagonal_inverse_first, Axiom::diagonal_inverse_second})
      report.results.push_back(skipped(a));
  }

  AxiomResult yb;
  yb.axiom = Axiom::yang_baxter;
  for (Element x = 0; x < n && yb.passed; ++x) {
    for (Element y = 0; y < n && yb.passed; ++y) {
      for (Element z = 0; z < n; ++z) {
        // (B x Id)(Id x B)(B x Id)
        const Pair a = b.apply(x, y);
        const Pair c = b.apply(a.second, z);
        const Pair d = b.apply(a.first, c.first);
        // (Id x B)(B x Id)(Id x B)
        const Pair p = b.apply(y, z);
        const Pair q = b.apply(x, p.first);
        const Pair r = b.apply(q.second, p.second);
        if (d.first != q.first || d.second != r.first || c.second != r.second) {
          yb.passed = false;
          yb.witness = {x, y, z};
          std::ostringstream os;
          os << "triple (" << x + 1 << "," << y + 1 << "," << z + 1 << ") maps to (" << d.first + 1
             << "," << d.second + 1 << "," << c.second + 1 << ") vs (" << q.first + 1 << ","
             << r.first + 1 << "," << r.second + 1 << ")";
          yb.detail = os.str();
          break;
        }
      }
    }
  }
  report.results.push_back(std::move(yb));
  return report;
}

bool is_involutory(const FiniteBirack& b) {
  if (!b.invertible() || !b.has_sideways()) return false;
  const int n = b.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      // tau B (x,y) = (v,u), applied twice must return (x,y)
      const Pair uv = b.apply(x, y);
      const Pair back = b.apply(uv.second, uv.first);
      if (back.second != x || back.first != y) return false;
      if (b.sideways(x, y) != b.apply_inverse(x, y)) return false;
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!is_involution(b.upper_column(x)) || !is_involution(b.lower_column(x)))
      throw std::logic_error("involutory birack with a non-involutive column");
  }
  return true;
}

ClassificationFlags classify(const FiniteBirack& b) {
  ClassificationFlags f;
  f.is_birack = verify_axioms(b).all_passed();
  if (!f.is_birack) return f;
  f.is_involutory = is_involutory(b);
  f.is_rack = true;
  for (Element x = 0; x < b.size() && f.is_rack; ++x)
    for (Element y = 0; y < b.size(); ++y)
      if (b.second(x, y) != x) {
        f.is_rack = false;
        break;
      }
  f.is_biquandle = b.rank() == 1;
  f.is_quandle = f.is_rack && f.is_biquandle;
  f.is_bikei = f.is_involutory && f.is_biquandle;
  f.is_kei = f.is_bikei && f.is_quandle;
  return f;
}

KinkMapAndRank kink_map_and_rank(const FiniteBirack& b) {
  if (!b.has_kink_map()) throw InputError("kink map undefined: birack axioms fail");
  return {b.kink_map(), b.rank()};
}

std::vector<Pair> sideways_map(const FiniteBirack& b) {
  if (!b.has_sideways()) throw InputError("sideways map does not exist for this table");
  const int n = b.size();
  std::vector<Pair> table(static_cast<std::size_t>(n) * n);
  for (Element u = 0; u < n; ++u)
    for (Element v = 0; v < n; ++v) table[static_cast<std::size_t>(u) * n + v] = b.sideways(u, v);
  return table;
}

ElementSet subbirack_closure(const FiniteBirack& b, const ElementSet& seed) {
  const int n = b.size();
  std::vector<bool> in(n, false);
  ElementSet members;
  for (Element x : seed) {
    if (x < 0 || x >= n) throw InputError("seed element out of range");
    if (!in[x]) {
      in[x] = true;
      members.push_back(x);
    }
  }
  // members grows while we sweep; every new pair involving a new element is
  // visited because the outer index runs to the current end.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (const Pair p : {b.apply(members[i], members[j]), b.apply(members[j], members[i])}) {
        for (Element v : {p.first, p.second}) {
          if (!in[v]) {
            in[v] = true;
            members.push_back(v);
          }
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace bikei
