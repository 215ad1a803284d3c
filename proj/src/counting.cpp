#include "bikei/counting.hpp"

#include <algorithm>
#include <map>

#include "bikei/column_group.hpp"
#include "bikei/errors.hpp"
#include "bikei/modular.hpp"

namespace bikei {

namespace {

class LabelingSearch {
 public:
  LabelingSearch(const Presentation& p, const FiniteBirack& x) : p_(p), x_(x) {
    const int g = p.generator_count;
    touching_.resize(g);
    for (int r = 0; r < static_cast<int>(p.relations.size()); ++r) {
      const Relation& rel = p.relations[r];
      for (int v : {rel.in_first, rel.in_second, rel.out_first, rel.out_second})
        if (touching_[v].empty() || touching_[v].back() != r) touching_[v].push_back(r);
    }
    plan_order();
  }

  std::uint64_t node_bound() const {
    return checked_pow(static_cast<std::uint64_t>(x_.size()), branch_.size());
  }
  const std::vector<int>& free_generators() const { return free_; }

  // Enumerates assignments of every generator except free ones when
  // skip_free is set (those stay -1 and are multiplied in by the caller).
  void run(bool skip_free, const std::function<void(const Labeling&)>& visit) {
    value_.assign(p_.generator_count, -1);
    trail_.clear();
    order_ = branch_;
    if (!skip_free) order_.insert(order_.end(), free_.begin(), free_.end());
    visit_ = &visit;
    descend(0);
  }

 private:
  // How a relation B(i,j) = (k,l) determines its remaining labels from the
  // known ones: (k,l) from (i,j) by B, (i,j) from (k,l) by B^{-1}, (l,j)
  // from (k,i) by S, (k,i) from (l,j) by S^{-1}, and on a kink B(i,h) = (k,h)
  // the loop label h = alpha(i).
  enum class Rule { none, forward, backward, sideways, sideways_inverse, kink };

  template <typename Known>
  Rule rule_for(const Relation& rel, Known&& known) const {
    if (known(rel.in_first) && known(rel.in_second)) return Rule::forward;
    if (x_.invertible() && known(rel.out_first) && known(rel.out_second)) return Rule::backward;
    if (x_.has_sideways() && known(rel.out_first) && known(rel.in_first)) return Rule::sideways;
    if (x_.has_sideways() && known(rel.out_second) && known(rel.in_second))
      return Rule::sideways_inverse;
    if (x_.has_kink_map() && rel.in_second == rel.out_second && known(rel.in_first))
      return Rule::kink;
    return Rule::none;
  }

  // Static order: prefer generators that complete the inputs (or outputs)
  // of some relation so that propagation fires immediately.
  void plan_order() {
    const int g = p_.generator_count;
    std::vector<bool> known(g, false);
    auto propagate = [&](auto&& self, int v) -> void {
      known[v] = true;
      for (int r : touching_[v]) {
        const Relation& rel = p_.relations[r];
        if (rule_for(rel, [&](int u) { return bool(known[u]); }) == Rule::none) continue;
        for (int u : {rel.in_first, rel.in_second, rel.out_first, rel.out_second})
          if (!known[u]) self(self, u);
      }
    };
    for (int v = 0; v < g; ++v)
      if (touching_[v].empty()) {
        free_.push_back(v);
        known[v] = true;
      }
    while (true) {
      int pick = -1;
      for (const Relation& rel : p_.relations) {
        const int a = rel.in_first, b = rel.in_second;
        if (known[a] != known[b]) {
          pick = known[a] ? b : a;
          break;
        }
      }
      if (pick < 0)
        for (const Relation& rel : p_.relations)
          if (!known[rel.in_first]) {
            pick = rel.in_first;
            break;
          }
      if (pick < 0)
        for (int v = 0; v < g; ++v)
          if (!known[v]) {
            pick = v;
            break;
          }
      if (pick < 0) break;
      branch_.push_back(pick);
      propagate(propagate, pick);
    }
  }

  bool assign(int v, Element e, std::vector<int>& queue) {
    if (value_[v] >= 0) return value_[v] == e;
    value_[v] = e;
    trail_.push_back(v);
    queue.insert(queue.end(), touching_[v].begin(), touching_[v].end());
    return true;
  }

  bool propagate(std::vector<int>& queue) {
    while (!queue.empty()) {
      const Relation& rel = p_.relations[queue.back()];
      queue.pop_back();
      const Element i = value_[rel.in_first], j = value_[rel.in_second];
      const Element k = value_[rel.out_first], l = value_[rel.out_second];
      Pair ins{i, j}, outs{k, l};
      switch (rule_for(rel, [&](int u) { return value_[u] >= 0; })) {
        case Rule::none:
          continue;
        case Rule::forward:
          outs = x_.apply(i, j);
          break;
        case Rule::backward:
          ins = x_.apply_inverse(k, l);
          break;
        case Rule::sideways: {
          const Pair p = x_.sideways(k, i);  // S(k, i) = (l, j)
          outs.second = p.first;
          ins.second = p.second;
          break;
        }
        case Rule::sideways_inverse: {
          const Pair p = x_.sideways_inverse(l, j);  // S^{-1}(l, j) = (k, i)
          outs.first = p.first;
          ins.first = p.second;
          break;
        }
        case Rule::kink:
          // B(i, h) = (k, h) forces h = alpha(i); the relation is requeued
          if (!assign(rel.in_second, x_.alpha()[i], queue)) return false;
          continue;
      }
      if (!assign(rel.in_first, ins.first, queue) || !assign(rel.in_second, ins.second, queue) ||
          !assign(rel.out_first, outs.first, queue) || !assign(rel.out_second, outs.second, queue))
        return false;
    }
    return true;
  }

  bool all_relations_hold() const {
    return std::all_of(p_.relations.begin(), p_.relations.end(), [&](const Relation& rel) {
      return x_.apply(value_[rel.in_first], value_[rel.in_second]) ==
             Pair{value_[rel.out_first], value_[rel.out_second]};
    });
  }

  void descend(std::size_t depth) {
    while (depth < order_.size() && value_[order_[depth]] >= 0) ++depth;
    if (depth == order_.size()) {
      if (all_relations_hold()) (*visit_)(value_);
      return;
    }
    const int v = order_[depth];
    std::vector<int> queue;
    for (Element e = 0; e < x_.size(); ++e) {
      const std::size_t mark = trail_.size();
      queue.clear();
      if (assign(v, e, queue) && propagate(queue)) descend(depth + 1);
      while (trail_.size() > mark) {
        value_[trail_.back()] = -1;
        trail_.pop_back();
      }
    }
  }

  const Presentation& p_;
  const FiniteBirack& x_;
  std::vector<std::vector<int>> touching_;
  std::vector<int> branch_;
  std::vector<int> free_;
  std::vector<int> order_;
  Labeling value_;
  std::vector<int> trail_;
  const std::function<void(const Labeling&)>* visit_ = nullptr;
};

void check_budget(const LabelingSearch& search, std::uint64_t budget, int free_count, int n,
                  bool include_free) {
  std::uint64_t bound = 0;
  try {
    bound = search.node_bound();
    if (include_free) bound = checked_mul(bound, checked_pow(n, free_count));
  } catch (const ResourceError&) {
    bound = UINT64_MAX;
  }
  if (bound > budget)
    throw ResourceError("labeling search needs up to " +
                        (bound == UINT64_MAX ? std::string("2^64") : std::to_string(bound)) +
                        " nodes, budget is " + std::to_string(budget));
}

}  // namespace

void for_each_labeling(const Presentation& p, const FiniteBirack& x, std::uint64_t budget,
                       const std::function<void(const Labeling&)>& visit) {
  p.validate();
  LabelingSearch search(p, x);
  check_budget(search, budget, static_cast<int>(search.free_generators().size()), x.size(), true);
  search.run(false, visit);
}

LabelingCount count_labelings_backtrack(const Presentation& p, const FiniteBirack& x,
                                        bool collect, std::uint64_t budget) {
  p.validate();
  LabelingSearch search(p, x);
  const int free_count = static_cast<int>(search.free_generators().size());
  check_budget(search, budget, free_count, x.size(), collect);
  LabelingCount result;
  if (collect) {
    search.run(false, [&](const Labeling& l) {
      ++result.count;
      result.labelings.push_back(l);
    });
    return result;
  }
  search.run(true, [&](const Labeling&) { ++result.count; });
  result.count = checked_mul(result.count, checked_pow(x.size(), free_count));
  return result;
}

std::uint64_t count_labelings_linear(const Presentation& p, const TsrParams& params) {
  const TsrParams q = normalize_tsr(params);
  p.validate();
  IntMatrix rows;
  const int vars = p.generator_count;
  for (const Relation& rel : p.relations) {
    std::vector<std::int64_t> first(vars, 0), second(vars, 0);
    // g_k - s g_i - t g_j = 0
    first[rel.out_first] += 1;
    first[rel.in_first] -= q.s;
    first[rel.in_second] -= q.t;
    // g_l - r g_i = 0
    second[rel.out_second] += 1;
    second[rel.in_first] -= q.r;
    rows.push_back(std::move(first));
    rows.push_back(std::move(second));
  }
  return count_homogeneous_solutions(rows, vars, q.n);
}

std::vector<std::vector<int>> framing_vectors(int rank, int components) {
  std::vector<std::vector<int>> out;
  std::vector<int> w(components, 0);
  while (true) {
    out.push_back(w);
    int i = components - 1;
    while (i >= 0 && w[i] == rank - 1) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

Presentation framed_presentation(const Presentation& p, const std::vector<int>& framing, int rank) {
  if (static_cast<int>(framing.size()) != p.component_count())
    throw InputError("framing vector must have one entry per component");
  std::vector<int> kinks(framing.size());
  for (std::size_t k = 0; k < framing.size(); ++k)
    kinks[k] = static_cast<int>(mod(framing[k] - p.writhe[k], rank));
  return insert_kinks(p, kinks);
}

namespace {

// Checks the target and returns its rank.
int prepare_target(const Presentation& p, const FiniteBirack& x, bool oriented,
                   const CountOptions& opts) {
  p.validate();
  if (opts.linear) {
    if (make_tsr(*opts.linear) != x)
      throw InputError("linear parameters do not describe the target birack");
  } else if (!verify_axioms(x).all_passed()) {
    throw InputError("target table fails the birack axioms");
  }
  if (!oriented && !is_involutory(x))
    throw SemanticError(
        "unoriented counting requires an involutory birack; pass an oriented diagram or an "
        "involutory target");
  const int rank = x.rank();
  std::uint64_t framings = 0;
  try {
    framings = checked_pow(rank, p.component_count());
  } catch (const ResourceError&) {
    framings = UINT64_MAX;
  }
  if (framings > opts.budget)
    throw ResourceError("too many framing vectors: rank " + std::to_string(rank) + ", " +
                        std::to_string(p.component_count()) + " components");
  return rank;
}

template <typename Signature>
EnhancementPolynomial signature_sum(const Presentation& p, const FiniteBirack& x, bool oriented,
                                    const CountOptions& opts, Signature&& signature) {
  const int rank = prepare_target(p, x, oriented, opts);
  EnhancementPolynomial poly({"u"});
  std::map<ElementSet, int> cache;
  for (const auto& w : framing_vectors(rank, p.component_count())) {
    const Presentation framed = framed_presentation(p, w, rank);
    for_each_labeling(framed, x, opts.budget, [&](const Labeling& l) {
      ElementSet image(l.begin(), l.end());
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      auto it = cache.find(image);
      if (it == cache.end()) it = cache.emplace(image, signature(image)).first;
      poly.add({it->second}, 1);
    });
  }
  return poly;
}

}  // namespace

IntegralResult phi_integral(const Presentation& p, const FiniteBirack& x, bool oriented,
                            const CountOptions& opts) {
  const int rank = prepare_target(p, x, oriented, opts);
  IntegralResult result;
  for (const auto& w : framing_vectors(rank, p.component_count())) {
    const Presentation framed = framed_presentation(p, w, rank);
    const std::uint64_t count = opts.linear
                                    ? count_labelings_linear(framed, *opts.linear)
                                    : count_labelings_backtrack(framed, x, false, opts.budget).count;
    result.per_framing.push_back({w, count});
    if (__builtin_add_overflow(result.total, count, &result.total))
      throw ResourceError("count exceeds 64-bit range");
  }
  return result;
}

EnhancementPolynomial phi_image(const Presentation& p, const FiniteBirack& x, bool oriented,
                                const CountOptions& opts) {
  return signature_sum(p, x, oriented, opts, [&](const ElementSet& image) {
    return static_cast<int>(opts.close_image ? subbirack_closure(x, image).size() : image.size());
  });
}

EnhancementPolynomial phi_writhe(const Presentation& p, const FiniteBirack& x, bool oriented,
                                 const CountOptions& opts) {
  const IntegralResult integral = phi_integral(p, x, oriented, opts);
  std::vector<std::string> vars;
  for (int k = 0; k < p.component_count(); ++k) vars.push_back("q" + std::to_string(k + 1));
  EnhancementPolynomial poly(vars);
  for (const auto& f : integral.per_framing) poly.add(f.framing, f.count);
  return poly;
}

EnhancementPolynomial phi_column_group(const Presentation& p, const FiniteBirack& x,
                                       bool oriented, const CountOptions& opts) {
  if (x.size() > kColumnGroupMaxSize)
    throw ResourceError("column group enhancement limited to |X| <= " +
                        std::to_string(kColumnGroupMaxSize));
  return signature_sum(p, x, oriented, opts, [&](const ElementSet& image) {
    return static_cast<int>(column_group(x, subbirack_closure(x, image)).order);
  });
}

}  // namespace bikei
