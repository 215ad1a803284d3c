#include "bikei/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <string>

#include "bikei/errors.hpp"

namespace bikei {

namespace {

struct Token {
  std::string text;
  std::size_t position;
};

std::vector<Token> split_tokens(std::string_view text, std::size_t offset = 0) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) tokens.push_back({std::string(text.substr(start, i - start)), offset + start});
  }
  return tokens;
}

// Parses a positive decimal integer; -1 on failure.
long parse_positive(std::string_view digits) {
  if (digits.empty() || digits.size() > 9) return -1;
  long v = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return -1;
    v = v * 10 + (c - '0');
  }
  return v >= 1 ? v : -1;
}

class UnionFind {
 public:
  int add() {
    parent_.push_back(static_cast<int>(parent_.size()));
    return parent_.back();
  }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller root so canonical ids follow creation order.
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
};

}  // namespace

void LinkDiagram::validate() const {
  if (static_cast<int>(component_of.size()) != semiarc_count)
    throw InputError("component map does not cover every semiarc");
  std::vector<int> ends(semiarc_count, 0), starts(semiarc_count, 0);
  for (const Crossing& c : crossings) {
    for (int s : {c.in_left, c.in_right, c.out_left, c.out_right})
      if (s < 0 || s >= semiarc_count) throw InputError("crossing refers to unknown semiarc");
    ++ends[c.in_left];
    ++ends[c.in_right];
    ++starts[c.out_left];
    ++starts[c.out_right];
    if (component_of[c.in_left] != component_of[c.out_right] ||
        component_of[c.in_right] != component_of[c.out_left])
      throw InputError("strand changes component at a crossing");
  }
  for (int s = 0; s < semiarc_count; ++s) {
    if (ends[s] != starts[s] || ends[s] > 1)
      throw InputError("semiarc " + std::to_string(s) + " is not a simple strand segment");
    if (component_of[s] < 0 || component_of[s] >= component_count)
      throw InputError("semiarc component out of range");
  }
}

int LinkDiagram::successor(int semiarc) const {
  for (const Crossing& c : crossings) {
    if (c.in_left == semiarc) return c.out_right;
    if (c.in_right == semiarc) return c.out_left;
  }
  return semiarc;
}

LinkDiagram LinkDiagram::reversed(const std::vector<int>& components) const {
  std::vector<bool> flip(component_count, false);
  for (int k : components) {
    if (k < 0 || k >= component_count) throw InputError("component index out of range");
    flip[k] = true;
  }
  LinkDiagram out = *this;
  for (Crossing& c : out.crossings) {
    // Strand A: in_left -> out_right, strand B: in_right -> out_left.
    const bool flip_a = flip[component_of[c.in_left]];
    const bool flip_b = flip[component_of[c.in_right]];
    const Crossing old = c;
    if (flip_a && flip_b) {
      // half turn: both strands point up again, handedness kept
      c = {old.out_right, old.out_left, old.in_right, old.in_left, old.positive};
    } else if (flip_a) {
      // quarter turn clockwise; B becomes the in_left strand
      c = {old.in_right, old.out_right, old.in_left, old.out_left, !old.positive};
    } else if (flip_b) {
      // quarter turn counterclockwise; A becomes the in_right strand
      c = {old.out_left, old.in_left, old.out_right, old.in_right, !old.positive};
    }
  }
  return out;
}

LinkDiagram parse_braid_word(std::string_view text, bool oriented, std::optional<int> strands) {
  struct Generator {
    char kind;
    int position;  // 0-based left strand
  };
  std::vector<Generator> word;
  int max_k = 0;
  for (const Token& tok : split_tokens(text)) {
    const char kind = tok.text[0];
    const long k = parse_positive(std::string_view(tok.text).substr(1));
    if ((kind != 's' && kind != 'S' && kind != 'v') || k < 0)
      throw ParseError("malformed braid generator", tok.text, tok.position);
    word.push_back({kind, static_cast<int>(k - 1)});
    max_k = std::max(max_k, static_cast<int>(k));
  }
  const int n = strands.value_or(std::max(1, max_k + 1));
  if (n < max_k + 1 || n < 1)
    throw InputError("braid word needs at least " + std::to_string(max_k + 1) + " strands");

  // Strand permutation of the closure decides the components.
  std::vector<int> at(n);  // position -> starting position of the strand there
  std::iota(at.begin(), at.end(), 0);
  for (const Generator& g : word) std::swap(at[g.position], at[g.position + 1]);
  std::vector<int> ends_at(n);  // starting position -> final position
  for (int p = 0; p < n; ++p) ends_at[at[p]] = p;
  std::vector<int> component_of_start(n, -1);
  int components = 0;
  for (int p = 0; p < n; ++p) {
    if (component_of_start[p] >= 0) continue;
    for (int q = p; component_of_start[q] < 0; q = ends_at[q]) component_of_start[q] = components;
    ++components;
  }

  UnionFind arcs;
  std::vector<int> arc_component;
  auto new_arc = [&](int component) {
    arc_component.push_back(component);
    return arcs.add();
  };
  std::vector<int> bottom(n), current(n), strand_component(n);
  for (int p = 0; p < n; ++p) {
    strand_component[p] = component_of_start[p];
    bottom[p] = current[p] = new_arc(component_of_start[p]);
  }

  struct RawCrossing {
    int in_left, in_right, out_left, out_right;
    bool positive;
  };
  std::vector<RawCrossing> raw;
  for (const Generator& g : word) {
    const int k = g.position;
    std::swap(strand_component[k], strand_component[k + 1]);
    if (g.kind == 'v') {
      std::swap(current[k], current[k + 1]);
      continue;
    }
    RawCrossing c;
    c.in_left = current[k];
    c.in_right = current[k + 1];
    c.out_left = new_arc(strand_component[k]);
    c.out_right = new_arc(strand_component[k + 1]);
    c.positive = g.kind == 's';
    current[k] = c.out_left;
    current[k + 1] = c.out_right;
    raw.push_back(c);
  }
  for (int p = 0; p < n; ++p) arcs.unite(current[p], bottom[p]);

  std::vector<int> canonical(arcs.size(), -1);
  LinkDiagram d;
  d.oriented = oriented;
  d.component_count = components;
  for (int a = 0; a < arcs.size(); ++a) {
    const int root = arcs.find(a);
    if (canonical[root] < 0) {
      canonical[root] = d.semiarc_count++;
      d.component_of.push_back(arc_component[root]);
    }
    canonical[a] = canonical[root];
  }
  for (const RawCrossing& c : raw)
    d.crossings.push_back({canonical[c.in_left], canonical[c.in_right], canonical[c.out_left],
                           canonical[c.out_right], c.positive});
  d.validate();
  return d;
}

LinkDiagram parse_gauss_code(std::string_view text, bool oriented) {
  struct Pass {
    bool over;
    bool positive;
    long label;
    int incoming;
    int outgoing;
    Token token;
  };
  LinkDiagram d;
  d.oriented = oriented;

  std::vector<Pass> passes;
  std::size_t start = 0;
  while (true) {
    const std::size_t slash = text.find('/', start);
    const std::string_view part =
        text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start);
    const auto tokens = split_tokens(part, start);
    const int component = d.component_count++;
    const int base = d.semiarc_count;
    const int m = static_cast<int>(tokens.size());
    if (m == 0) {
      d.semiarc_count += 1;
      d.component_of.push_back(component);
    } else {
      d.semiarc_count += m;
      d.component_of.insert(d.component_of.end(), m, component);
    }
    for (int i = 0; i < m; ++i) {
      const Token& tok = tokens[i];
      const std::string& t = tok.text;
      const long label = t.size() >= 3 ? parse_positive(std::string_view(t).substr(2)) : -1;
      if (t.size() < 3 || (t[0] != 'O' && t[0] != 'U') || (t[1] != '+' && t[1] != '-') || label < 0)
        throw ParseError("malformed Gauss code pass", t, tok.position);
      // gap i is the semiarc leaving pass i
      passes.push_back({t[0] == 'O', t[1] == '+', label, base + (i + m - 1) % m, base + i, tok});
    }
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }

  std::map<long, std::pair<const Pass*, const Pass*>> by_label;  // (over, under)
  for (const Pass& p : passes) {
    auto& slot = by_label[p.label];
    const Pass*& target = p.over ? slot.first : slot.second;
    if (target)
      throw ParseError(std::string("crossing visited twice as ") + (p.over ? "over" : "under"),
                       p.token.text, p.token.position);
    target = &p;
  }
  for (const auto& [label, pair] : by_label) {
    const auto [over, under] = pair;
    if (!over || !under) {
      const Pass* seen = over ? over : under;
      throw ParseError("crossing " + std::to_string(label) + " lacks its " +
                           (over ? "under" : "over") + " pass",
                       seen->token.text, seen->token.position);
    }
    if (over->positive != under->positive)
      throw ParseError("sign mismatch between passes of crossing " + std::to_string(label),
                       under->token.text, under->token.position);
    Crossing c;
    c.positive = over->positive;
    if (c.positive) {
      c.in_left = over->incoming;
      c.out_right = over->outgoing;
      c.in_right = under->incoming;
      c.out_left = under->outgoing;
    } else {
      c.in_left = under->incoming;
      c.out_right = under->outgoing;
      c.in_right = over->incoming;
      c.out_left = over->outgoing;
    }
    d.crossings.push_back(c);
  }
  d.validate();
  return d;
}

}  // namespace bikei
