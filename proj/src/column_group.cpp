#include "bikei/column_group.hpp"

#include <algorithm>
#include <unordered_set>

#include "bikei/errors.hpp"

namespace bikei {

namespace {

// 4 bits per image; enough for n <= 16.
std::uint64_t pack(const Permutation& p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < p.size(); ++i) code |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return code;
}

}  // namespace

ColumnGroup column_group(const FiniteBirack& b, const ElementSet& subset) {
  const int n = b.size();
  if (n > kColumnGroupMaxSize)
    throw ResourceError("column group closure refused for |X| = " + std::to_string(n) +
                        " > " + std::to_string(kColumnGroupMaxSize));
  ColumnGroup g;
  for (Element x : subset) {
    if (x < 0 || x >= n) throw InputError("column group subset element out of range");
    for (Permutation p : {b.upper_column(x), b.lower_column(x)})
      if (!is_identity(p)) g.generators.push_back(std::move(p));
  }
  std::sort(g.generators.begin(), g.generators.end());
  g.generators.erase(std::unique(g.generators.begin(), g.generators.end()), g.generators.end());

  std::unordered_set<std::uint64_t> seen;
  std::vector<Permutation> frontier{identity_permutation(n)};
  seen.insert(pack(frontier.front()));
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& gen : g.generators) {
        Permutation q = compose(gen, p);
        if (seen.insert(pack(q)).second) next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
  }
  g.order = seen.size();
  return g;
}

}  // namespace bikei
