#pragma once

#include <cstdint>
#include <vector>

#include "bikei/birack.hpp"

namespace bikei {

inline constexpr int kColumnGroupMaxSize = 10;

struct ColumnGroup {
  std::uint64_t order = 1;
  // Distinct non-identity maps u_x, l_x for x in the subset, sorted.
  std::vector<Permutation> generators;
};

// Group generated by u_x and l_x for x in subset, by breadth-first closure.
// Throws ResourceError when |X| > kColumnGroupMaxSize.
ColumnGroup column_group(const FiniteBirack& b, const ElementSet& subset);

}  // namespace bikei
