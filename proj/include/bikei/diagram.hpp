#pragma once

#include <optional>
#include <string_view>
#include <vector>

namespace bikei {

// A classical crossing drawn with both strands pointing up. One strand runs
// from in_left to out_right, the other from in_right to out_left. When
// positive is set the in_left strand is the over strand (understrand enters
// on the right); otherwise the in_right strand is over.
struct Crossing {
  int in_left = 0;
  int in_right = 0;
  int out_left = 0;
  int out_right = 0;
  bool positive = true;
  bool operator==(const Crossing&) const = default;
};

// Classical crossings only; virtual crossings are never recorded and
// semiarcs run from one classical crossing point to the next. A component
// without classical crossings is a single free-loop semiarc.
struct LinkDiagram {
  std::vector<Crossing> crossings;
  int semiarc_count = 0;
  std::vector<int> component_of;  // semiarc -> component
  int component_count = 0;
  bool oriented = false;

  // Throws InputError unless every semiarc ends at exactly one crossing
  // endpoint and starts at exactly one (or is a free loop), and strand
  // following stays inside one component.
  void validate() const;

  // Semiarc that follows s along its strand; free loops return themselves.
  int successor(int semiarc) const;

  // Same diagram with the listed components traversed backwards.
  LinkDiagram reversed(const std::vector<int>& components) const;

  bool operator==(const LinkDiagram&) const = default;
};

// Tokens sK (positive crossing of strands K, K+1), SK (negative) and vK
// (virtual), K >= 1, separated by whitespace. The strand count is
// 1 + max K unless given explicitly; an empty word is the unlink.
LinkDiagram parse_braid_word(std::string_view text, bool oriented,
                             std::optional<int> strands = std::nullopt);

// Signed oriented Gauss code: per component a sequence of O+k, O-k, U+k, U-k
// passes; components separated by '/'. An empty component is an unknotted
// free loop.
LinkDiagram parse_gauss_code(std::string_view text, bool oriented = true);

}  // namespace bikei
