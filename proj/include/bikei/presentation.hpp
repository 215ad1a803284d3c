#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bikei/diagram.hpp"

namespace bikei {

// B(g_{in_first}, g_{in_second}) = (g_{out_first}, g_{out_second}), 0-based.
//
// positive records how the relation sits on the strands: for a positive
// crossing the inputs are the incoming semiarcs; for a negative crossing
// the relation is the B^{-1} form and the outputs are the incoming
// semiarcs. Labeling counts only read the four indices.
struct Relation {
  int in_first = 0;
  int in_second = 0;
  int out_first = 0;
  int out_second = 0;
  bool positive = true;
  bool operator==(const Relation&) const = default;
};

struct Presentation {
  int generator_count = 0;
  std::vector<Relation> relations;
  std::vector<int> component_of;  // generator -> component
  std::vector<int> writhe;        // one entry per component
  std::vector<std::string> names;

  int component_count() const { return static_cast<int>(writhe.size()); }
  // Throws InputError on inconsistent lengths or out-of-range indices.
  void validate() const;
};

// Default generator names: a..z for up to 26 generators, g1, g2, ... beyond.
std::vector<std::string> default_generator_names(int count);

// One generator per semiarc, one relation per crossing. Components listed in
// reversed_components are traversed backwards first. Writhe is the signed
// count of crossings whose strands belong to the same component.
Presentation extract_presentation(const LinkDiagram& d,
                                  const std::vector<int>& reversed_components = {});

// Appends counts[k] positive kinks to component k. A kink on the strand
// through semiarc g cuts it into g -> kink -> y with a loop h and the
// relation B(g, h) = (y, h); when g is only recorded leaving a crossing the
// cut is y -> kink -> g with B(y, h) = (g, h), and on a free loop y is g
// itself. The writhe grows by counts.
Presentation insert_kinks(const Presentation& p, const std::vector<int>& counts);

// Presentation file:
//   gens: a b c ...
//   comp: a=1 b=1 ...        (optional, default one component)
//   writhe: w1 w2 ...        (optional, default zeros)
//   B(x,y)=(u,v)  or  (u,v)=B(x,y), separated by commas or newlines
// A leading '-' on a relation marks a negative crossing (B^{-1} form).
// '#' starts a comment line. Without a gens line the generators are the
// names used in the relations, in sorted order.
Presentation parse_presentation_text(std::string_view text);
Presentation read_presentation_file(const std::string& path);
std::string format_presentation(const Presentation& p);

}  // namespace bikei
