#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bikei/birack.hpp"
#include "bikei/polynomial.hpp"
#include "bikei/presentation.hpp"
#include "bikei/tsr.hpp"

namespace bikei {

// Generator index -> birack element.
using Labeling = std::vector<Element>;

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct LabelingCount {
  std::uint64_t count = 0;
  std::vector<Labeling> labelings;  // filled only when collecting
};

// Depth-first assignment over a static generator order with forced
// propagation through B (and B^{-1} when it exists). Refuses with
// ResourceError when |X|^(branching generators) exceeds budget.
void for_each_labeling(const Presentation& p, const FiniteBirack& x, std::uint64_t budget,
                       const std::function<void(const Labeling&)>& visit);

LabelingCount count_labelings_backtrack(const Presentation& p, const FiniteBirack& x,
                                        bool collect = false,
                                        std::uint64_t budget = kDefaultBudget);

// Solution count of the homogeneous system over Z_n given by
// g_k = s g_i + t g_j and g_l = r g_i for each relation B(g_i,g_j)=(g_k,g_l).
std::uint64_t count_labelings_linear(const Presentation& p, const TsrParams& params);

struct CountOptions {
  std::uint64_t budget = kDefaultBudget;
  // Set when the target is make_tsr(*linear); totals then use the linear
  // solver and the axiom check is skipped.
  std::optional<TsrParams> linear;
  // Image enhancement closes the label set under B; false uses the raw set.
  bool close_image = true;
};

struct FramingCount {
  std::vector<int> framing;  // entries in [0, N)
  std::uint64_t count = 0;
  bool operator==(const FramingCount&) const = default;
};

struct IntegralResult {
  std::uint64_t total = 0;
  std::vector<FramingCount> per_framing;  // lexicographic in framing
};

// All framing vectors of (Z_rank)^components in lexicographic order.
std::vector<std::vector<int>> framing_vectors(int rank, int components);

// Presentation with writhe congruent to framing mod rank, reached by adding
// positive kinks.
Presentation framed_presentation(const Presentation& p, const std::vector<int>& framing, int rank);

// Sum over framings in (Z_N)^c of the labeling counts. Unoriented counting
// requires an involutory target (SemanticError).
IntegralResult phi_integral(const Presentation& p, const FiniteBirack& x, bool oriented,
                            const CountOptions& opts = {});

// Sum of u^|image subbirack| over all labelings of all framings.
EnhancementPolynomial phi_image(const Presentation& p, const FiniteBirack& x, bool oriented,
                                const CountOptions& opts = {});

// Sum over framings w of |Hom| q1^w1 ... qc^wc.
EnhancementPolynomial phi_writhe(const Presentation& p, const FiniteBirack& x, bool oriented,
                                 const CountOptions& opts = {});

// Sum of u^|CG(image subbirack)| over all labelings of all framings.
EnhancementPolynomial phi_column_group(const Presentation& p, const FiniteBirack& x,
                                       bool oriented, const CountOptions& opts = {});

}  // namespace bikei
