#pragma once

#include <cstddef>
#include <vector>

#include "braidcx/cohen_macaulay.hpp"
#include "braidcx/delta_complex.hpp"

namespace braidcx {

/// Letters are +-(g+1) for generator g.
using GroupWord = std::vector<int>;

struct Presentation {
  std::size_t generators = 0;
  std::vector<GroupWord> relators;
};

/// Edge-path presentation of pi_1 of the 2-skeleton: one generator per edge
/// outside a spanning tree (lowest edge indices first), one relator per 2-cell.
/// DomainError if the complex is empty or disconnected.
Presentation edge_path_presentation(const DeltaComplex& complex);

struct Pi1Report {
  /// pass or inconclusive; never fail.
  Verdict verdict = Verdict::inconclusive;
  std::size_t initial_generators = 0;
  std::size_t initial_relators = 0;
  std::size_t remaining_generators = 0;
  std::size_t remaining_relators = 0;
  std::size_t steps = 0;
};

/// Tietze simplification within `step_budget` rewriting steps; pass only when
/// every generator is eliminated.
Pi1Report simplify_presentation(Presentation presentation, std::size_t step_budget = 10000);

Pi1Report fundamental_group_trivial(const DeltaComplex& complex, std::size_t step_budget = 10000);

}  // namespace braidcx
