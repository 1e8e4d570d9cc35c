#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "braidcx/delta_complex.hpp"

namespace braidcx {

struct CriterionResult {
  int number = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  /// Wall-clock limit in seconds; 0 means none.
  double limit = 0;
  std::string detail;

  /// "[PASS] 1 title | 0.42 s (limit 60 s) | detail"
  std::string line() const;
};

struct AcceptanceOptions {
  unsigned threads = 1;
  std::uint64_t seed = 20240611;
};

/// Runs criteria 1..11 in order, calling `report` after each one.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& report = {});

/// Random strict Delta-complex on at most `max_vertices` vertices and at most
/// `max_cells` cells; some cells are doubled so the result need not be simplicial.
DeltaComplex random_strict_complex(std::uint64_t seed, std::size_t max_vertices = 7, std::size_t max_cells = 200);

}  // namespace braidcx
