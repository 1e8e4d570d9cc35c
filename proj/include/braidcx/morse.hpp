#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcx/cohen_macaulay.hpp"
#include "braidcx/delta_complex.hpp"
#include "braidcx/homology.hpp"

namespace braidcx {

/// Integer height per vertex id.
using HeightFunction = std::map<std::string, long>;

/// Every vertex has a height and no cell has two vertices of equal height.
/// DomainError for missing vertices, InvalidHeightError (with the cell id) for a horizontal cell.
void validate_heights(const DeltaComplex& complex, const HeightFunction& heights);

/// Cells of link(v) whose vertices all lie strictly below v. Cells keep the
/// ids of the cells of X they come from. X must be strict.
DeltaComplex descending_link(const DeltaComplex& complex, const HeightFunction& heights, const std::string& vertex);

/// Full subcomplex on the vertices of height <= t.
DeltaComplex sublevel_complex(const DeltaComplex& complex, const HeightFunction& heights, long t);

struct DescendingLinkResult {
  std::string vertex;
  long height = 0;
  int dimension = -1;
  HomologyReport homology;
  bool connected_enough = false;
};

struct MorseReport {
  /// pass: prediction confirmed; inconclusive: hypothesis fails, no prediction;
  /// fail: the prediction is contradicted.
  Verdict verdict = Verdict::inconclusive;
  long level = 0;
  int degree = -1;
  bool hypothesis_holds = false;
  std::vector<DescendingLinkResult> descending_links;
  /// H_i(X, X_{<=t}); zero for all i <= degree + 1 is equivalent to the
  /// inclusion being an isomorphism below degree + 1 and onto in degree + 1.
  HomologyReport relative;
  HomologyReport sublevel;
  HomologyReport whole;
  /// H_i(X, X_{<=t}) = 0 for every i <= degree + 1.
  bool relative_vanishes = false;
  std::optional<Witness> witness;
};

/// Descending links of all vertices above t must have b~_i = 0 without torsion
/// for i <= d. If so, the inclusion X_{<=t} -> X is predicted to be an
/// isomorphism on H~_i for i <= d and onto on H~_{d+1}; the prediction is
/// checked against the relative homology of the pair.
MorseReport bb_verify(const DeltaComplex& complex, const HeightFunction& heights, long t, int d);

}  // namespace braidcx
