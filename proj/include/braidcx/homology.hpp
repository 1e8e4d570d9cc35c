#pragma once

#include <cstddef>
#include <vector>

#include "braidcx/chain_complex.hpp"
#include "braidcx/delta_complex.hpp"
#include "braidcx/smith.hpp"

namespace braidcx {

/// Integer homology of a chain complex, one entry per degree.
struct HomologyReport {
  int min_degree = -1;
  /// Ranks of the chain groups, indexed like `betti`.
  std::vector<std::size_t> chain_ranks;
  std::vector<std::size_t> betti;
  /// Torsion coefficients (invariant factors > 1) per degree.
  std::vector<std::vector<Integer>> torsion;
  bool euler_consistent = true;

  int max_degree() const { return min_degree + static_cast<int>(betti.size()) - 1; }
  /// Zero outside the stored degrees.
  std::size_t betti_at(int degree) const;
  std::vector<Integer> torsion_at(int degree) const;
  /// Betti number zero and no torsion in every degree <= `degree`.
  bool vanishes_through(int degree) const;
  bool torsion_free() const;
};

/// Homology via Smith invariants of each boundary; checks the Euler
/// characteristic identity and throws InternalError if it fails.
HomologyReport homology(const ChainComplex& chain);

/// Reduced homology in degrees -1..dim (b~_{-1} = 1 iff the complex is empty).
HomologyReport reduced_homology(const DeltaComplex& complex);

/// Homology of the pair (X, A) in degrees 0..dim(X); A is matched by cell id.
HomologyReport relative_homology(const DeltaComplex& complex, const DeltaComplex& sub);

/// Reduced Betti numbers over Z/p, degrees -1..dim.
std::vector<std::size_t> reduced_betti_mod_p(const DeltaComplex& complex, unsigned p);

/// dim X = d and b~_i = 0 without torsion for all i < d. For d = -1: X is empty.
bool is_homology_spherical(const DeltaComplex& complex, int d);
bool is_homology_spherical(const HomologyReport& report, int dimension, int d);

}  // namespace braidcx
