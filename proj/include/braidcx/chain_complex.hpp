#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/SparseCore>

#include "braidcx/delta_complex.hpp"
#include "braidcx/smith.hpp"

namespace braidcx {

/// Boundary operator with rows indexed by (d-1)-cells and columns by d-cells.
using BoundaryMatrix = Eigen::SparseMatrix<int>;

/// Free chain complex C_lo <- ... <- C_hi with explicit boundary matrices.
struct ChainComplex {
  int min_degree = 0;
  /// ranks[k] is the rank of C_{min_degree + k}.
  std::vector<std::size_t> ranks;
  /// boundaries[k] : C_{min_degree + k} -> C_{min_degree + k - 1}; boundaries[0] has zero rows.
  std::vector<BoundaryMatrix> boundaries;

  int max_degree() const { return min_degree + static_cast<int>(ranks.size()) - 1; }
};

/// Entry d is the boundary C_d -> C_{d-1} of the ordered-face chain complex,
/// with sign (-1)^i on face i. Entry 0 is the augmentation C_0 -> Z (a row of ones).
std::vector<BoundaryMatrix> boundary_matrices(const DeltaComplex& complex);

/// Augmented chain complex in degrees -1..dim; its homology is reduced homology.
ChainComplex augmented_chain_complex(const DeltaComplex& complex);

/// Quotient C(X)/C(A) in degrees 0..dim(X). A is matched to X by cell id and
/// must be a subcomplex (DomainError otherwise).
ChainComplex relative_chain_complex(const DeltaComplex& complex, const DeltaComplex& sub);

/// Checks boundaries[k-1] * boundaries[k] == 0 for every k.
bool boundary_squares_to_zero(const ChainComplex& chain);

/// Nonzero Smith invariants of a sparse integer matrix. Unit pivots are
/// eliminated sparsely (Markowitz order); the remaining block goes through the
/// dense Smith form over Integer.
std::vector<Integer> invariant_factors(const BoundaryMatrix& matrix);

/// Rank over Z/p, p prime and below 2^31.
std::size_t rank_mod_p(const BoundaryMatrix& matrix, unsigned p);

IntegerMatrix to_dense(const BoundaryMatrix& matrix);

}  // namespace braidcx
