#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "braidcx/braid.hpp"
#include "braidcx/delta_complex.hpp"
#include "braidcx/graph_family.hpp"

namespace braidcx {

/// Strands held fixed as an obstacle: their bottom and top positions and the
/// braid they form among themselves (strands in bottom order).
struct FrozenContext {
  std::vector<int> bottoms;
  std::vector<int> tops;
  BraidWord braid;

  bool empty() const { return bottoms.empty(); }
  std::size_t size() const { return bottoms.size(); }
  /// "bottoms>tops/normal form"; empty string for no frozen strands.
  std::string fingerprint() const;
  friend bool operator==(const FrozenContext& a, const FrozenContext& b) { return a.fingerprint() == b.fingerprint(); }
};

/// A cell of the braided chessboard complex over an m x n board: active strands
/// from bottoms S to tops T, braided together with the frozen strands.
///
/// The braid is stored on all strands (active and frozen) in bottom order.
/// Two partial braids are equal iff S, T, the frozen context and the combined
/// braid (as a group element) agree, which is exactly equality of ids.
class PartialBraid {
 public:
  /// Validates positions, that frozen bottoms end at frozen tops, and that
  /// deleting the active strands leaves the frozen braid (DomainError).
  PartialBraid(int m, int n, std::vector<int> bottoms, std::vector<int> tops, BraidWord combined,
               FrozenContext frozen = {});

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<int>& bottoms() const { return bottoms_; }
  const std::vector<int>& tops() const { return tops_; }
  const BraidWord& braid() const { return braid_; }
  const FrozenContext& frozen() const { return frozen_; }
  int strand_count() const { return static_cast<int>(bottoms_.size()); }
  int dimension() const { return strand_count() - 1; }
  const std::string& id() const { return id_; }

  std::vector<int> combined_bottoms() const;
  std::vector<int> combined_tops() const;

  /// Face i deletes the i-th active strand in bottom order; empty for one strand.
  std::vector<PartialBraid> faces() const;
  /// Squares (bottom, top) joined by active strands, sorted by bottom.
  Matching project() const;
  /// Freezes every strand of this cell.
  FrozenContext link_context() const;

  friend bool operator==(const PartialBraid& a, const PartialBraid& b) { return a.id_ == b.id_; }

 private:
  int m_ = 0;
  int n_ = 0;
  std::vector<int> bottoms_;
  std::vector<int> tops_;
  BraidWord braid_;
  FrozenContext frozen_;
  std::string id_;
};

/// The permutation braid lift of a matching (no frozen strands).
PartialBraid straight_lift(int m, int n, const Matching& matching);

/// Lift of a matching by a braid on its strands. DomainError unless the braid's
/// permutation realizes the matching.
PartialBraid lift(int m, int n, const Matching& matching, const BraidWord& braid);

struct BraidedComplex {
  DeltaComplex complex;
  std::map<std::string, PartialBraid> cells;
};

/// Smallest face-closed set of cells containing the seeds. Seeds must share
/// board and frozen context (DomainError). BudgetExceeded above `cell_budget`.
BraidedComplex closure_complex(const std::vector<PartialBraid>& seeds, std::size_t cell_budget = 200000);

/// Cells over sub-matchings of tau whose combined braid lies in the
/// enumerate_braids window of bound L, closed under faces.
BraidedComplex truncated_fiber(int m, int n, const Matching& tau, const FrozenContext& frozen, int L,
                               std::size_t cell_budget = 200000);

/// Union of truncated fibers over every matching of the board (no frozen strands).
BraidedComplex truncated_complex(int m, int n, int L, std::size_t cell_budget = 200000);

/// Closure of the straight lifts of all maximal matchings of the board.
BraidedComplex straight_lift_complex(int m, int n, std::size_t cell_budget = 200000);

/// Projection of cell ids to chessboard cell ids, for use as a poset map.
std::map<std::string, std::string> projection_map(const BraidedComplex& braided);

}  // namespace braidcx
