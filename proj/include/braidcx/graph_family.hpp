#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "braidcx/delta_complex.hpp"
#include "braidcx/graph.hpp"

namespace braidcx {

enum class FamilyKind { matchings, forests, subgraphs, not2connected, custom };

std::string to_string(FamilyKind kind);
FamilyKind family_kind_from_string(const std::string& name);

/// Subgraph-closed family of spanning subgraphs of a ground multigraph,
/// identified with edge subsets.
class GraphFamily {
 public:
  using Predicate = std::function<bool(const MultiGraph&, EdgeMask)>;

  GraphFamily(MultiGraph ground, FamilyKind kind, Predicate member);

  static GraphFamily matchings(MultiGraph ground);
  static GraphFamily forests(MultiGraph ground);
  static GraphFamily subgraphs(MultiGraph ground);
  /// Ground must be simple.
  static GraphFamily not_2_connected(MultiGraph ground);
  static GraphFamily builtin(FamilyKind kind, MultiGraph ground);
  /// Custom predicates are spot-checked for subgraph-closure on `samples`
  /// random edge subsets; a violation raises FamilyNotClosedError.
  static GraphFamily custom(MultiGraph ground, Predicate member, std::size_t samples = 1000,
                            unsigned seed = 1);

  const MultiGraph& ground() const { return *ground_; }
  FamilyKind kind() const { return kind_; }
  bool contains(EdgeMask subset) const { return member_(*ground_, subset); }

 private:
  std::shared_ptr<const MultiGraph> ground_;
  FamilyKind kind_;
  Predicate member_;
};

/// Simplicial complex whose d-cells are the members with d+1 edges. Vertex
/// slots follow ground edge order; a vertex is labelled by its edge id and a
/// larger cell by "{id,id,...}". Every member's codimension-one subsets are
/// checked (FamilyNotClosedError). `cell_budget` bounds the number of cells
/// (BudgetExceeded).
DeltaComplex graph_complex(const GraphFamily& family, std::size_t cell_budget = 200000);

/// Edge mask of a graph-complex cell (inverse of the id scheme above).
EdgeMask cell_edges(const GraphFamily& family, const std::string& cell_id);

/// Members edge-disjoint from G whose union with G is a member (the family F - G).
/// DomainError if G is not a member.
GraphFamily family_link(const GraphFamily& family, EdgeMask member);

/// Non-attacking rook placements on an m x n board; vertex (i,j) has id "(i,j)".
/// Equal to graph_complex(matchings of K_{m,n}).
DeltaComplex chessboard_complex(std::size_t m, std::size_t n);

/// Matching complex of the complete graph K_n.
DeltaComplex matching_complex(std::size_t n);

struct ConnectivityBound {
  int nu = 0;             ///< min(m, n, floor((m+n+1)/3))
  bool cm_condition = false;  ///< min(m, n) <= floor((m+n+1)/3)
};
ConnectivityBound connectivity_bound(int m, int n);

/// A chessboard simplex: rook squares (row, column), 1-based, sorted by row.
using Matching = std::vector<std::pair<int, int>>;
std::string matching_id(const Matching& matching);
/// Parses "(1,3),(2,1)" or "{(1,3),(2,1)}" or "(1,3)".
Matching parse_matching(const std::string& text);

}  // namespace braidcx
