#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace braidcx {

/// Edge subsets of a ground graph, bit i = edge i. Ground graphs have at most 64 edges.
using EdgeMask = std::uint64_t;

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::string id;
  bool is_loop() const { return u == v; }
};

/// Finite multigraph; loops and parallel edges are allowed.
class MultiGraph {
 public:
  MultiGraph() = default;
  /// Validates endpoints and edge-id uniqueness (DomainError).
  MultiGraph(std::vector<std::string> vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  std::size_t edge_index(std::string_view id) const;
  std::size_t vertex_index(std::string_view label) const;

  /// Connected components of the spanning subgraph with edge set `mask`.
  std::size_t component_count(EdgeMask mask) const;
  std::size_t component_count() const { return component_count(all_edges()); }
  EdgeMask all_edges() const;

  bool is_simple() const;
  /// True iff the edge subset contains no cycle (a loop or a parallel pair counts).
  bool is_forest(EdgeMask mask) const;
  /// True iff every vertex meets at most one edge of the subset (a loop meets its vertex twice).
  bool is_matching(EdgeMask mask) const;

  MultiGraph edge_subgraph(EdgeMask mask) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

/// Complete graph on vertices "1".."n" with edges "(i,j)", i < j, in lexicographic order.
MultiGraph complete_graph(std::size_t n);
/// Complete bipartite graph: bottom vertices "b1".."bm", top "t1".."tn", edge (i,j) joins b_i to t_j.
MultiGraph complete_bipartite_graph(std::size_t m, std::size_t n);
/// Parses "Kn" or "Km,n".
MultiGraph named_graph(std::string_view name);

/// Quotient G/sigma for a forest sigma: each tree of sigma collapses to one
/// vertex (labels of a class joined with '+'), edges of sigma disappear, other
/// edges keep their ids and may become loops or parallel edges.
/// DomainError if sigma has a cycle.
MultiGraph contract(const MultiGraph& graph, EdgeMask forest);

struct EdgeDeletion {
  MultiGraph graph;
  bool separating = false;
};
EdgeDeletion delete_edge(const MultiGraph& graph, std::string_view edge_id);

/// |V| >= 3, connected, and no cut vertex. DomainError on loops or parallel edges.
bool is_2_connected(const MultiGraph& graph);
/// Same test for the spanning subgraph on `mask` of a simple ground graph.
bool is_2_connected(const MultiGraph& graph, EdgeMask mask);

/// One simple connected graph per isomorphism class with at most `max_edges`
/// edges (including the single vertex). Vertices are "1".."n".
std::vector<MultiGraph> connected_graphs_up_to_isomorphism(std::size_t max_edges);

}  // namespace braidcx
