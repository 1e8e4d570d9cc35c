#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "doctest.h"

#include "braidcx/error.hpp"
#include "braidcx/graph.hpp"

using namespace braidcx;

namespace {

MultiGraph path3() { return MultiGraph({"a", "b", "c"}, {{0, 1, "ab"}, {1, 2, "bc"}}); }

EdgeMask bit(const MultiGraph& g, const char* id) { return EdgeMask{1} << g.edge_index(id); }

// Brute-force canonical form: lexicographically least sorted edge list over all relabelings.
std::vector<std::pair<int, int>> canonical(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> best;
  bool first = true;
  do {
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : edges) {
      int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
      e.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(e.begin(), e.end());
    if (first || e < best) best = e, first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool connected(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> seen(static_cast<std::size_t>(n), 0), stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      int w = a == u ? b : b == u ? a : -1;
      if (w >= 0 && !seen[static_cast<std::size_t>(w)]) seen[static_cast<std::size_t>(w)] = 1, stack.push_back(w);
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s; });
}

}  // namespace

TEST_CASE("named graphs") {
  const MultiGraph k4 = complete_graph(4);
  CHECK(k4.vertex_count() == 4);
  CHECK(k4.edge_count() == 6);
  CHECK(k4.edge(0).id == "(1,2)");
  const MultiGraph k23 = complete_bipartite_graph(2, 3);
  CHECK(k23.edge_count() == 6);
  CHECK(named_graph("K3").edge_count() == 3);
  CHECK(named_graph("K2,4").edge_count() == 8);
  CHECK_THROWS_AS(named_graph("G7"), DomainError);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(MultiGraph({"a"}, {{0, 1, "x"}}), DomainError);
  CHECK_THROWS_AS(MultiGraph({"a", "b"}, {{0, 1, "x"}, {1, 0, "x"}}), DomainError);
  CHECK_NOTHROW(MultiGraph({"a", "b"}, {{0, 1, "x"}, {1, 0, "y"}, {0, 0, "z"}}));
}

TEST_CASE("forests and matchings") {
  const MultiGraph k3 = complete_graph(3);
  CHECK(k3.is_forest(0b011));
  CHECK_FALSE(k3.is_forest(0b111));
  CHECK(k3.is_matching(0b001));
  CHECK_FALSE(k3.is_matching(0b011));
  const MultiGraph multi({"a", "b"}, {{0, 1, "x"}, {1, 0, "y"}, {0, 0, "z"}});
  CHECK_FALSE(multi.is_forest(0b011));
  CHECK_FALSE(multi.is_forest(0b100));
  CHECK_FALSE(multi.is_matching(0b100));
  CHECK(multi.component_count(0) == 2);
  CHECK(multi.component_count() == 1);
}

TEST_CASE("contraction") {
  const MultiGraph k3 = complete_graph(3);
  const MultiGraph q = contract(k3, bit(k3, "(1,2)"));
  CHECK(q.vertex_count() == 2);
  CHECK(q.edge_count() == 2);
  for (const auto& e : q.edges()) CHECK_FALSE(e.is_loop());
  CHECK(q.edge(0).u != q.edge(0).v);
  const MultiGraph same = contract(k3, 0);
  CHECK(same.vertex_count() == 3);
  CHECK(same.edge_count() == 3);
  const MultiGraph p = contract(path3(), bit(path3(), "ab"));
  CHECK(p.vertex_count() == 2);
  CHECK(p.edge_count() == 1);
  CHECK_THROWS_AS(contract(k3, 0b111), DomainError);
}

TEST_CASE("edge deletion") {
  const auto k3 = delete_edge(complete_graph(3), "(1,2)");
  CHECK(k3.graph.edge_count() == 2);
  CHECK_FALSE(k3.separating);
  CHECK(delete_edge(path3(), "ab").separating);
  const MultiGraph looped({"a", "b"}, {{0, 1, "x"}, {0, 0, "l"}});
  CHECK_FALSE(delete_edge(looped, "l").separating);
  CHECK_THROWS_AS(delete_edge(path3(), "zz"), DomainError);
}

TEST_CASE("2-connectivity") {
  CHECK(is_2_connected(complete_graph(4)));
  CHECK(is_2_connected(complete_graph(3)));
  CHECK_FALSE(is_2_connected(path3()));
  CHECK_FALSE(is_2_connected(complete_graph(2)));
  const MultiGraph k4 = complete_graph(4);
  CHECK_FALSE(is_2_connected(k4, 0b000111));
  CHECK_THROWS_AS(is_2_connected(MultiGraph({"a", "b"}, {{0, 1, "x"}, {0, 1, "y"}})), DomainError);
}

TEST_CASE("connected graphs up to isomorphism") {
  const auto graphs = connected_graphs_up_to_isomorphism(6);
  std::map<std::size_t, std::size_t> by_edges;
  for (const auto& g : graphs) {
    ++by_edges[g.edge_count()];
    CHECK(g.is_simple());
    CHECK(g.component_count() == 1);
  }
  CHECK(graphs.size() == 53);
  CHECK(by_edges == std::map<std::size_t, std::size_t>{{0, 1}, {1, 1}, {2, 1}, {3, 3}, {4, 5}, {5, 12}, {6, 30}});

  // Independent brute force for at most 4 edges.
  std::set<std::pair<int, std::vector<std::pair<int, int>>>> classes;
  for (int n = 1; n <= 5; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      if (__builtin_popcount(mask) > 4) continue;
      std::vector<std::pair<int, int>> e;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) e.push_back(pairs[k]);
      if (connected(n, e)) classes.insert({n, canonical(n, e)});
    }
  }
  std::size_t small = 0;
  for (const auto& g : graphs) small += g.edge_count() <= 4;
  CHECK(classes.size() == small);
}
