#include "braidcx/graph.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <set>
#include <unordered_set>

#include <functional>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

MultiGraph::MultiGraph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::unordered_set<std::string> labels(vertices_.begin(), vertices_.end());
  if (labels.size() != vertices_.size()) throw DomainError("graph: duplicate vertex label");
  std::unordered_set<std::string> ids;
  for (const auto& e : edges_) {
    if (e.u >= vertices_.size() || e.v >= vertices_.size())
      throw DomainError("graph: edge '" + e.id + "' has an endpoint outside the vertex set");
    if (!ids.insert(e.id).second) throw DomainError("graph: duplicate edge id '" + e.id + "'");
  }
  if (edges_.size() > 64) throw DomainError("graph: at most 64 edges are supported");
}

std::size_t MultiGraph::edge_index(std::string_view id) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].id == id) return i;
  throw DomainError("graph: unknown edge id '" + std::string(id) + "'");
}

std::size_t MultiGraph::vertex_index(std::string_view label) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == label) return i;
  throw DomainError("graph: unknown vertex '" + std::string(label) + "'");
}

EdgeMask MultiGraph::all_edges() const {
  return edges_.size() == 64 ? ~EdgeMask{0} : (EdgeMask{1} << edges_.size()) - 1;
}

std::size_t MultiGraph::component_count(EdgeMask mask) const {
  UnionFind uf(vertices_.size());
  std::size_t c = vertices_.size();
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if ((mask >> i) & 1)
      if (uf.unite(edges_[i].u, edges_[i].v)) --c;
  return c;
}

bool MultiGraph::is_simple() const {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : edges_) {
    if (e.is_loop()) return false;
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) return false;
  }
  return true;
}

bool MultiGraph::is_forest(EdgeMask mask) const {
  UnionFind uf(vertices_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if ((mask >> i) & 1)
      if (!uf.unite(edges_[i].u, edges_[i].v)) return false;
  return true;
}

bool MultiGraph::is_matching(EdgeMask mask) const {
  std::vector<int> degree(vertices_.size(), 0);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if ((mask >> i) & 1) {
      if (++degree[edges_[i].u] > 1) return false;
      if (++degree[edges_[i].v] > 1) return false;
    }
  return true;
}

MultiGraph MultiGraph::edge_subgraph(EdgeMask mask) const {
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if ((mask >> i) & 1) kept.push_back(edges_[i]);
  return MultiGraph(vertices_, std::move(kept));
}

MultiGraph complete_graph(std::size_t n) {
  std::vector<std::string> verts;
  for (std::size_t i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.push_back({i, j, "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
  return MultiGraph(std::move(verts), std::move(edges));
}

MultiGraph complete_bipartite_graph(std::size_t m, std::size_t n) {
  std::vector<std::string> verts;
  for (std::size_t i = 1; i <= m; ++i) verts.push_back("b" + std::to_string(i));
  for (std::size_t j = 1; j <= n; ++j) verts.push_back("t" + std::to_string(j));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      edges.push_back({i, m + j, "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
  return MultiGraph(std::move(verts), std::move(edges));
}

MultiGraph named_graph(std::string_view name) {
  static const std::regex kn(R"(K(\d+))");
  static const std::regex kmn(R"(K(\d+),(\d+))");
  std::smatch m;
  const std::string s(name);
  if (std::regex_match(s, m, kmn)) return complete_bipartite_graph(std::stoul(m[1]), std::stoul(m[2]));
  if (std::regex_match(s, m, kn)) return complete_graph(std::stoul(m[1]));
  throw DomainError("graph: expected Kn or Km,n, got '" + s + "'");
}

MultiGraph contract(const MultiGraph& graph, EdgeMask forest) {
  if (!graph.is_forest(forest)) throw DomainError("contract: edge set contains a cycle");
  UnionFind uf(graph.vertex_count());
  for (std::size_t i = 0; i < graph.edge_count(); ++i)
    if ((forest >> i) & 1) uf.unite(graph.edge(i).u, graph.edge(i).v);
  // Class representatives are the smallest member index, so new vertices keep
  // the order of their first member.
  std::vector<std::size_t> new_index(graph.vertex_count());
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < graph.vertex_count(); ++v) {
    if (uf.find(v) == v) {
      new_index[v] = labels.size();
      labels.push_back(graph.vertices()[v]);
    } else {
      auto& label = labels[new_index[uf.find(v)]];
      label += "+" + graph.vertices()[v];
      new_index[v] = new_index[uf.find(v)];
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < graph.edge_count(); ++i) {
    if ((forest >> i) & 1) continue;
    const auto& e = graph.edge(i);
    edges.push_back({new_index[e.u], new_index[e.v], e.id});
  }
  return MultiGraph(std::move(labels), std::move(edges));
}

EdgeDeletion delete_edge(const MultiGraph& graph, std::string_view edge_id) {
  const std::size_t i = graph.edge_index(edge_id);
  const EdgeMask rest = graph.all_edges() & ~(EdgeMask{1} << i);
  EdgeDeletion out{graph.edge_subgraph(rest), false};
  out.separating = graph.component_count(rest) > graph.component_count();
  return out;
}

bool is_2_connected(const MultiGraph& graph, EdgeMask mask) {
  if (!graph.is_simple()) throw DomainError("is_2_connected: graph must be simple");
  const std::size_t n = graph.vertex_count();
  if (n < 3 || graph.component_count(mask) != 1) return false;
  for (std::size_t cut = 0; cut < n; ++cut) {
    UnionFind uf(n);
    std::size_t c = n - 1;
    for (std::size_t i = 0; i < graph.edge_count(); ++i) {
      if (!((mask >> i) & 1)) continue;
      const auto& e = graph.edge(i);
      if (e.u == cut || e.v == cut) continue;
      if (uf.unite(e.u, e.v)) --c;
    }
    if (c != 1) return false;
  }
  return true;
}

bool is_2_connected(const MultiGraph& graph) { return is_2_connected(graph, graph.all_edges()); }

namespace {

using SimpleGraph = std::vector<std::pair<std::size_t, std::size_t>>;  // edges u < v

// Smallest sorted edge list over relabelings that keep vertices grouped by degree.
SimpleGraph canonical_form(std::size_t n, const SimpleGraph& edges) {
  std::vector<std::size_t> degree(n, 0);
  for (auto [u, v] : edges) ++degree[u], ++degree[v];
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return degree[a] != degree[b] ? degree[a] > degree[b] : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // [begin, end) in `order`
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && degree[order[j]] == degree[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  SimpleGraph best;
  bool have = false;
  std::vector<std::size_t> perm = order;
  std::function<void(std::size_t)> visit = [&](std::size_t b) {
    if (b == blocks.size()) {
      std::vector<std::size_t> label(n);
      for (std::size_t k = 0; k < n; ++k) label[perm[k]] = k;
      SimpleGraph relabeled;
      for (auto [u, v] : edges) relabeled.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
      std::sort(relabeled.begin(), relabeled.end());
      if (!have || relabeled < best) best = std::move(relabeled), have = true;
      return;
    }
    auto first = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].first);
    auto last = perm.begin() + static_cast<std::ptrdiff_t>(blocks[b].second);
    std::sort(first, last);
    do visit(b + 1);
    while (std::next_permutation(first, last));
  };
  visit(0);
  return best;
}

}  // namespace

std::vector<MultiGraph> connected_graphs_up_to_isomorphism(std::size_t max_edges) {
  std::set<std::pair<std::size_t, SimpleGraph>> all;
  std::vector<std::pair<std::size_t, SimpleGraph>> level = {{1, {}}};
  all.insert(level.front());
  for (std::size_t e = 1; e <= max_edges; ++e) {
    std::set<std::pair<std::size_t, SimpleGraph>> next;
    for (const auto& [n, edges] : level) {
      std::set<std::pair<std::size_t, std::size_t>> present(edges.begin(), edges.end());
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v)
          if (!present.count({u, v})) {
            auto grown = edges;
            grown.emplace_back(u, v);
            next.emplace(n, canonical_form(n, grown));
          }
        auto grown = edges;
        grown.emplace_back(u, n);
        next.emplace(n + 1, canonical_form(n + 1, grown));
      }
    }
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<MultiGraph> out;
  for (const auto& [n, edges] : all) {
    std::vector<std::string> verts;
    for (std::size_t i = 1; i <= n; ++i) verts.push_back(std::to_string(i));
    std::vector<Edge> es;
    for (auto [u, v] : edges) es.push_back({u, v, "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")"});
    out.emplace_back(std::move(verts), std::move(es));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const MultiGraph& a, const MultiGraph& b) { return a.edge_count() < b.edge_count(); });
  return out;
}

}  // namespace braidcx
