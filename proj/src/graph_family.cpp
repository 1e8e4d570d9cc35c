#include "braidcx/graph_family.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <regex>

#include "braidcx/error.hpp"

namespace braidcx {

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::matchings: return "matchings";
    case FamilyKind::forests: return "forests";
    case FamilyKind::subgraphs: return "subgraphs";
    case FamilyKind::not2connected: return "not2connected";
    case FamilyKind::custom: return "custom";
  }
  return "custom";
}

FamilyKind family_kind_from_string(const std::string& name) {
  if (name == "matchings") return FamilyKind::matchings;
  if (name == "forests") return FamilyKind::forests;
  if (name == "subgraphs") return FamilyKind::subgraphs;
  if (name == "not2connected") return FamilyKind::not2connected;
  throw DomainError("unknown graph family '" + name + "'");
}

GraphFamily::GraphFamily(MultiGraph ground, FamilyKind kind, Predicate member)
    : ground_(std::make_shared<const MultiGraph>(std::move(ground))), kind_(kind), member_(std::move(member)) {}

GraphFamily GraphFamily::matchings(MultiGraph ground) {
  return {std::move(ground), FamilyKind::matchings, [](const MultiGraph& g, EdgeMask s) { return g.is_matching(s); }};
}

GraphFamily GraphFamily::forests(MultiGraph ground) {
  return {std::move(ground), FamilyKind::forests, [](const MultiGraph& g, EdgeMask s) { return g.is_forest(s); }};
}

GraphFamily GraphFamily::subgraphs(MultiGraph ground) {
  return {std::move(ground), FamilyKind::subgraphs, [](const MultiGraph&, EdgeMask) { return true; }};
}

GraphFamily GraphFamily::not_2_connected(MultiGraph ground) {
  if (!ground.is_simple()) throw DomainError("not2connected: ground graph must be simple");
  return {std::move(ground), FamilyKind::not2connected,
          [](const MultiGraph& g, EdgeMask s) { return !is_2_connected(g, s); }};
}

GraphFamily GraphFamily::builtin(FamilyKind kind, MultiGraph ground) {
  switch (kind) {
    case FamilyKind::matchings: return matchings(std::move(ground));
    case FamilyKind::forests: return forests(std::move(ground));
    case FamilyKind::subgraphs: return subgraphs(std::move(ground));
    case FamilyKind::not2connected: return not_2_connected(std::move(ground));
    case FamilyKind::custom: break;
  }
  throw DomainError("builtin: custom families need a predicate");
}

GraphFamily GraphFamily::custom(MultiGraph ground, Predicate member, std::size_t samples, unsigned seed) {
  GraphFamily family(std::move(ground), FamilyKind::custom, std::move(member));
  std::mt19937_64 rng(seed);
  const EdgeMask all = family.ground().all_edges();
  for (std::size_t t = 0; t < samples; ++t) {
    const EdgeMask s = rng() & all;
    if (!family.contains(s)) continue;
    for (EdgeMask rest = s; rest; rest &= rest - 1) {
      const EdgeMask sub = s & ~(rest & -rest);
      if (!family.contains(sub))
        throw FamilyNotClosedError("custom family is not subgraph-closed (sampled violation)");
    }
  }
  return family;
}

namespace {

std::vector<std::size_t> bits_of(EdgeMask mask) {
  std::vector<std::size_t> out;
  for (; mask; mask &= mask - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
  return out;
}

}  // namespace

DeltaComplex graph_complex(const GraphFamily& family, std::size_t cell_budget) {
  const MultiGraph& g = family.ground();
  const std::size_t m = g.edge_count();
  std::vector<EdgeMask> members;
  // Depth-first growth by increasing edge index; subgraph-closure makes every
  // member reachable through member prefixes.
  std::vector<std::pair<EdgeMask, std::size_t>> stack;
  for (std::size_t i = m; i-- > 0;) stack.emplace_back(EdgeMask{1} << i, i);
  while (!stack.empty()) {
    auto [mask, last] = stack.back();
    stack.pop_back();
    if (!family.contains(mask)) continue;
    members.push_back(mask);
    if (members.size() > cell_budget)
      throw BudgetExceeded("graph complex exceeds the cell budget of " + std::to_string(cell_budget));
    for (std::size_t j = m; j-- > last + 1;) stack.emplace_back(mask | (EdgeMask{1} << j), j);
  }
  for (EdgeMask s : members)
    for (EdgeMask rest = s; rest; rest &= rest - 1) {
      const EdgeMask sub = s & ~(rest & -rest);
      if (sub && !family.contains(sub))
        throw FamilyNotClosedError("graph family rejects a subgraph of a member");
    }

  std::vector<std::string> labels;
  for (const auto& e : g.edges()) labels.push_back(e.id);
  std::vector<std::vector<std::size_t>> simplices;
  simplices.reserve(members.size());
  for (EdgeMask s : members) simplices.push_back(bits_of(s));
  return simplicial_complex(labels, std::move(simplices),
                            [&](const std::vector<std::size_t>& s) { return brace_id(labels, s); });
}

EdgeMask cell_edges(const GraphFamily& family, const std::string& cell_id) {
  const MultiGraph& g = family.ground();
  std::string_view body = cell_id;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = body.substr(1, body.size() - 2);
  else return EdgeMask{1} << g.edge_index(cell_id);
  EdgeMask mask = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    bool matched = false;
    for (std::size_t i = 0; i < g.edge_count() && !matched; ++i) {
      const std::string& id = g.edge(i).id;
      if (body.compare(pos, id.size(), id) != 0) continue;
      const std::size_t end = pos + id.size();
      if (end != body.size() && body[end] != ',') continue;
      mask |= EdgeMask{1} << i;
      pos = end + 1;
      matched = true;
    }
    if (!matched) throw DomainError("graph complex: cannot parse cell id '" + cell_id + "'");
  }
  return mask;
}

GraphFamily family_link(const GraphFamily& family, EdgeMask member) {
  if (member == 0 || !family.contains(member)) throw DomainError("family_link: graph is not a member of the family");
  GraphFamily parent = family;
  return GraphFamily(family.ground(), FamilyKind::custom, [parent, member](const MultiGraph&, EdgeMask s) {
    return (s & member) == 0 && parent.contains(s | member);
  });
}

DeltaComplex chessboard_complex(std::size_t m, std::size_t n) {
  return graph_complex(GraphFamily::matchings(complete_bipartite_graph(m, n)));
}

DeltaComplex matching_complex(std::size_t n) { return graph_complex(GraphFamily::matchings(complete_graph(n))); }

ConnectivityBound connectivity_bound(int m, int n) {
  if (m < 1 || n < 1) throw DomainError("connectivity_bound: board sizes must be positive");
  const int third = (m + n + 1) / 3;
  return {std::min({m, n, third}), std::min(m, n) <= third};
}

std::string matching_id(const Matching& matching) {
  auto square = [](const std::pair<int, int>& p) {
    return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
  };
  if (matching.size() == 1) return square(matching.front());
  std::string s = "{";
  for (std::size_t k = 0; k < matching.size(); ++k) {
    if (k) s += ',';
    s += square(matching[k]);
  }
  return s + "}";
}

Matching parse_matching(const std::string& text) {
  static const std::regex pair(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  Matching out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pair); it != std::sregex_iterator(); ++it)
    out.emplace_back(std::stoi((*it)[1]), std::stoi((*it)[2]));
  if (out.empty()) throw DomainError("cannot parse matching '" + text + "'");
  std::sort(out.begin(), out.end());
  for (std::size_t k = 1; k < out.size(); ++k)
    for (std::size_t l = 0; l < k; ++l)
      if (out[k].first == out[l].first || out[k].second == out[l].second)
        throw DomainError("matching '" + text + "' puts two rooks in one row or column");
  return out;
}

}  // namespace braidcx
