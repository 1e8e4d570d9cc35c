#include "braidcx/serialize.hpp"

#include <sstream>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

Json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return x.convert_to<long long>();
  return x.str();
}

std::string label(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw DomainError("json: expected a string or integer label, got " + j.dump());
}

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string(what) + ": malformed JSON (" + e.what() + ")");
  }
}

}  // namespace

Json to_json(const DeltaComplex& complex) {
  Json cells = Json::array();
  for (int d = 0; d <= complex.dimension(); ++d)
    for (const auto& c : complex.cells(d)) {
      Json faces = Json::array();
      for (std::size_t f : c.faces) faces.push_back(complex.cells(d - 1)[f].id);
      cells.push_back(Json::array({d, c.id, faces}));
    }
  Json out;
  out["cells"] = cells;
  return out;
}

DeltaComplex complex_from_json(const Json& json) {
  return guarded("complex", [&] {
    DeltaComplex::Builder b;
    for (const auto& cell : json.at("cells")) {
      if (!cell.is_array() || cell.size() != 3) throw DomainError("complex: each cell is [dim, id, [faces]]");
      std::vector<std::string> faces;
      for (const auto& f : cell.at(2)) faces.push_back(label(f));
      b.add(cell.at(0).get<int>(), label(cell.at(1)), std::move(faces));
    }
    return b.build();
  });
}

Json to_json(const Poset& poset) {
  std::vector<std::size_t> order(poset.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return poset.height(a) < poset.height(b); });
  Json cells = Json::array();
  for (std::size_t i : order) {
    Json lower = Json::array();
    for (std::size_t l : poset.lower_covers(i)) lower.push_back(poset.id(l));
    cells.push_back(Json::array({poset.height(i), poset.id(i), lower}));
  }
  Json out;
  out["cells"] = cells;
  return out;
}

Poset poset_from_json(const Json& json) {
  return guarded("poset", [&] {
    std::vector<std::string> ids;
    std::vector<int> dims;
    std::vector<std::pair<std::string, std::string>> relation;
    for (const auto& cell : json.at("cells")) {
      if (!cell.is_array() || cell.size() != 3) throw DomainError("poset: each element is [height, id, [lower]]");
      ids.push_back(label(cell.at(1)));
      dims.push_back(cell.at(0).get<int>());
      for (const auto& f : cell.at(2)) relation.emplace_back(label(f), ids.back());
    }
    Poset p(ids, relation);
    for (std::size_t k = 0; k < ids.size(); ++k)
      if (p.height(p.index_of(ids[k])) != dims[k])
        throw DomainError("poset: element '" + ids[k] + "' is listed with height " + std::to_string(dims[k]) +
                          " but has height " + std::to_string(p.height(p.index_of(ids[k]))));
    return p;
  });
}

Json to_json(const MultiGraph& graph) {
  Json out;
  out["vertices"] = graph.vertices();
  Json edges = Json::array();
  for (const auto& e : graph.edges())
    edges.push_back(Json::array({graph.vertices()[e.u], graph.vertices()[e.v], e.id}));
  out["edges"] = edges;
  return out;
}

MultiGraph graph_from_json(const Json& json) {
  return guarded("graph", [&] {
    std::vector<std::string> vertices;
    for (const auto& v : json.at("vertices")) vertices.push_back(label(v));
    std::vector<Edge> edges;
    MultiGraph bare(vertices, {});
    for (const auto& e : json.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw DomainError("graph: each edge is [u, v, id]");
      edges.push_back({bare.vertex_index(label(e.at(0))), bare.vertex_index(label(e.at(1))), label(e.at(2))});
    }
    return MultiGraph(std::move(vertices), std::move(edges));
  });
}

GraphFamily family_from_json(const Json& json) {
  return guarded("family", [&] {
    const Json& ground = json.at("ground");
    MultiGraph g = ground.is_string() ? named_graph(ground.get<std::string>()) : graph_from_json(ground);
    return GraphFamily::builtin(family_kind_from_string(json.at("family").get<std::string>()), std::move(g));
  });
}

Json to_json(const PartialBraid& braid) {
  Json out;
  out["m"] = braid.m();
  out["n"] = braid.n();
  out["S"] = braid.bottoms();
  out["T"] = braid.tops();
  out["beta"] = braid.braid().str();
  if (braid.frozen().empty()) {
    out["frozen"] = Json::array();
  } else {
    Json f;
    f["bottom"] = braid.frozen().bottoms;
    f["top"] = braid.frozen().tops;
    f["braid"] = braid.frozen().braid.str();
    out["frozen"] = f;
  }
  return out;
}

PartialBraid partial_braid_from_json(const Json& json) {
  return guarded("partial braid", [&] {
    FrozenContext frozen;
    if (json.contains("frozen") && json.at("frozen").is_object()) {
      const Json& f = json.at("frozen");
      frozen.bottoms = f.at("bottom").get<std::vector<int>>();
      frozen.tops = f.at("top").get<std::vector<int>>();
      frozen.braid = BraidWord::parse(f.value("braid", std::string("e")), static_cast<int>(frozen.bottoms.size()));
    } else if (json.contains("frozen") && !(json.at("frozen").is_array() && json.at("frozen").empty()) &&
               !json.at("frozen").is_null()) {
      throw DomainError("partial braid: frozen must be [] or an object");
    }
    const auto bottoms = json.at("S").get<std::vector<int>>();
    const int strands = static_cast<int>(bottoms.size() + frozen.size());
    return PartialBraid(json.at("m").get<int>(), json.at("n").get<int>(), bottoms,
                        json.at("T").get<std::vector<int>>(),
                        BraidWord::parse(json.value("beta", std::string("e")), std::max(strands, 1)), frozen);
  });
}

HeightFunction heights_from_json(const Json& json) {
  return guarded("heights", [&] {
    if (!json.is_object()) throw DomainError("heights: expected an object {vertex_id: height}");
    HeightFunction h;
    for (const auto& [k, v] : json.items()) h[k] = v.get<long>();
    return h;
  });
}

Json to_json(const HomologyReport& report) {
  Json betti = Json::object(), torsion = Json::object();
  for (int i = report.min_degree; i <= report.max_degree(); ++i) {
    betti[std::to_string(i)] = report.betti_at(i);
    Json t = Json::array();
    for (const auto& x : report.torsion_at(i)) t.push_back(integer_json(x));
    torsion[std::to_string(i)] = t;
  }
  Json out;
  out["chain_ranks"] = report.chain_ranks;
  out["betti"] = betti;
  out["torsion"] = torsion;
  out["euler_check"] = report.euler_consistent;
  return out;
}

Json to_json(const Witness& witness) {
  Json out;
  out["kind"] = witness.kind;
  out["ids"] = witness.ids;
  out["expected_dimension"] = witness.expected_dimension;
  out["dimension"] = witness.actual_dimension;
  const Json h = to_json(witness.homology);
  out["betti"] = h["betti"];
  out["torsion"] = h["torsion"];
  return out;
}

namespace {

Json optional_witness(const std::optional<Witness>& w) { return w ? to_json(*w) : Json(nullptr); }

}  // namespace

Json to_json(const CMReport& report) {
  Json out;
  out["verdict"] = to_string(report.verdict);
  out["dimension"] = report.dimension;
  const Json h = to_json(report.homology);
  out["betti"] = h["betti"];
  out["torsion"] = h["torsion"];
  out["subcomplexes_checked"] = report.subcomplexes_checked;
  out["witness"] = optional_witness(report.witness);
  out["note"] = kHomologicalOnly;
  return out;
}

Json to_json(const QuillenReport& report) {
  Json out;
  out["verdict"] = to_string(report.verdict);
  out["dimension"] = report.dimension;
  out["target"] = to_json(report.target);
  Json fibers = Json::array();
  for (const auto& f : report.fibers) {
    Json j;
    j["element"] = f.element;
    j["height"] = f.height;
    j["verdict"] = to_string(f.report.verdict);
    j["dimension"] = f.report.dimension;
    fibers.push_back(j);
  }
  out["fibers"] = fibers;
  out["fiber_requirement"] = "closed fiber over y is Cohen-Macaulay of dimension height(y)";
  out["source"] = report.source ? to_json(*report.source) : Json(nullptr);
  out["conclusion_consistent"] = report.conclusion_consistent;
  out["witness"] = optional_witness(report.witness);
  out["note"] = kHomologicalOnly;
  return out;
}

Json to_json(const MorseReport& report) {
  Json out;
  out["verdict"] = to_string(report.verdict);
  out["level"] = report.level;
  out["degree"] = report.degree;
  out["hypothesis_holds"] = report.hypothesis_holds;
  Json links = Json::array();
  for (const auto& l : report.descending_links) {
    Json j;
    j["vertex"] = l.vertex;
    j["height"] = l.height;
    j["dimension"] = l.dimension;
    j["betti"] = to_json(l.homology)["betti"];
    j["satisfied"] = l.connected_enough;
    links.push_back(j);
  }
  out["descending_links"] = links;
  out["sublevel"] = to_json(report.sublevel);
  out["whole"] = to_json(report.whole);
  out["relative"] = to_json(report.relative);
  out["relative_vanishes"] = report.relative_vanishes;
  out["witness"] = optional_witness(report.witness);
  out["note"] = kHomologicalOnly;
  return out;
}

Json to_json(const Pi1Report& report) {
  Json out;
  out["verdict"] = to_string(report.verdict);
  out["initial_generators"] = report.initial_generators;
  out["initial_relators"] = report.initial_relators;
  out["remaining_generators"] = report.remaining_generators;
  out["remaining_relators"] = report.remaining_relators;
  out["steps"] = report.steps;
  return out;
}

Json to_json(const GarsideNormalForm& nf) {
  Json out;
  out["strands"] = nf.strands;
  out["infimum"] = nf.infimum;
  out["canonical_length"] = nf.canonical_length();
  out["factors"] = nf.factors;
  out["normal_form"] = nf.str();
  return out;
}

std::string to_csv(const HomologyReport& report) {
  std::ostringstream out;
  out << "degree,betti,torsion\n";
  for (int i = report.min_degree; i <= report.max_degree(); ++i) {
    out << i << ',' << report.betti_at(i) << ',';
    const auto t = report.torsion_at(i);
    for (std::size_t k = 0; k < t.size(); ++k) out << (k ? ";" : "") << t[k].str();
    out << '\n';
  }
  return out.str();
}

std::string dump(const Json& json) { return json.dump(2) + "\n"; }

}  // namespace braidcx
