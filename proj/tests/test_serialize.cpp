#include "doctest.h"

#include "braidcx/acceptance.hpp"
#include "braidcx/error.hpp"
#include "braidcx/serialize.hpp"

using namespace braidcx;

TEST_CASE("complex round trip") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const DeltaComplex x = random_strict_complex(seed);
    const Json j = to_json(x);
    CHECK(to_json(complex_from_json(Json::parse(j.dump()))) == j);
  }
  const Json edge = Json::parse(R"({"cells": [[1, "e", ["b", "a"]], [0, "a", []], [0, "b", []]]})");
  const DeltaComplex x = complex_from_json(edge);
  CHECK(x.f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(to_json(x).dump() == R"({"cells":[[0,"a",[]],[0,"b",[]],[1,"e",["b","a"]]]})");
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"cells": [[1, "e"]]})")), DomainError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"cellz": []})")), DomainError);
}

TEST_CASE("poset round trip") {
  const Poset p({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
  const Json j = to_json(p);
  CHECK(poset_from_json(j) == p);
  CHECK_THROWS_AS(poset_from_json(Json::parse(R"({"cells": [[0, "a", []], [0, "c", ["a"]]]})")), DomainError);
}

TEST_CASE("graphs and families") {
  const MultiGraph g = complete_bipartite_graph(2, 2);
  CHECK(to_json(graph_from_json(to_json(g))) == to_json(g));
  const GraphFamily f = family_from_json(Json::parse(R"({"ground": "K3", "family": "forests"})"));
  CHECK(f.kind() == FamilyKind::forests);
  CHECK_THROWS_AS(family_from_json(Json::parse(R"({"ground": "K3", "family": "trees"})")), DomainError);
}

TEST_CASE("partial braid round trip") {
  const PartialBraid p(3, 3, {1, 2}, {2, 1}, BraidWord::parse("s1 s1 s1", 2));
  CHECK(partial_braid_from_json(to_json(p)) == p);
  const PartialBraid frozen(2, 2, {2}, {2}, BraidWord(2, {}), straight_lift(2, 2, {{1, 1}}).link_context());
  CHECK(partial_braid_from_json(to_json(frozen)) == frozen);
  CHECK(to_json(p)["beta"] == "s1 s1 s1");
}

TEST_CASE("reports") {
  const HomologyReport h = reduced_homology(chessboard_complex(2, 2));
  const Json j = to_json(h);
  CHECK(j["betti"]["0"] == 1);
  CHECK(to_csv(h) == "degree,betti,torsion\n-1,0,\n0,1,\n1,0,\n");
  const Json cm = to_json(cm_check(chessboard_complex(2, 2)));
  CHECK(cm["verdict"] == "fail");
  CHECK(cm["witness"]["kind"] == "complex");
  CHECK(cm["note"] == kHomologicalOnly);
  CHECK(to_json(normal_form(BraidWord::parse("s1 s2 s1", 3)))["normal_form"] == "D^1");
  CHECK(dump(Json(true)) == "true\n");
  CHECK(heights_from_json(Json::parse(R"({"a": 1, "b": 2})")).at("b") == 2);
  CHECK_THROWS_AS(heights_from_json(Json::parse("[1]")), DomainError);
}
