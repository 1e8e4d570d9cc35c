#include "doctest.h"

#include "braidcx/delta_complex.hpp"
#include "braidcx/error.hpp"
#include "braidcx/graph_family.hpp"
#include "braidcx/partial_braid.hpp"

using namespace braidcx;

namespace {

std::string sid(const std::vector<std::size_t>& s) {
  std::string id = "s";
  for (auto v : s) id += std::to_string(v);
  return id;
}

DeltaComplex simplex(std::size_t d) {
  std::vector<std::string> labels;
  std::vector<std::size_t> all;
  for (std::size_t i = 0; i <= d; ++i) labels.push_back("v" + std::to_string(i)), all.push_back(i);
  return simplicial_complex(labels, {all}, sid);
}

}  // namespace

TEST_CASE("simplicial complexes are closed downwards") {
  const DeltaComplex x = simplex(3);
  CHECK(x.f_vector() == std::vector<std::size_t>{4, 6, 4, 1});
  CHECK(x.is_strict());
  CHECK(x.skeleton(1).f_vector() == std::vector<std::size_t>{4, 6});
  CHECK(x.skeleton(-1).empty());
  CHECK(x.total_cells() == 15);
  const CellRef top = x.at("s0123");
  CHECK(x.vertices(top) == std::vector<std::size_t>{0, 1, 2, 3});
  // Face i drops slot i.
  CHECK(x.cells(2)[x.cell(top).faces[0]].id == "s123");
  CHECK(x.cells(2)[x.cell(top).faces[3]].id == "s012");
  CHECK_THROWS_AS(x.at("nope"), DomainError);
}

TEST_CASE("builder validates faces") {
  DeltaComplex::Builder b;
  b.add(0, "a", {}).add(0, "b", {}).add(1, "e", {"a", "b"});
  CHECK(b.build().f_vector() == std::vector<std::size_t>{2, 1});

  DeltaComplex::Builder wrong;
  wrong.add(0, "a", {}).add(1, "e", {"a"});
  CHECK_THROWS_AS(wrong.build(), DomainError);

  DeltaComplex::Builder missing;
  missing.add(1, "e", {"a", "b"});
  CHECK_THROWS_AS(missing.build(), DomainError);

  // Faces of a triangle that violate the simplicial identities.
  DeltaComplex::Builder twisted;
  twisted.add(0, "a", {}).add(0, "b", {}).add(0, "c", {});
  twisted.add(1, "ab", {"b", "a"}).add(1, "ac", {"c", "a"}).add(1, "bc", {"c", "b"});
  twisted.add(2, "t", {"ab", "ac", "bc"});
  CHECK_THROWS_AS(twisted.build(), DomainError);

  DeltaComplex::Builder duplicate;
  duplicate.add(0, "a", {});
  CHECK_THROWS_AS(duplicate.add(0, "a", {"x"}), DomainError);
}

TEST_CASE("strictness") {
  DeltaComplex::Builder loop;
  loop.add(0, "a", {}).add(1, "l", {"a", "a"});
  CHECK_FALSE(loop.build().is_strict());
  // Parallel edges are still strict.
  DeltaComplex::Builder bigon;
  bigon.add(0, "a", {}).add(0, "b", {}).add(1, "e", {"b", "a"}).add(1, "f", {"b", "a"});
  CHECK(bigon.build().is_strict());
  CHECK(closure_complex({straight_lift(3, 3, {{1, 2}, {2, 3}, {3, 1}})}).complex.is_strict());
}

TEST_CASE("cell posets") {
  CHECK(cell_poset(simplex(1)).size() == 3);
  CHECK(cell_poset(simplex(1)).dimension() == 1);
  CHECK(cell_poset(DeltaComplex{}).empty());
  const Poset p = cell_poset(chessboard_complex(2, 2));
  int minimal = 0, maximal = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    minimal += p.lower_covers(i).empty();
    maximal += p.upper_covers(i).empty();
  }
  CHECK(minimal == 4);
  CHECK(maximal == 2);
}

TEST_CASE("order complexes") {
  CHECK(order_complex(Poset({"a", "b"}, {{"a", "b"}})).f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(order_complex(Poset({"a", "b"}, {})).f_vector() == std::vector<std::size_t>{2});
  CHECK(order_complex(cell_poset(simplex(1))).f_vector() == std::vector<std::size_t>{3, 2});
  // Barycentric subdivision of a triangle: 7 vertices, 12 edges, 6 triangles.
  CHECK(order_complex(cell_poset(simplex(2))).f_vector() == std::vector<std::size_t>{7, 12, 6});
  const DeltaComplex oc = order_complex(Poset({"a", "b"}, {{"a", "b"}}));
  CHECK(oc.find("(a < b)").has_value());
}

TEST_CASE("links") {
  const DeltaComplex x = simplex(3);
  const DeltaComplex lk = link_complex(x, x.at("v0"));
  CHECK(lk.f_vector() == std::vector<std::size_t>{3, 3, 1});
  CHECK(lk.find("s01").has_value());
  CHECK(link_complex(x, x.at("s0123")).empty());
  // Link of a vertex of a bigon: two points.
  DeltaComplex::Builder bigon;
  bigon.add(0, "a", {}).add(0, "b", {}).add(1, "e", {"b", "a"}).add(1, "f", {"b", "a"});
  const DeltaComplex b = bigon.build();
  CHECK(link_complex(b, b.at("a")).f_vector() == std::vector<std::size_t>{2});
}

TEST_CASE("subcomplexes") {
  const DeltaComplex x = simplex(2);
  const DeltaComplex full = x.full_subcomplex([](std::size_t v) { return v != 2; });
  CHECK(full.f_vector() == std::vector<std::size_t>{2, 1});
  CHECK_THROWS_AS(x.subcomplex([&](CellRef c) { return c.dim == 1; }), DomainError);
}
