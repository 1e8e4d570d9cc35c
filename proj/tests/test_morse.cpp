#include "doctest.h"

#include "braidcx/acceptance.hpp"
#include "braidcx/error.hpp"
#include "braidcx/graph_family.hpp"
#include "braidcx/morse.hpp"

using namespace braidcx;

namespace {

HeightFunction columns(const DeltaComplex& x) {
  HeightFunction h;
  for (const auto& v : x.cells(0)) h[v.id] = parse_matching(v.id).front().second;
  return h;
}

DeltaComplex edge() {
  return simplicial_complex({"a", "b"}, {{0, 1}}, [](const std::vector<std::size_t>&) { return std::string("ab"); });
}

}  // namespace

TEST_CASE("height validation") {
  const DeltaComplex x = chessboard_complex(2, 3);
  CHECK_NOTHROW(validate_heights(x, columns(x)));
  HeightFunction flat = columns(x);
  flat["(2,1)"] = 2;
  try {
    validate_heights(x, flat);
    FAIL("expected InvalidHeightError");
  } catch (const InvalidHeightError& e) {
    CHECK(e.witness_cell == "{(1,2),(2,1)}");
  }
  HeightFunction missing = columns(x);
  missing.erase("(1,1)");
  CHECK_THROWS_AS(validate_heights(x, missing), DomainError);
}

TEST_CASE("descending links") {
  const DeltaComplex x = chessboard_complex(2, 3);
  const HeightFunction h = columns(x);
  const DeltaComplex dl = descending_link(x, h, "(1,3)");
  CHECK(dl.f_vector() == std::vector<std::size_t>{2});
  CHECK(dl.find("{(1,3),(2,1)}").has_value());
  CHECK(dl.find("{(1,3),(2,2)}").has_value());
  CHECK(descending_link(x, h, "(1,1)").empty());
  CHECK(descending_link(edge(), {{"a", 0}, {"b", 1}}, "b").f_vector() == std::vector<std::size_t>{1});
}

TEST_CASE("sublevel complexes") {
  const DeltaComplex x = chessboard_complex(2, 3);
  const HeightFunction h = columns(x);
  CHECK(sublevel_complex(x, h, 2).f_vector() == std::vector<std::size_t>{4, 2});
  CHECK(sublevel_complex(x, h, 3).f_vector() == x.f_vector());
  CHECK(sublevel_complex(x, h, 0).empty());
}

TEST_CASE("bb_verify") {
  const DeltaComplex x = chessboard_complex(2, 3);
  const MorseReport r = bb_verify(x, columns(x), 2, -1);
  CHECK(r.hypothesis_holds);
  CHECK(r.verdict == Verdict::pass);
  CHECK(r.sublevel.betti_at(0) == 1);
  CHECK(r.whole.betti_at(0) == 0);

  const MorseReport e = bb_verify(edge(), {{"a", 0}, {"b", 1}}, 0, -1);
  CHECK(e.verdict == Verdict::pass);

  // An isolated top vertex has an empty descending link: no prediction.
  DeltaComplex::Builder b;
  b.add(0, "a", {}).add(0, "b", {}).add(0, "c", {}).add(1, "ab", {"b", "a"});
  const MorseReport iso = bb_verify(b.build(), {{"a", 0}, {"b", 1}, {"c", 2}}, 1, -1);
  CHECK_FALSE(iso.hypothesis_holds);
  CHECK(iso.verdict == Verdict::inconclusive);
  REQUIRE(iso.witness);
  CHECK(iso.witness->kind == "vertex");
  CHECK(iso.witness->ids == std::vector<std::string>{"c"});
  CHECK(iso.whole.betti_at(0) == 1);

  CHECK_THROWS_AS(bb_verify(edge(), {{"a", 0}, {"b", 0}}, 0, -1), InvalidHeightError);
}

TEST_CASE("bb_verify never contradicts itself on random complexes") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const DeltaComplex x = random_strict_complex(seed);
    HeightFunction h;
    long k = 0;
    for (const auto& v : x.cells(0)) h[v.id] = k++;
    for (long t = -1; t <= k; ++t)
      for (int d = -1; d <= 2; ++d) CHECK(bb_verify(x, h, t, d).verdict != Verdict::fail);
  }
}
