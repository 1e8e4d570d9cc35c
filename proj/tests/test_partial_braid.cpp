#include <random>

#include "doctest.h"

#include "braidcx/cohen_macaulay.hpp"
#include "braidcx/error.hpp"
#include "braidcx/homology.hpp"
#include "braidcx/partial_braid.hpp"

using namespace braidcx;

TEST_CASE("faces of a straight partial braid") {
  const PartialBraid p = straight_lift(4, 4, {{1, 3}, {2, 1}, {4, 4}});
  CHECK(p.project() == Matching{{1, 3}, {2, 1}, {4, 4}});
  const auto faces = p.faces();
  REQUIRE(faces.size() == 3);
  CHECK(faces[0].project() == Matching{{2, 1}, {4, 4}});
  CHECK(faces[1].project() == Matching{{1, 3}, {4, 4}});
  CHECK(faces[2].project() == Matching{{1, 3}, {2, 1}});
  for (const auto& f : faces) {
    CHECK(f.strand_count() == 2);
    CHECK(f == straight_lift(4, 4, f.project()));
  }
  CHECK(straight_lift(3, 3, {{2, 1}}).faces().empty());
  CHECK(straight_lift(3, 3, {{2, 1}}).project() == Matching{{2, 1}});
}

TEST_CASE("projection of braided cells") {
  const PartialBraid twist(2, 2, {1, 2}, {1, 2}, BraidWord::parse("s1", 2));
  CHECK(twist.project() == Matching{{1, 2}, {2, 1}});
  const PartialBraid pure(2, 2, {1, 2}, {1, 2}, BraidWord::parse("s1 s1", 2));
  CHECK(pure.project() == Matching{{1, 1}, {2, 2}});
  for (const auto& f : pure.faces()) CHECK(f.braid().letters.empty());
  CHECK(pure.faces()[0] == straight_lift(2, 2, {{2, 2}}));
  CHECK(pure.faces()[1] == straight_lift(2, 2, {{1, 1}}));
}

TEST_CASE("validation and equality") {
  CHECK_THROWS_AS(PartialBraid(2, 2, {1, 1}, {1, 2}, BraidWord(2, {})), DomainError);
  CHECK_THROWS_AS(PartialBraid(2, 2, {1, 3}, {1, 2}, BraidWord(2, {})), DomainError);
  CHECK_THROWS_AS(PartialBraid(2, 2, {1}, {1, 2}, BraidWord(2, {})), DomainError);
  CHECK_THROWS_AS(lift(2, 2, {{1, 1}, {2, 2}}, BraidWord::parse("s1", 2)), DomainError);
  const PartialBraid a(3, 3, {1, 2}, {1, 2}, BraidWord::parse("s1 s1 s1 s1'", 2));
  const PartialBraid b(3, 3, {1, 2}, {1, 2}, BraidWord::parse("s1 s1", 2));
  CHECK(a == b);
  CHECK(a.id() == b.id());
}

TEST_CASE("link contexts") {
  const PartialBraid v = straight_lift(2, 2, {{1, 1}});
  const FrozenContext c = v.link_context();
  CHECK(c.size() == 1);
  CHECK(c.bottoms == std::vector<int>{1});
  CHECK(c.tops == std::vector<int>{1});
  const FrozenContext two = straight_lift(3, 3, {{1, 1}, {2, 2}}).link_context();
  CHECK(two.size() == 2);

  // Freezing a vertex inside the link of a vertex equals freezing the edge they span.
  const PartialBraid edge = straight_lift(3, 3, {{1, 2}, {3, 1}});
  const PartialBraid first(3, 3, {3}, {1}, edge.braid(), straight_lift(3, 3, {{1, 2}}).link_context());
  CHECK(first.link_context() == edge.link_context());

  // A cell in the link carries the frozen strand in its id.
  const PartialBraid inside(2, 2, {2}, {2}, BraidWord(2, {}), c);
  CHECK(inside.id() != straight_lift(2, 2, {{2, 2}}).id());
  CHECK_THROWS_AS(PartialBraid(2, 2, {1}, {2}, BraidWord(2, {}), c), DomainError);
}

TEST_CASE("closure complexes") {
  const BraidedComplex one = closure_complex({straight_lift(2, 2, {{1, 1}, {2, 2}})});
  CHECK(one.complex.f_vector() == std::vector<std::size_t>{2, 1});
  const BraidedComplex bigon = closure_complex({straight_lift(2, 2, {{1, 1}, {2, 2}}),
                                                PartialBraid(2, 2, {1, 2}, {1, 2}, BraidWord::parse("s1 s1", 2))});
  CHECK(bigon.complex.f_vector() == std::vector<std::size_t>{2, 2});
  CHECK(reduced_homology(bigon.complex).betti_at(1) == 1);
  const BraidedComplex straight = straight_lift_complex(3, 3);
  CHECK(straight.complex.f_vector() == std::vector<std::size_t>{9, 18, 6});
  CHECK(straight.complex.is_strict());
  CHECK_THROWS_AS(closure_complex({straight_lift(2, 2, {{1, 1}}), straight_lift(3, 3, {{1, 1}})}), DomainError);
  CHECK_THROWS_AS(straight_lift_complex(4, 4, 10), BudgetExceeded);
}

TEST_CASE("truncated fibers") {
  CHECK(truncated_fiber(3, 3, {{2, 3}}, {}, 3).complex.f_vector() == std::vector<std::size_t>{1});
  const BraidedComplex f = truncated_fiber(2, 2, {{1, 1}, {2, 2}}, {}, 2);
  CHECK(f.complex.f_vector() == std::vector<std::size_t>{2, 3});
  CHECK(reduced_homology(f.complex).betti_at(1) == 2);
  CHECK(reduced_homology(f.complex).betti_at(0) == 0);
  CHECK(truncated_fiber(2, 2, {{1, 1}, {2, 2}}, {}, 0).complex.f_vector() == std::vector<std::size_t>{2, 1});
  CHECK(truncated_fiber(2, 2, {{1, 2}, {2, 1}}, {}, 1).complex.f_vector() == std::vector<std::size_t>{2, 2});
  // Over a 2-simplex of the 3 x 3 board every fiber is connected.
  const BraidedComplex big = truncated_fiber(3, 3, {{1, 1}, {2, 2}, {3, 3}}, {}, 1);
  CHECK(reduced_homology(big.complex).betti_at(0) == 0);
  for (const auto& [id, cell] : big.cells) CHECK(cell.project().size() == static_cast<std::size_t>(cell.strand_count()));
}

TEST_CASE("truncated complex over a 2 x 4 board") {
  const BraidedComplex t = truncated_complex(2, 4, 2);
  CHECK(t.complex.f_vector() == std::vector<std::size_t>{8, 30});
  CHECK(cm_check(t.complex).verdict == Verdict::pass);
  const auto map = projection_map(t);
  CHECK(map.size() == 38);
  for (const auto& [cell, image] : map) CHECK(image == matching_id(t.cells.at(cell).project()));
}
