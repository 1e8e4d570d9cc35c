#include <random>

#include "doctest.h"

#include "braidcx/delta_complex.hpp"
#include "braidcx/error.hpp"
#include "braidcx/poset.hpp"

using namespace braidcx;

namespace {

Poset edge_poset() { return Poset({"a", "b", "e"}, {{"a", "e"}, {"b", "e"}}); }

std::vector<std::string> ids(const Poset& p) { return p.elements(); }

}  // namespace

TEST_CASE("neighborhoods of an edge") {
  const Poset p = edge_poset();
  CHECK(ids(poset_neighborhood(p, "e", Neighborhood::closure)) == std::vector<std::string>{"a", "b", "e"});
  CHECK(ids(poset_neighborhood(p, "a", Neighborhood::link)) == std::vector<std::string>{"e"});
  CHECK(poset_neighborhood(p, "a", Neighborhood::boundary).empty());
  CHECK(ids(poset_neighborhood(p, "a", Neighborhood::star)) == std::vector<std::string>{"a", "e"});
  CHECK_THROWS_AS(poset_neighborhood(p, "z", Neighborhood::link), DomainError);
}

TEST_CASE("open intervals in the face poset of a triangle") {
  DeltaComplex tri = simplicial_complex({"1", "2", "3"}, {{0, 1, 2}}, [](const std::vector<std::size_t>& s) {
    std::string id = "s";
    for (auto v : s) id += std::to_string(v + 1);
    return id;
  });
  const Poset p = cell_poset(tri);
  CHECK(ids(open_interval(p, "1", "s123")) == std::vector<std::string>{"s12", "s13"});
  CHECK(open_interval(p, "1", "1").empty());
  CHECK(open_interval(p, "1", "2").empty());
  CHECK(open_interval(p, "s123", "1").empty());
}

TEST_CASE("construction closes and reduces the relation") {
  const Poset p({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(p.less(p.index_of("a"), p.index_of("c")));
  CHECK(p.lower_covers(p.index_of("c")) == std::vector<std::size_t>{p.index_of("b")});
  CHECK(p.height(p.index_of("c")) == 2);
  CHECK(p.dimension() == 2);
  CHECK(Poset().dimension() == -1);
  CHECK_THROWS_AS(Poset({"a", "b"}, {{"a", "b"}, {"b", "a"}}), DomainError);
  CHECK_THROWS_AS(Poset({"a"}, {{"a", "a"}}), DomainError);
  CHECK_THROWS_AS(Poset({"a"}, {{"a", "x"}}), DomainError);
  CHECK_THROWS_AS(Poset({"a", "a"}, {}), DomainError);
}

TEST_CASE("order matches reachability on random relations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    std::vector<std::string> elements;
    for (int i = 0; i < n; ++i) elements.push_back("p" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> rel;
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) {
          rel.emplace_back(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]);
          reach[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
        }
    // Warshall closure as the oracle.
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (reach[a][k] && reach[k][b]) reach[a][b] = true;
    const Poset p(elements, rel);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        CHECK(p.less(p.index_of(elements[a]), p.index_of(elements[b])) == reach[a][b]);
    // Covers are exactly the relations with nothing strictly between.
    for (std::size_t b = 0; b < p.size(); ++b)
      for (std::size_t a : p.lower_covers(b)) {
        CHECK(p.less(a, b));
        for (std::size_t c = 0; c < p.size(); ++c) CHECK_FALSE((p.less(a, c) && p.less(c, b)));
      }
    // Heights are longest chain lengths.
    for (std::size_t b = 0; b < p.size(); ++b) {
      int want = 0;
      for (std::size_t a : p.lower_covers(b)) want = std::max(want, p.height(a) + 1);
      CHECK(p.height(b) == want);
    }
  }
}

TEST_CASE("induced subposets keep the order") {
  const Poset p({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  const Poset q = p.induced({p.index_of("a"), p.index_of("d")});
  CHECK(q.size() == 2);
  CHECK(q.less(q.index_of("a"), q.index_of("d")));
  CHECK(q.cover_pairs() == std::vector<std::pair<std::string, std::string>>{{"a", "d"}});
}
