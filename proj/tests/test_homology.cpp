#include <numeric>
#include <random>

#include "doctest.h"

#include "braidcx/acceptance.hpp"
#include "braidcx/chain_complex.hpp"
#include "braidcx/error.hpp"
#include "braidcx/graph_family.hpp"
#include "braidcx/homology.hpp"
#include "braidcx/smith.hpp"

using namespace braidcx;

namespace {

IntegerMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
  IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (int x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

Integer det(IntegerMatrix a) {
  const Eigen::Index n = a.rows();
  Integer sign = 1, prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      a.row(k).swap(a.row(r));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : sign * a(n - 1, n - 1);
}

Integer gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) return out.push_back(cur);
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors, s_k = d_k / d_{k-1}.
std::vector<Integer> determinantal_factors(const IntegerMatrix& m) {
  std::vector<Integer> out;
  Integer previous = 1;
  for (int k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    subsets(static_cast<int>(m.rows()), k, 0, cur, rs);
    subsets(static_cast<int>(m.cols()), k, 0, cur, cs);
    Integer g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        IntegerMatrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub(i, j) = m(r[static_cast<std::size_t>(i)], c[static_cast<std::size_t>(j)]);
        g = gcd(g, det(sub));
      }
    if (g == 0) break;
    out.push_back(g / previous);
    previous = g;
  }
  return out;
}

BoundaryMatrix sparse(const IntegerMatrix& m) {
  BoundaryMatrix s(m.rows(), m.cols());
  std::vector<Eigen::Triplet<int>> t;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) t.emplace_back(static_cast<int>(i), static_cast<int>(j), m(i, j).convert_to<int>());
  s.setFromTriplets(t.begin(), t.end());
  return s;
}

std::string sid(const std::vector<std::size_t>& s) {
  std::string id = "s";
  for (auto v : s) id += std::to_string(v);
  return id;
}

DeltaComplex triangle_boundary() { return simplicial_complex({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}}, sid); }

DeltaComplex rp2() {
  std::vector<std::vector<std::size_t>> t = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                                             {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  return simplicial_complex({"1", "2", "3", "4", "5", "6"}, t, sid);
}

}  // namespace

TEST_CASE("Smith normal form examples") {
  auto a = smith_normal_form(mat({{2, 0}, {0, 3}}));
  CHECK(a.diagonal == std::vector<Integer>{1, 6});
  auto b = smith_normal_form(mat({{2, 4}, {2, 2}}));
  CHECK(b.diagonal == std::vector<Integer>{2, 2});
  auto z = smith_normal_form(IntegerMatrix(IntegerMatrix::Zero(3, 2)));
  CHECK(z.diagonal.empty());
  CHECK(z.rank == 0);
  CHECK(smith_normal_form(IntegerMatrix(0, 0)).rank == 0);
}

TEST_CASE("Smith normal form agrees with determinantal divisors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const Eigen::Index r = 1 + rng() % 4, c = 1 + rng() % 4;
    IntegerMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = static_cast<int>(rng() % 13) - 6;
    const auto want = determinantal_factors(m);
    const auto got = smith_normal_form(m, true);
    CHECK(got.diagonal == want);
    CHECK(got.rank == static_cast<Eigen::Index>(want.size()));
    CHECK(invariant_factors(sparse(m)) == want);
    IntegerMatrix d = IntegerMatrix::Zero(r, c);
    for (std::size_t k = 0; k < got.diagonal.size(); ++k) d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = got.diagonal[k];
    CHECK(IntegerMatrix(*got.left * m * *got.right) == d);
    CHECK(abs(det(*got.left)) == 1);
    CHECK(abs(det(*got.right)) == 1);
  }
}

TEST_CASE("Smith normal form over machine integers") {
  DenseMatrix<long> m(2, 2);
  m << 4, 6, 6, 4;
  CHECK(smith_normal_form(m).diagonal == std::vector<long>{2, 10});
}

TEST_CASE("boundary matrices") {
  const DeltaComplex edge = simplicial_complex({"a", "b"}, {{0, 1}}, sid);
  const auto d = boundary_matrices(edge);
  REQUIRE(d.size() == 2);
  CHECK(to_dense(d[1]) == mat({{-1}, {1}}));
  CHECK(to_dense(d[0]) == mat({{1, 1}}));
  const auto t = boundary_matrices(triangle_boundary());
  CHECK(smith_normal_form(to_dense(t[1])).rank == 2);
  const auto c = boundary_matrices(chessboard_complex(3, 3));
  CHECK(c[2].rows() == 18);
  CHECK(c[2].cols() == 6);
  CHECK(boundary_squares_to_zero(augmented_chain_complex(chessboard_complex(3, 4))));
}

TEST_CASE("reduced homology of standard spaces") {
  const HomologyReport circle = reduced_homology(triangle_boundary());
  CHECK(circle.betti_at(1) == 1);
  CHECK(circle.betti_at(0) == 0);
  CHECK(circle.betti_at(-1) == 0);
  CHECK(circle.euler_consistent);

  const HomologyReport two = reduced_homology(chessboard_complex(2, 2));
  CHECK(two.betti_at(0) == 1);
  CHECK(two.betti_at(1) == 0);

  const HomologyReport empty = reduced_homology(DeltaComplex{});
  CHECK(empty.betti_at(-1) == 1);

  const HomologyReport p = reduced_homology(rp2());
  CHECK(p.betti_at(1) == 0);
  CHECK(p.betti_at(2) == 0);
  CHECK(p.torsion_at(1) == std::vector<Integer>{2});
  CHECK_FALSE(p.torsion_free());
  const auto mod2 = reduced_betti_mod_p(rp2(), 2);
  CHECK(mod2[2] == 1);  // index i + 1 holds degree i
  CHECK(mod2[3] == 1);
  CHECK(reduced_betti_mod_p(rp2(), 3)[2] == 0);

  const HomologyReport not2 = reduced_homology(graph_complex(GraphFamily::not_2_connected(complete_graph(4))));
  for (int i = -1; i <= not2.max_degree(); ++i) CHECK(not2.betti_at(i) == (i == 3 ? 2u : 0u));
}

TEST_CASE("relative homology") {
  const DeltaComplex edge = simplicial_complex({"a", "b"}, {{0, 1}}, sid);
  const DeltaComplex ends = edge.skeleton(0);
  const HomologyReport rel = relative_homology(edge, ends);
  CHECK(rel.betti_at(1) == 1);
  CHECK(rel.betti_at(0) == 0);
  const HomologyReport point = relative_homology(edge, edge.full_subcomplex([](std::size_t v) { return v == 0; }));
  CHECK(point.vanishes_through(1));
  CHECK_THROWS_AS(relative_homology(edge, triangle_boundary()), DomainError);
}

TEST_CASE("sphericity") {
  CHECK(is_homology_spherical(triangle_boundary(), 1));
  CHECK(is_homology_spherical(chessboard_complex(2, 3), 1));
  CHECK_FALSE(is_homology_spherical(chessboard_complex(2, 2), 1));
  CHECK_FALSE(is_homology_spherical(triangle_boundary(), 2));
  CHECK(is_homology_spherical(DeltaComplex{}, -1));
}

TEST_CASE("Euler characteristic and mod-p ranks on random complexes") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const DeltaComplex x = random_strict_complex(seed);
    CHECK(x.is_strict());
    const HomologyReport h = reduced_homology(x);
    long chi = -1, homological = 0;
    const auto f = x.f_vector();
    for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1L : 1L) * static_cast<long>(f[d]);
    for (int i = h.min_degree; i <= h.max_degree(); ++i) homological += (i % 2 ? -1L : 1L) * static_cast<long>(h.betti_at(i));
    CHECK(chi == homological);
    CHECK(boundary_squares_to_zero(augmented_chain_complex(x)));
    // Universal coefficients: mod-p Betti numbers exceed rational ones exactly by p-torsion.
    const auto mod5 = reduced_betti_mod_p(x, 5);
    bool five_torsion = false;
    for (int i = h.min_degree; i <= h.max_degree(); ++i)
      for (const auto& t : h.torsion_at(i)) five_torsion |= t % 5 == 0;
    if (!five_torsion)
      for (int i = h.min_degree; i <= h.max_degree(); ++i) CHECK(mod5[static_cast<std::size_t>(i + 1)] == h.betti_at(i));
  }
}
