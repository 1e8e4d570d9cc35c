#include "braidcx/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "braidcx/braid.hpp"
#include "braidcx/chain_complex.hpp"
#include "braidcx/cohen_macaulay.hpp"
#include "braidcx/error.hpp"
#include "braidcx/graph_family.hpp"
#include "braidcx/homology.hpp"
#include "braidcx/morse.hpp"
#include "braidcx/partial_braid.hpp"
#include "braidcx/smith.hpp"

namespace braidcx {

std::string CriterionResult::line() const {
  char timing[96];
  if (limit > 0) std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", seconds, limit);
  else std::snprintf(timing, sizeof timing, "%.2f s", seconds);
  return std::string(passed ? "[PASS] " : "[FAIL] ") + std::to_string(number) + " " + title + " | " + timing +
         " | " + detail;
}

namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// ---- random braid words and relation rewrites -----------------------------

std::vector<int> random_word(Rng& rng, int k, int length) {
  std::vector<int> w;
  for (int t = 0; t < length; ++t) w.push_back(uniform(rng, 1, k - 1) * (uniform(rng, 0, 1) ? 1 : -1));
  return w;
}

bool adjacent(int a, int b) { return std::abs(std::abs(a) - std::abs(b)) == 1; }

// One braid-group identity applied at a random applicable position.
std::vector<int> rewrite_once(Rng& rng, int k, std::vector<int> w) {
  struct Move {
    int type;
    std::size_t pos;
  };
  std::vector<Move> moves;
  const std::size_t n = w.size();
  for (std::size_t p = 0; p <= n; ++p) moves.push_back({0, p});
  if (k >= 3)
    for (std::size_t p = 0; p <= n; ++p) moves.push_back({6, p});
  for (std::size_t p = 0; p + 1 < n; ++p) {
    if (w[p] == -w[p + 1]) moves.push_back({1, p});
    if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) >= 2) moves.push_back({3, p});
  }
  for (std::size_t p = 0; p + 2 < n; ++p) {
    const int a = w[p], b = w[p + 1], c = w[p + 2];
    if (a == c && adjacent(a, b) && (a > 0) == (b > 0)) moves.push_back({2, p});
    if (a > 0 && b > 0 && c == -a && adjacent(a, b)) moves.push_back({4, p});
    if (a < 0 && b > 0 && c == -a && adjacent(a, b)) moves.push_back({5, p});
  }
  const Move m = moves[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(moves.size()) - 1))];
  auto at = w.begin() + static_cast<std::ptrdiff_t>(m.pos);
  switch (m.type) {
    case 0: {  // insert x x^-1
      const int x = uniform(rng, 1, k - 1) * (uniform(rng, 0, 1) ? 1 : -1);
      w.insert(at, {x, -x});
      break;
    }
    case 1:  // free cancellation
      w.erase(at, at + 2);
      break;
    case 2: {  // a b a = b a b (same signs)
      const int a = w[m.pos], b = w[m.pos + 1];
      w[m.pos] = b;
      w[m.pos + 1] = a;
      w[m.pos + 2] = b;
      break;
    }
    case 3:  // far commutation
      std::swap(w[m.pos], w[m.pos + 1]);
      break;
    case 4: {  // a b a^-1 = b^-1 a b
      const int a = w[m.pos], b = w[m.pos + 1];
      w[m.pos] = -b;
      w[m.pos + 1] = a;
      w[m.pos + 2] = b;
      break;
    }
    case 5: {  // b^-1 a b = a b a^-1, here read as (-b) a b with b = -w[pos]
      const int b = -w[m.pos], a = w[m.pos + 1];
      w[m.pos] = a;
      w[m.pos + 1] = b;
      w[m.pos + 2] = -a;
      break;
    }
    case 6: {  // insert a relator s_i s_i+1 s_i s_i+1^-1 s_i^-1 s_i+1^-1
      const int i = uniform(rng, 1, k - 2);
      w.insert(at, {i, i + 1, i, -(i + 1), -i, -(i + 1)});
      break;
    }
  }
  return w;
}

std::vector<int> rewrite(Rng& rng, int k, std::vector<int> w) {
  const int steps = uniform(rng, 1, 6);
  for (int s = 0; s < steps; ++s) w = rewrite_once(rng, k, std::move(w));
  return w;
}

// ---- exact oracles ---------------------------------------------------------

Integer bareiss_determinant(IntegerMatrix a) {
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

IntegerMatrix random_unimodular(Rng& rng, Eigen::Index n) {
  IntegerMatrix u = IntegerMatrix::Identity(n, n);
  for (int t = 0; t < 20; ++t) {
    const auto i = static_cast<Eigen::Index>(uniform(rng, 0, static_cast<int>(n) - 1));
    const auto j = static_cast<Eigen::Index>(uniform(rng, 0, static_cast<int>(n) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0: u.row(i).swap(u.row(j)); break;
      case 1: u.row(i) *= Integer(-1); break;
      default:
        if (i != j) u.row(i) += Integer(uniform(rng, -3, 3)) * u.row(j);
    }
  }
  return u;
}

long euler_from_cells(const DeltaComplex& x) {
  long chi = -1;
  const auto f = x.f_vector();
  for (std::size_t d = 0; d < f.size(); ++d) chi += (d % 2 ? -1 : 1) * static_cast<long>(f[d]);
  return chi;
}

long euler_from_homology(const HomologyReport& h) {
  long chi = 0;
  for (int i = h.min_degree; i <= h.max_degree(); ++i) chi += (i % 2 ? -1 : 1) * static_cast<long>(h.betti_at(i));
  return chi;
}

template <typename T>
std::string str(const T& x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

// ---- criteria --------------------------------------------------------------

struct Outcome {
  bool passed = true;
  std::string detail;
  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

Outcome chessboard_bound() {
  Outcome out;
  int boards = 0;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const DeltaComplex x = chessboard_complex(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
      const HomologyReport h = reduced_homology(x);
      const int nu = connectivity_bound(m, n).nu;
      ++boards;
      if (!h.vanishes_through(nu - 2))
        out.fail("chessboard(" + str(m) + "," + str(n) + ") has homology at or below degree " + str(nu - 2));
    }
  if (out.passed) out.detail = str(boards) + " boards, reduced homology zero through nu-2";
  return out;
}

Outcome chessboard_cm(unsigned threads) {
  Outcome out;
  int full = 0, skeletal = 0;
  for (int m = 1; m <= 5; ++m)
    for (int n = 1; n <= 5; ++n) {
      const auto bound = connectivity_bound(m, n);
      const DeltaComplex x = chessboard_complex(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
      if (bound.cm_condition) {
        const CMReport r = cm_check(x, threads);
        ++full;
        if (r.verdict != Verdict::pass || r.dimension != std::min(m, n) - 1)
          out.fail("chessboard(" + str(m) + "," + str(n) + ") fails cm_check");
      } else if (m <= 4 && n <= 4) {
        const CMReport r = cm_check(x.skeleton(bound.nu - 1), threads);
        ++skeletal;
        if (r.verdict != Verdict::pass || r.dimension != bound.nu - 1)
          out.fail("(nu-1)-skeleton of chessboard(" + str(m) + "," + str(n) + ") fails cm_check");
      }
    }
  if (out.passed)
    out.detail = str(full) + " boards CM at full dimension (incl. (2,4), (3,5)), " + str(skeletal) +
                 " skeleta CM";
  return out;
}

Outcome not_two_connected() {
  Outcome out;
  const DeltaComplex x = graph_complex(GraphFamily::not_2_connected(complete_graph(4)));
  const HomologyReport h = reduced_homology(x);
  for (int i = h.min_degree; i <= h.max_degree(); ++i) {
    const std::size_t want = i == 3 ? 2 : 0;
    if (h.betti_at(i) != want) out.fail("b~_" + str(i) + " = " + str(h.betti_at(i)));
  }
  if (!h.torsion_free()) out.fail("torsion present");
  if (h.max_degree() < 3) out.fail("complex has dimension below 3");
  if (out.passed) out.detail = "|V| = 4: b~_3 = 2, all other degrees 0, torsion-free";
  return out;
}

Outcome forest_complexes(unsigned threads) {
  Outcome out;
  auto graphs = connected_graphs_up_to_isomorphism(6);
  std::map<std::size_t, std::size_t> by_edges;
  for (const auto& g : graphs) ++by_edges[g.edge_count()];
  const std::vector<std::size_t> expected = {1, 1, 1, 3, 5, 12, 30};
  for (std::size_t e = 0; e < expected.size(); ++e)
    if (by_edges[e] != expected[e])
      out.fail(str(by_edges[e]) + " connected graphs with " + str(e) + " edges, expected " + str(expected[e]));
  graphs.push_back(complete_graph(4));
  for (const auto& g : graphs) {
    const DeltaComplex x = graph_complex(GraphFamily::forests(g));
    const CMReport r = cm_check(x, threads);
    const int want = static_cast<int>(g.vertex_count()) - static_cast<int>(g.component_count()) - 1;
    if (r.verdict != Verdict::pass || r.dimension != want)
      out.fail("forest complex of a graph with " + str(g.vertex_count()) + " vertices and " + str(g.edge_count()) +
               " edges fails");
  }
  if (out.passed) out.detail = str(graphs.size() - 1) + " isomorphism classes plus K4, all CM of dim |V|-c-1";
  return out;
}

Outcome matching_skeleta(unsigned threads) {
  Outcome out;
  for (std::size_t n = 5; n <= 7; ++n) {
    const int nu = static_cast<int>((n + 1) / 3);
    const CMReport r = cm_check(matching_complex(n).skeleton(nu - 1), threads);
    if (r.verdict != Verdict::pass || r.dimension != nu - 1) out.fail("matching complex of K" + str(n) + " fails");
  }
  if (out.passed) out.detail = "K5, K6, K7: (floor((n+1)/3)-1)-skeleton CM";
  return out;
}

Outcome braid_kernel(std::uint64_t seed) {
  Outcome out;
  Rng rng(seed);
  int nf_trials = 0, delete_trials = 0, commute_trials = 0;
  for (int k = 2; k <= 5; ++k)
    for (int t = 0; t < 1000; ++t, ++nf_trials) {
      const BraidWord w(k, random_word(rng, k, uniform(rng, 0, 10)));
      const BraidWord v(k, rewrite(rng, k, w.letters));
      if (!(normal_form(w) == normal_form(v))) out.fail("normal form changed: " + w.str() + " vs " + v.str());
    }
  for (int t = 0; t < 1000; ++t, ++delete_trials) {
    const int k = uniform(rng, 2, 5);
    const BraidWord w(k, random_word(rng, k, uniform(rng, 0, 10)));
    const BraidWord v(k, rewrite(rng, k, w.letters));
    const int s = uniform(rng, 1, k);
    if (!braid_eq(strand_delete(w, s), strand_delete(v, s)))
      out.fail("strand_delete not invariant: " + w.str() + " vs " + v.str() + " at " + str(s));
  }
  for (int t = 0; t < 500; ++t, ++commute_trials) {
    const int k = uniform(rng, 3, 5);
    const BraidWord w(k, random_word(rng, k, uniform(rng, 0, 12)));
    int s = uniform(rng, 1, k), u = uniform(rng, 1, k - 1);
    if (u >= s) ++u;
    if (s > u) std::swap(s, u);  // s < u
    const BraidWord a = strand_delete(strand_delete(w, s), u - 1);
    const BraidWord b = strand_delete(strand_delete(w, u), s);
    if (!braid_eq(a, b)) out.fail("strand deletions do not commute on " + w.str());
  }
  if (out.passed)
    out.detail = str(nf_trials) + " normal-form, " + str(delete_trials) + " deletion, " + str(commute_trials) +
                 " commutation trials";
  return out;
}

bool projection_square(const BraidedComplex& x, std::string& bad) {
  for (const auto& [id, p] : x.cells) {
    const Matching image = p.project();
    const auto faces = p.faces();
    for (std::size_t i = 0; i < faces.size(); ++i) {
      Matching want = image;
      want.erase(want.begin() + static_cast<std::ptrdiff_t>(i));
      if (faces[i].project() != want) {
        bad = id;
        return false;
      }
    }
  }
  return true;
}

Outcome projection_coherence(std::uint64_t seed) {
  Outcome out;
  std::size_t cells = 0;
  std::string bad;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n) {
      const BraidedComplex x = straight_lift_complex(m, n);
      cells += x.cells.size();
      if (!projection_square(x, bad)) out.fail("square fails at " + bad);
    }
  Rng rng(seed);
  std::map<std::pair<int, int>, std::vector<GarsideNormalForm>> windows;
  for (int trial = 0; trial < 200; ++trial) {
    const int m = uniform(rng, 1, 4), n = uniform(rng, 1, 4);
    const int L = uniform(rng, 0, 2);
    std::vector<PartialBraid> seeds;
    for (int s = uniform(rng, 1, 3); s > 0; --s) {
      const int k = uniform(rng, 1, std::min({m, n, 3}));
      auto& window = windows[{k, L}];
      if (window.empty()) window = enumerate_braids(k, L);
      const GarsideNormalForm& nf = window[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(window.size()) - 1))];
      std::vector<int> rows(static_cast<std::size_t>(m)), cols(static_cast<std::size_t>(n));
      for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
      for (int j = 0; j < n; ++j) cols[static_cast<std::size_t>(j)] = j + 1;
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      rows.resize(static_cast<std::size_t>(k));
      cols.resize(static_cast<std::size_t>(k));
      seeds.emplace_back(m, n, rows, cols, nf.word());
    }
    const BraidedComplex x = closure_complex(seeds);
    cells += x.cells.size();
    if (!x.complex.is_strict()) out.fail("random closure is not strict");
    if (!projection_square(x, bad)) out.fail("square fails at " + bad);
  }
  if (out.passed) out.detail = str(cells) + " cells checked (straight lifts m,n<=3 and 200 random closures)";
  return out;
}

Outcome fiber_shadow() {
  Outcome out;
  int fibers = 0, bare = 0;
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (int L = 0; L <= 3; ++L) {
        for (int i = 1; i <= m; ++i)
          for (int j = 1; j <= n; ++j) {
            const BraidedComplex f = truncated_fiber(m, n, {{i, j}}, FrozenContext{}, L);
            ++fibers;
            if (f.complex.f_vector() != std::vector<std::size_t>{1}) out.fail("vertex fiber is not a point");
          }
        const DeltaComplex board = chessboard_complex(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
        if (board.dimension() < 1) continue;
        for (const auto& edge : board.cells(1)) {
          const Matching tau = parse_matching(edge.id);
          // B_2 oracle: the braids are sigma_1^j; the window is |j| <= L and
          // the parity of j is fixed by whether the two rooks cross.
          const int crossing = tau[0].second > tau[1].second ? 1 : 0;
          std::size_t admissible = 0;
          for (int j = -L; j <= L; ++j)
            if (((j % 2) + 2) % 2 == crossing) ++admissible;
          const BraidedComplex f = truncated_fiber(m, n, tau, FrozenContext{}, L);
          ++fibers;
          const std::vector<std::size_t> want =
              admissible ? std::vector<std::size_t>{2, admissible} : std::vector<std::size_t>{2};
          if (f.complex.f_vector() != want)
            out.fail("fiber over " + edge.id + " at L=" + str(L) + " has the wrong f-vector");
          const HomologyReport h = reduced_homology(f.complex);
          const bool connected = h.betti_at(-1) == 0 && h.betti_at(0) == 0;
          // Enumeration bounds are positive; at L = 0 a crossing pair has no lift.
          if (L == 0 && !connected) ++bare;
          else if (!connected) out.fail("fiber over " + edge.id + " at L=" + str(L) + " is disconnected");
        }
      }
  if (out.passed)
    out.detail = str(fibers) + " fibers: vertex fibers are points, f-vectors match, connected for 1 <= L <= 3 (" +
                 str(bare) + " crossing edges have no lift at L=0)";
  return out;
}

Outcome quillen_pipeline(unsigned threads) {
  Outcome out;
  const BraidedComplex braided = truncated_complex(2, 4, 2);
  const Poset source = cell_poset(braided.complex);
  const Poset target = cell_poset(chessboard_complex(2, 4));
  const QuillenReport q = quillen_fiber_check(source, target, projection_map(braided), threads);
  const CMReport direct = cm_check(braided.complex, threads);
  if (q.verdict != Verdict::pass) out.fail("fiber criterion does not pass on the (2,4) truncation");
  if (!q.conclusion_consistent || !q.source || q.source->verdict != Verdict::pass)
    out.fail("criterion conclusion not confirmed on the source poset");
  if (direct.verdict != Verdict::pass || direct.dimension != q.dimension)
    out.fail("direct cm_check of the truncation disagrees with the conclusion");

  const DeltaComplex edge = simplicial_complex({"a", "b"}, {{0, 1}}, [](const std::vector<std::size_t>&) { return std::string("ab"); });
  const Poset point({"x"}, {});
  const QuillenReport neg = quillen_fiber_check(point, cell_poset(edge), {{"x", "ab"}});
  if (neg.verdict != Verdict::fail || !neg.witness || neg.witness->kind != "fiber" ||
      neg.witness->ids != std::vector<std::string>{"a"})
    out.fail("empty-fiber case does not fail with the vertex as witness");
  if (out.passed)
    out.detail = "(2,4) L=2: " + str(braided.complex.total_cells()) + " cells, " + str(q.fibers.size()) +
                 " fibers CM, conclusion dim " + str(q.dimension) + " confirmed; empty fiber rejected";
  return out;
}

HeightFunction random_heights(Rng& rng, const DeltaComplex& x) {
  const int nv = static_cast<int>(x.count(0));
  for (int attempt = 0; attempt < 200; ++attempt) {
    HeightFunction h;
    for (const auto& v : x.cells(0)) h[v.id] = uniform(rng, 0, nv);
    try {
      validate_heights(x, h);
      return h;
    } catch (const InvalidHeightError&) {
    }
  }
  HeightFunction h;
  std::vector<int> order(static_cast<std::size_t>(nv));
  for (int i = 0; i < nv; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 0; i < nv; ++i) h[x.cells(0)[static_cast<std::size_t>(i)].id] = order[static_cast<std::size_t>(i)];
  return h;
}

Outcome morse_verification(std::uint64_t seed) {
  Outcome out;
  std::map<Verdict, int> tally;
  const DeltaComplex board = chessboard_complex(2, 3);
  HeightFunction column;
  for (const auto& v : board.cells(0)) column[v.id] = parse_matching(v.id).front().second;
  const MorseReport headline = bb_verify(board, column, 2, -1);
  if (headline.verdict != Verdict::pass) out.fail("chessboard(2,3), t=2, d=-1 is not consistent");
  for (long t = 0; t <= 3; ++t)
    for (int d = -1; d <= 1; ++d) {
      const MorseReport r = bb_verify(board, column, t, d);
      ++tally[r.verdict];
      if (r.verdict == Verdict::fail) out.fail("chessboard(2,3) contradiction at t=" + str(t) + ", d=" + str(d));
    }
  Rng rng(seed);
  for (int trial = 0; trial < 50; ++trial) {
    const DeltaComplex x = random_strict_complex(rng(), 7, 200);
    const HeightFunction h = random_heights(rng, x);
    long lo = 0, hi = 0;
    for (const auto& [id, v] : h) lo = std::min(lo, v), hi = std::max(hi, v);
    for (long t = lo - 1; t <= hi; ++t)
      for (int d = -1; d <= 2; ++d) {
        const MorseReport r = bb_verify(x, h, t, d);
        ++tally[r.verdict];
        if (r.verdict == Verdict::fail) out.fail("random complex " + str(trial) + " contradiction at t=" + str(t));
      }
  }
  if (tally[Verdict::pass] == 0) out.fail("no instance satisfied the hypothesis");
  if (out.passed)
    out.detail = str(tally[Verdict::pass]) + " confirmed predictions, " + str(tally[Verdict::inconclusive]) +
                 " without prediction, 0 contradictions";
  return out;
}

Outcome homology_engine(std::uint64_t seed) {
  Outcome out;
  std::vector<DeltaComplex> corpus;
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 5; ++n) corpus.push_back(chessboard_complex(m, n));
  for (const auto& g : connected_graphs_up_to_isomorphism(5)) corpus.push_back(graph_complex(GraphFamily::forests(g)));
  for (std::size_t n = 2; n <= 7; ++n) corpus.push_back(matching_complex(n));
  corpus.push_back(graph_complex(GraphFamily::not_2_connected(complete_graph(4))));
  corpus.push_back(straight_lift_complex(3, 3).complex);
  corpus.push_back(truncated_complex(2, 4, 2).complex);
  for (int t = 0; t < 50; ++t) corpus.push_back(random_strict_complex(seed + static_cast<std::uint64_t>(t), 7, 200));
  for (const auto& x : corpus) {
    corpus.push_back(order_complex(cell_poset(x)));
    if (corpus.size() > 400) break;
  }
  std::size_t euler = 0;
  for (const auto& x : corpus) {
    if (!boundary_squares_to_zero(augmented_chain_complex(x))) out.fail("boundary does not square to zero");
    const HomologyReport h = reduced_homology(x);
    ++euler;
    if (!h.euler_consistent || euler_from_cells(x) != euler_from_homology(h)) out.fail("Euler characteristic mismatch");
  }

  Rng rng(seed ^ 0x5eedULL);
  for (int trial = 0; trial < 100; ++trial) {
    const Eigen::Index r = uniform(rng, 1, 6), c = uniform(rng, 1, 6);
    IntegerMatrix m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j) m(i, j) = uniform(rng, -6, 6);
    const auto base = smith_normal_form(m, true);
    const IntegerMatrix u = random_unimodular(rng, r), v = random_unimodular(rng, c);
    const auto moved = smith_normal_form(IntegerMatrix(u * m * v));
    if (base.diagonal != moved.diagonal) out.fail("Smith diagonal changed under unimodular transformation");
    for (std::size_t k = 0; k < base.diagonal.size(); ++k) {
      if (base.diagonal[k] <= 0) out.fail("non-positive Smith entry");
      if (k && base.diagonal[k] % base.diagonal[k - 1] != 0) out.fail("divisibility chain broken");
    }
    IntegerMatrix d = IntegerMatrix::Zero(r, c);
    for (std::size_t k = 0; k < base.diagonal.size(); ++k)
      d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = base.diagonal[k];
    if (IntegerMatrix(*base.left * m * *base.right) != d) out.fail("Smith transforms do not diagonalize");
    const Integer du = bareiss_determinant(*base.left), dv = bareiss_determinant(*base.right);
    if ((du != 1 && du != -1) || (dv != 1 && dv != -1)) out.fail("Smith transforms are not unimodular");
    if (r == c) {
      const Integer det = bareiss_determinant(m);
      Integer product = base.rank == r ? Integer(1) : Integer(0);
      if (base.rank == r)
        for (const auto& x : base.diagonal) product *= x;
      if (product != (det < 0 ? Integer(-det) : det)) out.fail("product of Smith entries differs from |det|");
    }
    BoundaryMatrix sparse(r, c);
    std::vector<Eigen::Triplet<int>> entries;
    for (Eigen::Index i = 0; i < r; ++i)
      for (Eigen::Index j = 0; j < c; ++j)
        if (m(i, j) != 0) entries.emplace_back(static_cast<int>(i), static_cast<int>(j), m(i, j).convert_to<int>());
    sparse.setFromTriplets(entries.begin(), entries.end());
    if (invariant_factors(sparse) != base.diagonal) out.fail("sparse and dense Smith forms disagree");
  }
  if (out.passed)
    out.detail = str(corpus.size()) + " complexes with dd=0 and Euler check, 100 Smith fuzz trials";
  return out;
}

}  // namespace

DeltaComplex random_strict_complex(std::uint64_t seed, std::size_t max_vertices, std::size_t max_cells) {
  Rng rng(seed);
  const int nv = uniform(rng, 3, static_cast<int>(std::max<std::size_t>(max_vertices, 3)));
  std::set<std::vector<int>> simplices;
  for (int s = uniform(rng, nv, 3 * nv); s > 0; --s) {
    std::vector<int> verts(static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i) verts[static_cast<std::size_t>(i)] = i;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(static_cast<std::size_t>(uniform(rng, 1, std::min(4, nv))));
    std::sort(verts.begin(), verts.end());
    simplices.insert(verts);
  }
  // Close downwards and group by dimension.
  std::vector<std::vector<int>> stack(simplices.begin(), simplices.end());
  while (!stack.empty()) {
    auto s = stack.back();
    stack.pop_back();
    if (s.size() == 1) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto f = s;
      f.erase(f.begin() + static_cast<std::ptrdiff_t>(k));
      if (simplices.insert(f).second) stack.push_back(f);
    }
  }
  std::vector<std::vector<std::vector<int>>> by_dim(4);
  for (const auto& s : simplices) by_dim[s.size() - 1].push_back(s);

  // Copies of each simplex; a copy records its face copies.
  struct Copy {
    std::string id;
    std::vector<std::size_t> faces;  // indices into the copies of each face simplex
  };
  std::map<std::vector<int>, std::vector<Copy>> copies;
  DeltaComplex::Builder builder;
  std::size_t total = 0;
  auto name = [](const std::vector<int>& s, std::size_t copy) {
    std::string id = "v";
    for (std::size_t k = 0; k < s.size(); ++k) id += (k ? "." : "") + std::to_string(s[k]);
    return copy ? id + "#" + std::to_string(copy) : id;
  };
  for (const auto& s : by_dim[0]) {
    if (total >= max_cells) break;
    copies[s].push_back({name(s, 0), {}});
    builder.add(0, name(s, 0), {});
    ++total;
  }
  for (std::size_t d = 1; d < by_dim.size(); ++d)
    for (const auto& s : by_dim[d]) {
      std::vector<std::vector<int>> face_simplex(d + 1);
      bool available = true;
      for (std::size_t i = 0; i <= d; ++i) {
        face_simplex[i] = s;
        face_simplex[i].erase(face_simplex[i].begin() + static_cast<std::ptrdiff_t>(i));
        if (copies[face_simplex[i]].empty()) available = false;
      }
      if (!available) continue;
      const int wanted = uniform(rng, 0, 3) == 0 ? 2 : 1;
      for (int c = 0; c < wanted && total < max_cells; ++c) {
        // Random consistent choice of face copies (simplicial identities).
        std::vector<std::size_t> pick(d + 1);
        std::function<bool(std::size_t)> choose = [&](std::size_t i) {
          if (i > d) return true;
          const auto& options = copies[face_simplex[i]];
          std::vector<std::size_t> order(options.size());
          for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
          std::shuffle(order.begin(), order.end(), rng);
          for (std::size_t o : order) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok && d >= 2; ++j) {
              // face j of (face i) equals face i-1 of (face j)
              ok = options[o].faces[j] == copies[face_simplex[j]][pick[j]].faces[i - 1];
            }
            if (!ok) continue;
            pick[i] = o;
            if (choose(i + 1)) return true;
          }
          return false;
        };
        if (!choose(0)) break;
        Copy copy{name(s, copies[s].size()), pick};
        std::vector<std::string> face_ids;
        for (std::size_t i = 0; i <= d; ++i) face_ids.push_back(copies[face_simplex[i]][pick[i]].id);
        builder.add(static_cast<int>(d), copy.id, face_ids);
        copies[s].push_back(std::move(copy));
        ++total;
      }
    }
  return builder.build();
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& report) {
  struct Spec {
    int number;
    const char* title;
    double limit;
    std::function<Outcome()> run;
  };
  const unsigned threads = options.threads;
  const std::uint64_t seed = options.seed;
  const std::vector<Spec> specs = {
      {1, "chessboard connectivity bound", 60, [] { return chessboard_bound(); }},
      {2, "chessboard Cohen-Macaulay instances", 120, [=] { return chessboard_cm(threads); }},
      {3, "not-2-connected complex on 4 vertices", 60, [] { return not_two_connected(); }},
      {4, "forest complexes", 120, [=] { return forest_complexes(threads); }},
      {5, "matching complex skeleta", 120, [=] { return matching_skeleta(threads); }},
      {6, "braid kernel properties", 0, [=] { return braid_kernel(seed); }},
      {7, "projection coherence", 0, [=] { return projection_coherence(seed + 1); }},
      {8, "truncated fiber shadow", 0, [] { return fiber_shadow(); }},
      {9, "Quillen fiber pipeline", 0, [=] { return quillen_pipeline(threads); }},
      {10, "Morse verification", 0, [=] { return morse_verification(seed + 2); }},
      {11, "homology engine invariants", 0, [=] { return homology_engine(seed + 3); }},
  };
  std::vector<CriterionResult> results;
  for (const auto& spec : specs) {
    CriterionResult r;
    r.number = spec.number;
    r.title = spec.title;
    r.limit = spec.limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      const Outcome o = spec.run();
      r.passed = o.passed;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.limit > 0 && r.seconds > r.limit) {
      r.passed = false;
      r.detail += " (time limit exceeded)";
    }
    if (report) report(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace braidcx
