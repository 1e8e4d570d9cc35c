#include "braidcx/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace braidcx {

namespace {

void free_reduce(GroupWord& w) {
  GroupWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) out.pop_back();
    else out.push_back(x);
  }
  std::size_t a = 0, b = out.size();
  while (b - a >= 2 && out[a] == -out[b - 1]) ++a, --b;
  w.assign(out.begin() + static_cast<std::ptrdiff_t>(a), out.begin() + static_cast<std::ptrdiff_t>(b));
}

GroupWord inverse(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

constexpr std::size_t kLengthCap = 1000000;

}  // namespace

Presentation edge_path_presentation(const DeltaComplex& complex) {
  if (complex.empty()) throw DomainError("fundamental group: complex is empty");
  const std::size_t nv = complex.count(0);
  std::vector<std::size_t> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = nv;
  Presentation out;
  const std::size_t ne = complex.dimension() >= 1 ? complex.count(1) : 0;
  std::vector<int> letter(ne, 0);
  for (std::size_t e = 0; e < ne; ++e) {
    const auto& f = complex.cells(1)[e].faces;
    const std::size_t a = find(f[0]), b = find(f[1]);
    if (a != b) {
      parent[std::max(a, b)] = std::min(a, b);
      --components;
    } else {
      letter[e] = static_cast<int>(++out.generators);
    }
  }
  if (components != 1) throw DomainError("fundamental group: complex is disconnected");
  if (complex.dimension() >= 2)
    for (const auto& t : complex.cells(2)) {
      GroupWord w;
      if (letter[t.faces[2]]) w.push_back(letter[t.faces[2]]);
      if (letter[t.faces[0]]) w.push_back(letter[t.faces[0]]);
      if (letter[t.faces[1]]) w.push_back(-letter[t.faces[1]]);
      out.relators.push_back(std::move(w));
    }
  return out;
}

Pi1Report simplify_presentation(Presentation p, std::size_t step_budget) {
  Pi1Report report;
  report.initial_generators = p.generators;
  report.initial_relators = p.relators.size();
  std::size_t alive = p.generators;
  auto tidy = [&] {
    for (auto& r : p.relators) free_reduce(r);
    p.relators.erase(std::remove_if(p.relators.begin(), p.relators.end(), [](const GroupWord& r) { return r.empty(); }),
                     p.relators.end());
  };
  tidy();
  while (alive > 0 && report.steps < step_budget) {
    // Shortest relator in which some generator occurs exactly once.
    std::size_t best = p.relators.size();
    int solve = 0;
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      if (best < p.relators.size() && p.relators[k].size() >= p.relators[best].size()) continue;
      for (int x : p.relators[k]) {
        const auto n = std::count_if(p.relators[k].begin(), p.relators[k].end(),
                                     [x](int y) { return std::abs(y) == std::abs(x); });
        if (n == 1) {
          best = k;
          solve = x;
          break;
        }
      }
    }
    if (best == p.relators.size()) break;
    // Rotate so the solved letter leads: solve * rest = 1.
    GroupWord r = p.relators[best];
    std::rotate(r.begin(), std::find(r.begin(), r.end(), solve), r.end());
    const GroupWord rest(r.begin() + 1, r.end());
    const GroupWord value = solve > 0 ? inverse(rest) : rest;
    const GroupWord value_inv = inverse(value);
    const int g = std::abs(solve);
    p.relators.erase(p.relators.begin() + static_cast<std::ptrdiff_t>(best));
    std::size_t total = 0;
    for (auto& w : p.relators) {
      GroupWord out;
      for (int x : w) {
        if (std::abs(x) != g) {
          out.push_back(x);
          continue;
        }
        const GroupWord& sub = x > 0 ? value : value_inv;
        out.insert(out.end(), sub.begin(), sub.end());
        ++report.steps;
      }
      w = std::move(out);
      total += w.size();
    }
    ++report.steps;
    --alive;
    tidy();
    if (total > kLengthCap) break;
  }
  report.remaining_generators = alive;
  report.remaining_relators = p.relators.size();
  report.verdict = alive == 0 ? Verdict::pass : Verdict::inconclusive;
  return report;
}

Pi1Report fundamental_group_trivial(const DeltaComplex& complex, std::size_t step_budget) {
  return simplify_presentation(edge_path_presentation(complex), step_budget);
}

}  // namespace braidcx
