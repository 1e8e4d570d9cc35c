#include "braidcx/partial_braid.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(xs[k]);
  }
  return s;
}

std::string compact(const GarsideNormalForm& nf) {
  std::string s = nf.str();
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  return s;
}

std::vector<int> merged(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int position(const std::vector<int>& sorted, int value) {
  return static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), value) - sorted.begin()) + 1;
}

bool contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

void check_positions(const std::vector<int>& xs, int limit, const char* what) {
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] < 1 || xs[k] > limit)
      throw DomainError(std::string("partial braid: ") + what + " position " + std::to_string(xs[k]) +
                        " is off the board");
    if (k && xs[k] <= xs[k - 1]) throw DomainError(std::string("partial braid: ") + what + " positions must be distinct");
  }
}

// Deletes the strands at the given 1-based bottom positions.
BraidWord delete_strands(BraidWord w, std::vector<int> positions) {
  std::sort(positions.rbegin(), positions.rend());
  for (int s : positions) w = strand_delete(w, s);
  return w;
}

}  // namespace

std::string FrozenContext::fingerprint() const {
  if (empty()) return "";
  return join(bottoms) + ">" + join(tops) + "/" + compact(normal_form(braid));
}

PartialBraid::PartialBraid(int m, int n, std::vector<int> bottoms, std::vector<int> tops, BraidWord combined,
                           FrozenContext frozen)
    : m_(m), n_(n), bottoms_(std::move(bottoms)), tops_(std::move(tops)), braid_(std::move(combined)),
      frozen_(std::move(frozen)) {
  if (m_ < 1 || n_ < 1) throw DomainError("partial braid: board sizes must be positive");
  std::sort(bottoms_.begin(), bottoms_.end());
  std::sort(tops_.begin(), tops_.end());
  check_positions(bottoms_, m_, "bottom");
  check_positions(tops_, n_, "top");
  if (bottoms_.empty() || bottoms_.size() != tops_.size())
    throw DomainError("partial braid: needs equally many (and at least one) bottom and top endpoints");
  if (frozen_.empty()) {
    frozen_ = FrozenContext{};
  } else {
    check_positions(frozen_.bottoms, m_, "frozen bottom");
    check_positions(frozen_.tops, n_, "frozen top");
    if (frozen_.tops.size() != frozen_.size() || frozen_.braid.strands != static_cast<int>(frozen_.size()))
      throw DomainError("partial braid: frozen context has inconsistent strand counts");
    for (int b : bottoms_)
      if (contains(frozen_.bottoms, b)) throw DomainError("partial braid: active and frozen bottoms overlap");
    for (int t : tops_)
      if (contains(frozen_.tops, t)) throw DomainError("partial braid: active and frozen tops overlap");
  }
  const auto cb = combined_bottoms();
  const auto ct = combined_tops();
  if (braid_.strands != static_cast<int>(cb.size()))
    throw DomainError("partial braid: braid has " + std::to_string(braid_.strands) + " strands, expected " +
                      std::to_string(cb.size()));
  const Permutation perm = induced_permutation(braid_);
  for (std::size_t j = 0; j < cb.size(); ++j) {
    const bool active_bottom = contains(bottoms_, cb[j]);
    const bool active_top = contains(tops_, ct[static_cast<std::size_t>(perm[j] - 1)]);
    if (active_bottom != active_top) throw DomainError("partial braid: a frozen strand must end at a frozen top");
  }
  if (!frozen_.empty()) {
    std::vector<int> active;
    for (int b : bottoms_) active.push_back(position(cb, b));
    if (!braid_eq(delete_strands(braid_, active), frozen_.braid))
      throw DomainError("partial braid: frozen strands do not form the frozen braid");
  }
  id_ = join(bottoms_) + ">" + join(tops_) + "/" + compact(normal_form(braid_));
  if (!frozen_.empty()) id_ += "@" + frozen_.fingerprint();
}

std::vector<int> PartialBraid::combined_bottoms() const { return merged(bottoms_, frozen_.bottoms); }
std::vector<int> PartialBraid::combined_tops() const { return merged(tops_, frozen_.tops); }

std::vector<PartialBraid> PartialBraid::faces() const {
  std::vector<PartialBraid> out;
  if (strand_count() == 1) return out;
  const auto cb = combined_bottoms();
  const auto ct = combined_tops();
  const Permutation perm = induced_permutation(braid_);
  for (int b : bottoms_) {
    const int s = position(cb, b);
    const int top = ct[static_cast<std::size_t>(perm[static_cast<std::size_t>(s - 1)] - 1)];
    std::vector<int> nb, nt;
    for (int x : bottoms_)
      if (x != b) nb.push_back(x);
    for (int x : tops_)
      if (x != top) nt.push_back(x);
    out.emplace_back(m_, n_, std::move(nb), std::move(nt), strand_delete(braid_, s), frozen_);
  }
  return out;
}

Matching PartialBraid::project() const {
  const auto cb = combined_bottoms();
  const auto ct = combined_tops();
  const Permutation perm = induced_permutation(braid_);
  Matching out;
  for (int b : bottoms_) {
    const int s = position(cb, b);
    out.emplace_back(b, ct[static_cast<std::size_t>(perm[static_cast<std::size_t>(s - 1)] - 1)]);
  }
  return out;
}

FrozenContext PartialBraid::link_context() const { return FrozenContext{combined_bottoms(), combined_tops(), braid_}; }

PartialBraid lift(int m, int n, const Matching& matching, const BraidWord& braid) {
  std::vector<int> bottoms, tops;
  for (const auto& [r, c] : matching) {
    bottoms.push_back(r);
    tops.push_back(c);
  }
  std::sort(tops.begin(), tops.end());
  PartialBraid p(m, n, bottoms, tops, braid);
  Matching want = matching;
  std::sort(want.begin(), want.end());
  if (p.project() != want) throw DomainError("lift: braid permutation does not realize the matching");
  return p;
}

PartialBraid straight_lift(int m, int n, const Matching& matching) {
  Matching sorted = matching;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> tops;
  for (const auto& sq : sorted) tops.push_back(sq.second);
  std::sort(tops.begin(), tops.end());
  Permutation perm;
  for (const auto& sq : sorted) perm.push_back(position(tops, sq.second));
  return lift(m, n, sorted, permutation_braid(perm));
}

BraidedComplex closure_complex(const std::vector<PartialBraid>& seeds, std::size_t cell_budget) {
  BraidedComplex out;
  std::deque<const PartialBraid*> queue;
  auto admit = [&](const PartialBraid& p) {
    auto [it, fresh] = out.cells.emplace(p.id(), p);
    if (!fresh) return;
    if (out.cells.size() > cell_budget)
      throw BudgetExceeded("braided closure exceeds the cell budget of " + std::to_string(cell_budget));
    queue.push_back(&it->second);
  };
  for (const auto& s : seeds) {
    const auto& first = seeds.front();
    if (s.m() != first.m() || s.n() != first.n() || !(s.frozen() == first.frozen()))
      throw DomainError("braided closure: seeds must share the board and the frozen context");
    admit(s);
  }
  DeltaComplex::Builder builder;
  while (!queue.empty()) {
    const PartialBraid& p = *queue.front();
    queue.pop_front();
    std::vector<std::string> face_ids;
    for (const auto& f : p.faces()) {
      face_ids.push_back(f.id());
      admit(f);
    }
    builder.add(p.dimension(), p.id(), std::move(face_ids));
  }
  out.complex = builder.build();
  return out;
}

namespace {

// Window braids lifting exactly the matching `sigma` over the frozen context.
void window_lifts(int m, int n, const Matching& sigma, const FrozenContext& frozen, int L, std::size_t budget,
                  std::map<std::string, PartialBraid>& seeds) {
  std::vector<int> bottoms, tops;
  for (const auto& [r, c] : sigma) {
    if (contains(frozen.bottoms, r) || contains(frozen.tops, c))
      throw DomainError("truncated fiber: matching uses a frozen position");
    bottoms.push_back(r);
    tops.push_back(c);
  }
  std::sort(bottoms.begin(), bottoms.end());
  std::sort(tops.begin(), tops.end());
  const auto cb = merged(bottoms, frozen.bottoms);
  const auto ct = merged(tops, frozen.tops);
  Permutation want(cb.size());
  for (const auto& [r, c] : sigma) want[static_cast<std::size_t>(position(cb, r) - 1)] = position(ct, c);
  if (!frozen.empty()) {
    const Permutation fp = induced_permutation(frozen.braid);
    for (std::size_t q = 0; q < frozen.size(); ++q)
      want[static_cast<std::size_t>(position(cb, frozen.bottoms[q]) - 1)] =
          position(ct, frozen.tops[static_cast<std::size_t>(fp[q] - 1)]);
  }
  std::vector<int> active;
  for (int b : bottoms) active.push_back(position(cb, b));
  for (const auto& nf : enumerate_braids(static_cast<int>(cb.size()), L, budget)) {
    const BraidWord w = nf.word();
    if (induced_permutation(w) != want) continue;
    if (!frozen.empty() && !braid_eq(delete_strands(w, active), frozen.braid)) continue;
    PartialBraid p(m, n, bottoms, tops, w, frozen);
    seeds.emplace(p.id(), std::move(p));
    if (seeds.size() > budget) throw BudgetExceeded("truncated fiber exceeds the cell budget");
  }
}

BraidedComplex close_seeds(const std::map<std::string, PartialBraid>& seeds, std::size_t budget) {
  std::vector<PartialBraid> list;
  for (const auto& [id, p] : seeds) list.push_back(p);
  if (list.empty()) return {};
  return closure_complex(list, budget);
}

}  // namespace

BraidedComplex truncated_fiber(int m, int n, const Matching& tau, const FrozenContext& frozen, int L,
                               std::size_t cell_budget) {
  if (L < 0) throw DomainError("truncated fiber: L must be non-negative");
  if (tau.empty()) throw DomainError("truncated fiber: matching is empty");
  if (tau.size() > 16) throw DomainError("truncated fiber: matching too large");
  Matching sorted = tau;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k)
    for (std::size_t l = 0; l < k; ++l)
      if (sorted[k].first == sorted[l].first || sorted[k].second == sorted[l].second)
        throw DomainError("truncated fiber: tau is not a matching");
  std::map<std::string, PartialBraid> seeds;
  for (unsigned mask = 1; mask < (1u << sorted.size()); ++mask) {
    Matching sigma;
    for (std::size_t k = 0; k < sorted.size(); ++k)
      if ((mask >> k) & 1) sigma.push_back(sorted[k]);
    window_lifts(m, n, sigma, frozen, L, cell_budget, seeds);
  }
  return close_seeds(seeds, cell_budget);
}

BraidedComplex truncated_complex(int m, int n, int L, std::size_t cell_budget) {
  if (L < 0) throw DomainError("truncated complex: L must be non-negative");
  const DeltaComplex board = chessboard_complex(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  std::map<std::string, PartialBraid> seeds;
  for (int d = 0; d <= board.dimension(); ++d)
    for (const auto& cell : board.cells(d))
      window_lifts(m, n, parse_matching(cell.id), FrozenContext{}, L, cell_budget, seeds);
  return close_seeds(seeds, cell_budget);
}

BraidedComplex straight_lift_complex(int m, int n, std::size_t cell_budget) {
  const DeltaComplex board = chessboard_complex(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
  std::vector<PartialBraid> seeds;
  for (const auto& cell : board.cells(board.dimension())) seeds.push_back(straight_lift(m, n, parse_matching(cell.id)));
  return closure_complex(seeds, cell_budget);
}

std::map<std::string, std::string> projection_map(const BraidedComplex& braided) {
  std::map<std::string, std::string> out;
  for (const auto& [id, p] : braided.cells) out.emplace(id, matching_id(p.project()));
  return out;
}

}  // namespace braidcx
