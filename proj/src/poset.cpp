#include "braidcx/poset.hpp"

#include <algorithm>
#include <numeric>

#include "braidcx/error.hpp"

namespace braidcx {

Poset::Poset(std::vector<std::string> elements,
             const std::vector<std::pair<std::string, std::string>>& relation)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw DomainError("poset: duplicate element id");
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], i);

  std::vector<std::vector<std::size_t>> generators(n);
  for (const auto& [lo, hi] : relation) {
    const std::size_t a = index_of(lo), b = index_of(hi);
    if (a == b) throw DomainError("poset: reflexive pair in strict relation: " + lo);
    generators[b].push_back(a);
  }

  // Kahn's algorithm on the generating relation; leftovers mean a cycle.
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> ups(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a : generators[b]) {
      ups[a].push_back(b);
      ++indegree[b];
    }
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) order.push_back(i);
  for (std::size_t k = 0; k < order.size(); ++k)
    for (std::size_t b : ups[order[k]])
      if (--indegree[b] == 0) order.push_back(b);
  if (order.size() != n) throw DomainError("poset: relation is not antisymmetric (cycle)");

  below_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t b : order)
    for (std::size_t a : generators[b]) {
      below_[b].set(a);
      below_[b] |= below_[a];
    }

  lower_.assign(n, {});
  upper_.assign(n, {});
  heights_.assign(n, 0);
  for (std::size_t b = 0; b < n; ++b) {
    boost::dynamic_bitset<> reach(n);
    for (auto a = below_[b].find_first(); a != boost::dynamic_bitset<>::npos; a = below_[b].find_next(a))
      reach |= below_[a];
    boost::dynamic_bitset<> covers = below_[b] - reach;
    for (auto a = covers.find_first(); a != boost::dynamic_bitset<>::npos; a = covers.find_next(a)) {
      lower_[b].push_back(a);
      upper_[a].push_back(b);
    }
  }
  for (std::size_t b : order)
    for (std::size_t a : lower_[b]) heights_[b] = std::max(heights_[b], heights_[a] + 1);
}

bool Poset::contains(std::string_view id) const {
  return index_.find(std::string(id)) != index_.end();
}

std::size_t Poset::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw DomainError("poset: unknown element id '" + std::string(id) + "'");
  return it->second;
}

int Poset::dimension() const {
  int d = -1;
  for (int h : heights_) d = std::max(d, h);
  return d;
}

std::vector<std::size_t> Poset::strictly_below(std::size_t i) const {
  std::vector<std::size_t> out;
  for (auto a = below_[i].find_first(); a != boost::dynamic_bitset<>::npos; a = below_[i].find_next(a))
    out.push_back(a);
  return out;
}

std::vector<std::size_t> Poset::strictly_above(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < size(); ++b)
    if (below_[b].test(i)) out.push_back(b);
  return out;
}

Poset Poset::induced(const std::vector<std::size_t>& subset) const {
  std::vector<std::string> ids;
  ids.reserve(subset.size());
  for (std::size_t i : subset) ids.push_back(elements_[i]);
  // Feed the full induced order; the constructor reduces it to covers.
  std::vector<std::pair<std::string, std::string>> rel;
  for (std::size_t b : subset)
    for (std::size_t a : subset)
      if (less(a, b)) rel.emplace_back(elements_[a], elements_[b]);
  return Poset(std::move(ids), rel);
}

std::vector<std::pair<std::string, std::string>> Poset::cover_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t b = 0; b < size(); ++b)
    for (std::size_t a : lower_[b]) out.emplace_back(elements_[a], elements_[b]);
  std::sort(out.begin(), out.end());
  return out;
}

Poset poset_neighborhood(const Poset& poset, std::string_view element, Neighborhood kind) {
  const std::size_t p = poset.index_of(element);
  std::vector<std::size_t> subset;
  switch (kind) {
    case Neighborhood::closure:
      subset = poset.strictly_below(p);
      subset.push_back(p);
      break;
    case Neighborhood::boundary:
      subset = poset.strictly_below(p);
      break;
    case Neighborhood::star:
      subset = poset.strictly_above(p);
      subset.push_back(p);
      break;
    case Neighborhood::link:
      subset = poset.strictly_above(p);
      break;
  }
  std::sort(subset.begin(), subset.end());
  return poset.induced(subset);
}

Poset open_interval(const Poset& poset, std::string_view p, std::string_view q) {
  const std::size_t a = poset.index_of(p), b = poset.index_of(q);
  std::vector<std::size_t> subset;
  for (std::size_t c = 0; c < poset.size(); ++c)
    if (poset.less(a, c) && poset.less(c, b)) subset.push_back(c);
  return poset.induced(subset);
}

}  // namespace braidcx
