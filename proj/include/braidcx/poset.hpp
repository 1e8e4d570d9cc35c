#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace braidcx {

/// A finite poset on opaque string ids.
///
/// Elements are kept in lexicographic id order, so element indices are stable
/// for a given element set. The order is stored as its Hasse (covering)
/// relation; the strict down-sets are derived once at construction and are
/// used for comparisons, induced subposets and cover reduction.
class Poset {
 public:
  Poset() = default;

  /// Builds a poset from any generating relation `lower < upper`.
  /// The relation is closed transitively and reduced to covers; a cycle
  /// (antisymmetry violation) or an unknown id raises DomainError.
  Poset(std::vector<std::string> elements,
        const std::vector<std::pair<std::string, std::string>>& relation);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& id(std::size_t i) const { return elements_[i]; }

  bool contains(std::string_view id) const;
  /// Throws DomainError for unknown ids.
  std::size_t index_of(std::string_view id) const;

  const std::vector<std::size_t>& lower_covers(std::size_t i) const { return lower_[i]; }
  const std::vector<std::size_t>& upper_covers(std::size_t i) const { return upper_[i]; }

  /// Strict order a < b.
  bool less(std::size_t a, std::size_t b) const { return below_[b].test(a); }
  bool less_equal(std::size_t a, std::size_t b) const { return a == b || less(a, b); }

  /// Length of a longest chain ending at i (the dimension of its closure).
  int height(std::size_t i) const { return heights_[i]; }
  /// Maximum height; -1 for the empty poset.
  int dimension() const;

  std::vector<std::size_t> strictly_below(std::size_t i) const;
  std::vector<std::size_t> strictly_above(std::size_t i) const;

  /// Subposet induced on `subset` (indices into this poset), covers recomputed.
  Poset induced(const std::vector<std::size_t>& subset) const;

  /// Covering pairs (lower, upper) as ids, in deterministic order.
  std::vector<std::pair<std::string, std::string>> cover_pairs() const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.elements_ == b.elements_ && a.lower_ == b.lower_;
  }

 private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> lower_;
  std::vector<std::vector<std::size_t>> upper_;
  std::vector<boost::dynamic_bitset<>> below_;
  std::vector<int> heights_;
};

enum class Neighborhood { closure, boundary, star, link };

/// closure(p) = {q <= p}, boundary(p) = {q < p}, star(p) = {q >= p}, link(p) = {q > p}.
Poset poset_neighborhood(const Poset& poset, std::string_view element, Neighborhood kind);

/// Elements strictly between p and q; equals link(p) intersected with boundary(q).
Poset open_interval(const Poset& poset, std::string_view p, std::string_view q);

}  // namespace braidcx
