#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace braidcx {

/// One-line permutation of 1..k: perm[j-1] is the image of j.
using Permutation = std::vector<int>;

/// Artin word on k strands. Letter +i is sigma_i, -i its inverse, 1 <= i < k.
///
/// Reading convention: the first letter is the crossing nearest the top, so
/// induced_permutation(a * b) = induced_permutation(a) o induced_permutation(b)
/// and induced_permutation(w)[j-1] is the top endpoint of the strand that
/// starts at bottom position j.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int k, std::vector<int> word);

  /// Parses "s1 s2' s1" (apostrophe = inverse); "", "e" and "1" are the identity.
  static BraidWord parse(const std::string& text, int strands);
  /// Inverse of parse; the identity prints as "e".
  std::string str() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

BraidWord braid_mul(const BraidWord& a, const BraidWord& b);
BraidWord braid_inv(const BraidWord& a);
/// Equality in the braid group, decided by normal forms.
bool braid_eq(const BraidWord& a, const BraidWord& b);

Permutation identity_permutation(int k);
Permutation compose(const Permutation& a, const Permutation& b);  ///< (a o b)(j) = a(b(j))
Permutation inverse(const Permutation& a);
Permutation induced_permutation(const BraidWord& w);

/// Braid on the remaining k-1 strands after removing the strand that starts at
/// bottom position s (1-based).
BraidWord strand_delete(const BraidWord& w, int s);

/// Left-greedy normal form Delta^infimum * f_1 * ... * f_r with proper simple
/// factors stored as permutations.
struct GarsideNormalForm {
  int strands = 1;
  long infimum = 0;
  std::vector<Permutation> factors;

  int canonical_length() const { return static_cast<int>(factors.size()); }
  /// "D^p | [2,1,3] | ..." ; no factors prints "D^p".
  std::string str() const;
  /// A word representing this braid.
  BraidWord word() const;
  Permutation permutation() const;

  friend bool operator==(const GarsideNormalForm&, const GarsideNormalForm&) = default;
  friend auto operator<=>(const GarsideNormalForm&, const GarsideNormalForm&) = default;
};

GarsideNormalForm normal_form(const BraidWord& w);

/// Positive word of the permutation braid (each pair of strands crosses at most once).
BraidWord permutation_braid(const Permutation& perm);
/// Half twist on k strands.
BraidWord half_twist(int k);

/// Every braid on k strands with |infimum| <= L and canonical length <= L,
/// ordered by (canonical length, infimum, factors). BudgetExceeded beyond
/// `budget` results.
std::vector<GarsideNormalForm> enumerate_braids(int k, int L, std::size_t budget = 200000);

}  // namespace braidcx
