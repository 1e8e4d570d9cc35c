#include "braidcx/braid.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "braidcx/error.hpp"

namespace braidcx {

BraidWord::BraidWord(int k, std::vector<int> word) : strands(k), letters(std::move(word)) {
  if (k < 1) throw DomainError("braid: strand count must be positive");
  for (int x : letters)
    if (x == 0 || std::abs(x) >= k)
      throw DomainError("braid: generator " + std::to_string(x) + " out of range for " + std::to_string(k) +
                        " strands");
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  static const std::regex token(R"(s(\d+)('|\^-1)?)");
  std::istringstream in(text);
  std::vector<int> letters;
  for (std::string t; in >> t;) {
    if (t == "e" || t == "1") continue;
    std::smatch m;
    if (!std::regex_match(t, m, token)) throw DomainError("braid: cannot parse token '" + t + "'");
    const int i = std::stoi(m[1]);
    letters.push_back(m[2].matched ? -i : i);
  }
  return BraidWord(strands, std::move(letters));
}

std::string BraidWord::str() const {
  if (letters.empty()) return "e";
  std::string s;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) s += ' ';
    s += "s" + std::to_string(std::abs(letters[k]));
    if (letters[k] < 0) s += '\'';
  }
  return s;
}

namespace {

void require_same(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands)
    throw DomainError("braid: strand counts differ (" + std::to_string(a.strands) + " vs " +
                      std::to_string(b.strands) + ")");
}

Permutation reverse_permutation(int k) {
  Permutation w0(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) w0[static_cast<std::size_t>(j)] = k - j;
  return w0;
}

// a o t_i: swap positions i, i+1.
void right_mul_transposition(Permutation& a, int i) {
  std::swap(a[static_cast<std::size_t>(i - 1)], a[static_cast<std::size_t>(i)]);
}

// t_i o b: swap values i, i+1.
void left_mul_transposition(Permutation& b, int i) {
  for (int& x : b) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
}

bool in_finishing_set(const Permutation& a, int i) {
  return a[static_cast<std::size_t>(i - 1)] > a[static_cast<std::size_t>(i)];
}

bool in_starting_set(const Permutation& b, int i) {
  std::size_t pi = 0, pj = 0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == i) pi = j;
    if (b[j] == i + 1) pj = j;
  }
  return pi > pj;
}

// Makes (a, b) left-weighted; returns true if anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
  const int k = static_cast<int>(a.size());
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < k; ++i)
      if (in_starting_set(b, i) && !in_finishing_set(a, i)) {
        right_mul_transposition(a, i);
        left_mul_transposition(b, i);
        again = moved = true;
      }
  }
  return moved;
}

bool left_weighted(const Permutation& a, const Permutation& b) {
  for (int i = 1; i < static_cast<int>(a.size()); ++i)
    if (in_starting_set(b, i) && !in_finishing_set(a, i)) return false;
  return true;
}

void normalize(GarsideNormalForm& nf) {
  const Permutation id = identity_permutation(nf.strands);
  const Permutation w0 = reverse_permutation(nf.strands);
  for (bool again = true; again;) {
    again = false;
    for (std::size_t j = nf.factors.size(); j-- > 1;)
      if (make_left_weighted(nf.factors[j - 1], nf.factors[j])) again = true;
  }
  std::size_t lead = 0;
  while (lead < nf.factors.size() && nf.factors[lead] == w0) ++lead;
  nf.infimum += static_cast<long>(lead);
  nf.factors.erase(nf.factors.begin(), nf.factors.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!nf.factors.empty() && nf.factors.back() == id) nf.factors.pop_back();
}

}  // namespace

BraidWord braid_mul(const BraidWord& a, const BraidWord& b) {
  require_same(a, b);
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord braid_inv(const BraidWord& a) {
  BraidWord out = a;
  std::reverse(out.letters.begin(), out.letters.end());
  for (int& x : out.letters) x = -x;
  return out;
}

bool braid_eq(const BraidWord& a, const BraidWord& b) {
  require_same(a, b);
  return normal_form(a) == normal_form(b);
}

Permutation identity_permutation(int k) {
  Permutation p(static_cast<std::size_t>(k));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[static_cast<std::size_t>(b[j] - 1)];
  return out;
}

Permutation inverse(const Permutation& a) {
  Permutation out(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) out[static_cast<std::size_t>(a[j] - 1)] = static_cast<int>(j + 1);
  return out;
}

Permutation induced_permutation(const BraidWord& w) {
  Permutation p = identity_permutation(w.strands);
  for (int x : w.letters) right_mul_transposition(p, std::abs(x));
  return p;
}

BraidWord strand_delete(const BraidWord& w, int s) {
  if (s < 1 || s > w.strands)
    throw DomainError("strand_delete: strand " + std::to_string(s) + " out of range for " +
                      std::to_string(w.strands) + " strands");
  std::vector<int> kept;
  int pos = s;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const int i = std::abs(*it);
    const int sign = *it > 0 ? 1 : -1;
    if (i == pos) pos = i + 1;
    else if (i + 1 == pos) pos = i;
    else if (i + 1 < pos) kept.push_back(*it);
    else kept.push_back(sign * (i - 1));
  }
  std::reverse(kept.begin(), kept.end());
  return BraidWord(w.strands - 1, std::move(kept));
}

std::string GarsideNormalForm::str() const {
  std::string s = "D^" + std::to_string(infimum);
  for (const auto& f : factors) {
    s += " | [";
    for (std::size_t j = 0; j < f.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(f[j]);
    }
    s += ']';
  }
  return s;
}

BraidWord permutation_braid(const Permutation& perm) {
  Permutation p = perm;
  const int k = static_cast<int>(p.size());
  std::vector<int> letters;
  for (bool found = true; found;) {
    found = false;
    for (int i = 1; i < k; ++i)
      if (in_starting_set(p, i)) {
        letters.push_back(i);
        left_mul_transposition(p, i);
        found = true;
        break;
      }
  }
  return BraidWord(std::max(k, 1), std::move(letters));
}

BraidWord half_twist(int k) { return permutation_braid(reverse_permutation(k)); }

BraidWord GarsideNormalForm::word() const {
  const BraidWord delta = half_twist(strands);
  const BraidWord step = infimum >= 0 ? delta : braid_inv(delta);
  BraidWord out(strands, {});
  for (long t = 0; t < std::labs(infimum); ++t) out = braid_mul(out, step);
  for (const auto& f : factors) out = braid_mul(out, permutation_braid(f));
  return out;
}

Permutation GarsideNormalForm::permutation() const { return induced_permutation(word()); }

GarsideNormalForm normal_form(const BraidWord& w) {
  GarsideNormalForm nf;
  nf.strands = w.strands;
  if (w.strands == 1) return nf;
  const Permutation w0 = reverse_permutation(w.strands);
  for (int x : w.letters) {
    const int i = std::abs(x);
    Permutation t = identity_permutation(w.strands);
    right_mul_transposition(t, i);
    if (x > 0) {
      nf.factors.push_back(t);
    } else {
      // F sigma_i^-1 = Delta^-1 tau(F) (Delta sigma_i^-1), tau = conjugation by Delta.
      --nf.infimum;
      for (auto& f : nf.factors) f = compose(w0, compose(f, w0));
      nf.factors.push_back(compose(w0, t));
    }
    normalize(nf);
  }
  return nf;
}

std::vector<GarsideNormalForm> enumerate_braids(int k, int L, std::size_t budget) {
  if (k < 1) throw DomainError("enumerate_braids: strand count must be positive");
  if (L < 0) throw DomainError("enumerate_braids: length bound must be non-negative");
  if (k == 1) return {GarsideNormalForm{1, 0, {}}};
  const Permutation id = identity_permutation(k);
  const Permutation w0 = reverse_permutation(k);
  std::vector<Permutation> simples;
  for (Permutation p = id;;) {
    if (p != id && p != w0) simples.push_back(p);
    if (!std::next_permutation(p.begin(), p.end())) break;
  }
  std::vector<std::vector<Permutation>> sequences = {{}};
  std::vector<Permutation> current;
  std::function<void()> grow = [&] {
    if (static_cast<int>(current.size()) == L) return;
    for (const auto& s : simples) {
      if (!current.empty() && !left_weighted(current.back(), s)) continue;
      current.push_back(s);
      sequences.push_back(current);
      if (sequences.size() * static_cast<std::size_t>(2 * L + 1) > budget)
        throw BudgetExceeded("enumerate_braids: more than " + std::to_string(budget) + " braids");
      grow();
      current.pop_back();
    }
  };
  grow();
  std::vector<GarsideNormalForm> out;
  for (const auto& seq : sequences)
    for (long p = -L; p <= L; ++p) out.push_back(GarsideNormalForm{k, p, seq});
  std::sort(out.begin(), out.end(), [](const GarsideNormalForm& a, const GarsideNormalForm& b) {
    if (a.canonical_length() != b.canonical_length()) return a.canonical_length() < b.canonical_length();
    if (a.infimum != b.infimum) return a.infimum < b.infimum;
    return a.factors < b.factors;
  });
  return out;
}

}  // namespace braidcx
