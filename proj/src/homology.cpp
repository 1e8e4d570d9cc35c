#include "braidcx/homology.hpp"

#include "braidcx/error.hpp"

namespace braidcx {

std::size_t HomologyReport::betti_at(int degree) const {
  const int k = degree - min_degree;
  return k < 0 || k >= static_cast<int>(betti.size()) ? 0 : betti[static_cast<std::size_t>(k)];
}

std::vector<Integer> HomologyReport::torsion_at(int degree) const {
  const int k = degree - min_degree;
  return k < 0 || k >= static_cast<int>(torsion.size()) ? std::vector<Integer>{} : torsion[static_cast<std::size_t>(k)];
}

bool HomologyReport::vanishes_through(int degree) const {
  for (int i = min_degree; i <= std::min(degree, max_degree()); ++i)
    if (betti_at(i) != 0 || !torsion_at(i).empty()) return false;
  return true;
}

bool HomologyReport::torsion_free() const {
  for (const auto& t : torsion)
    if (!t.empty()) return false;
  return true;
}

HomologyReport homology(const ChainComplex& chain) {
  const std::size_t n = chain.ranks.size();
  std::vector<std::vector<Integer>> factors(n);
  for (std::size_t k = 0; k < n; ++k) factors[k] = invariant_factors(chain.boundaries[k]);
  HomologyReport report;
  report.min_degree = chain.min_degree;
  report.chain_ranks = chain.ranks;
  report.betti.resize(n);
  report.torsion.resize(n);
  long chi_chain = 0, chi_homology = 0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t in_rank = factors[k].size();
    const std::size_t out_rank = k + 1 < n ? factors[k + 1].size() : 0;
    if (in_rank + out_rank > chain.ranks[k]) throw InternalError("homology: boundary ranks exceed chain rank");
    report.betti[k] = chain.ranks[k] - in_rank - out_rank;
    if (k + 1 < n)
      for (const auto& f : factors[k + 1])
        if (f > 1) report.torsion[k].push_back(f);
    const long sign = (chain.min_degree + static_cast<int>(k)) % 2 == 0 ? 1 : -1;
    chi_chain += sign * static_cast<long>(chain.ranks[k]);
    chi_homology += sign * static_cast<long>(report.betti[k]);
  }
  report.euler_consistent = chi_chain == chi_homology;
  if (!report.euler_consistent) throw InternalError("homology: Euler characteristic mismatch");
  return report;
}

HomologyReport reduced_homology(const DeltaComplex& complex) { return homology(augmented_chain_complex(complex)); }

HomologyReport relative_homology(const DeltaComplex& complex, const DeltaComplex& sub) {
  return homology(relative_chain_complex(complex, sub));
}

std::vector<std::size_t> reduced_betti_mod_p(const DeltaComplex& complex, unsigned p) {
  const ChainComplex chain = augmented_chain_complex(complex);
  const std::size_t n = chain.ranks.size();
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t k = 0; k < n; ++k) ranks[k] = rank_mod_p(chain.boundaries[k], p);
  std::vector<std::size_t> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = chain.ranks[k] - ranks[k] - ranks[k + 1];
  return out;
}

bool is_homology_spherical(const HomologyReport& report, int dimension, int d) {
  return dimension == d && report.vanishes_through(d - 1);
}

bool is_homology_spherical(const DeltaComplex& complex, int d) {
  if (complex.dimension() != d) return false;
  return is_homology_spherical(reduced_homology(complex), complex.dimension(), d);
}

}  // namespace braidcx
