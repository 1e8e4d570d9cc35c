#include "braidcx/cohen_macaulay.hpp"

#include <algorithm>
#include <atomic>

#include "braidcx/parallel.hpp"

namespace braidcx {

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

namespace {

// Checks jobs[0..n) in parallel and keeps the failure with the smallest index,
// so the witness does not depend on scheduling.
template <typename Job>
std::optional<Witness> first_failure(std::size_t n, unsigned threads, Job&& job) {
  std::atomic<std::size_t> first{n};
  std::vector<std::optional<Witness>> found(n);
  parallel_for(n, threads, [&](std::size_t i) {
    if (i > first.load()) return;
    found[i] = job(i);
    if (!found[i]) return;
    std::size_t seen = first.load();
    while (i < seen && !first.compare_exchange_weak(seen, i)) {
    }
  });
  const std::size_t k = first.load();
  if (k == n) return std::nullopt;
  return found[k];
}

std::optional<Witness> spherical_or_witness(const DeltaComplex& complex, int expected, std::string kind,
                                            std::vector<std::string> ids) {
  HomologyReport h = reduced_homology(complex);
  if (is_homology_spherical(h, complex.dimension(), expected)) return std::nullopt;
  return Witness{std::move(kind), std::move(ids), expected, complex.dimension(), std::move(h)};
}

}  // namespace

CMReport cm_check(const DeltaComplex& complex, unsigned threads) {
  if (!complex.is_strict())
    throw DomainError("cm_check: complex is not strict; run poset_cm_check on its cell poset");
  CMReport report;
  report.dimension = complex.dimension();
  report.homology = reduced_homology(complex);
  report.subcomplexes_checked = 1;
  if (!is_homology_spherical(report.homology, report.dimension, report.dimension)) {
    report.verdict = Verdict::fail;
    report.witness = Witness{"complex", {}, report.dimension, report.dimension, report.homology};
    return report;
  }
  std::vector<CellRef> cells;
  for (int d = 0; d <= complex.dimension(); ++d)
    for (std::size_t i = 0; i < complex.count(d); ++i) cells.push_back({d, i});
  std::sort(cells.begin(), cells.end(),
            [&](const CellRef& a, const CellRef& b) { return complex.id(a) < complex.id(b); });
  report.witness = first_failure(cells.size(), threads, [&](std::size_t i) {
    const CellRef c = cells[i];
    return spherical_or_witness(link_complex(complex, c), complex.dimension() - c.dim - 1, "cell",
                                {complex.id(c)});
  });
  report.subcomplexes_checked += cells.size();
  if (report.witness) report.verdict = Verdict::fail;
  return report;
}

CMReport poset_cm_check(const Poset& poset, unsigned threads) {
  CMReport report;
  report.dimension = poset.dimension();
  const DeltaComplex whole = order_complex(poset);
  report.homology = reduced_homology(whole);
  report.subcomplexes_checked = 1;
  if (!is_homology_spherical(report.homology, whole.dimension(), report.dimension)) {
    report.verdict = Verdict::fail;
    report.witness = Witness{"complex", {}, report.dimension, whole.dimension(), report.homology};
    return report;
  }
  std::atomic<std::size_t> checked{0};
  report.witness = first_failure(poset.size(), threads, [&](std::size_t p) -> std::optional<Witness> {
    const std::string& id = poset.id(p);
    const int h = poset.height(p);
    ++checked;
    if (auto w = spherical_or_witness(order_complex(poset.induced(poset.strictly_above(p))),
                                      poset.dimension() - h - 1, "link", {id}))
      return w;
    ++checked;
    if (auto w = spherical_or_witness(order_complex(poset.induced(poset.strictly_below(p))), h - 1, "boundary", {id}))
      return w;
    for (std::size_t q : poset.strictly_above(p)) {
      std::vector<std::size_t> between;
      for (std::size_t r : poset.strictly_above(p))
        if (poset.less(r, q)) between.push_back(r);
      ++checked;
      if (auto w = spherical_or_witness(order_complex(poset.induced(between)), poset.height(q) - h - 2, "interval",
                                        {id, poset.id(q)}))
        return w;
    }
    return std::nullopt;
  });
  report.subcomplexes_checked += checked.load();
  if (report.witness) report.verdict = Verdict::fail;
  return report;
}

QuillenReport quillen_fiber_check(const Poset& source, const Poset& target,
                                  const std::map<std::string, std::string>& map, unsigned threads) {
  std::vector<std::size_t> image(source.size());
  for (std::size_t p = 0; p < source.size(); ++p) {
    const auto it = map.find(source.id(p));
    if (it == map.end()) throw DomainError("quillen: element '" + source.id(p) + "' has no image");
    image[p] = target.index_of(it->second);
  }
  for (const auto& [from, to] : map)
    if (!source.contains(from)) throw DomainError("quillen: map names unknown source element '" + from + "'");
  for (std::size_t a = 0; a < source.size(); ++a)
    for (std::size_t b = 0; b < source.size(); ++b)
      if (source.less(a, b) && !target.less(image[a], image[b]))
        throw PreconditionError("quillen: map is not strictly increasing on " + source.id(a) + " < " + source.id(b),
                                source.id(a), source.id(b));

  QuillenReport report;
  report.target = poset_cm_check(target, threads);
  report.dimension = target.dimension();
  if (report.target.verdict != Verdict::pass) {
    report.verdict = Verdict::fail;
    report.witness = report.target.witness;
    report.witness->kind = "target";
    return report;
  }
  report.fibers.resize(target.size());
  parallel_for(target.size(), threads, [&](std::size_t y) {
    std::vector<std::size_t> fiber;
    for (std::size_t p = 0; p < source.size(); ++p)
      if (target.less_equal(image[p], y)) fiber.push_back(p);
    FiberResult result{target.id(y), target.height(y), poset_cm_check(source.induced(fiber))};
    report.fibers[y] = std::move(result);
  });
  for (const auto& f : report.fibers) {
    if (f.report.verdict == Verdict::pass && f.report.dimension == f.height) continue;
    report.verdict = Verdict::fail;
    Witness w{"fiber", {f.element}, f.height, f.report.dimension, f.report.homology};
    if (f.report.witness) w.homology = f.report.witness->homology;
    report.witness = std::move(w);
    return report;
  }
  report.source = poset_cm_check(source, threads);
  const bool holds = report.source->verdict == Verdict::pass && report.source->dimension == report.dimension;
  if (!holds) {
    report.verdict = Verdict::fail;
    report.conclusion_consistent = false;
    Witness w{"conclusion", {}, report.dimension, report.source->dimension, report.source->homology};
    if (report.source->witness) {
      w.ids = report.source->witness->ids;
      w.homology = report.source->witness->homology;
    }
    report.witness = std::move(w);
  }
  return report;
}

}  // namespace braidcx
