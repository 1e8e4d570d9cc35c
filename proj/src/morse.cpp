#include "braidcx/morse.hpp"

#include <set>

#include "braidcx/error.hpp"

namespace braidcx {

namespace {

long height_of(const DeltaComplex& complex, const HeightFunction& heights, std::size_t vertex) {
  const auto& id = complex.cells(0)[vertex].id;
  const auto it = heights.find(id);
  if (it == heights.end()) throw DomainError("heights: vertex '" + id + "' has no height");
  return it->second;
}

}  // namespace

void validate_heights(const DeltaComplex& complex, const HeightFunction& heights) {
  for (int d = 0; d <= complex.dimension(); ++d)
    for (std::size_t c = 0; c < complex.count(d); ++c) {
      std::set<long> seen;
      for (std::size_t v : complex.vertices({d, c}))
        if (!seen.insert(height_of(complex, heights, v)).second)
          throw InvalidHeightError("heights: cell '" + complex.id({d, c}) + "' is horizontal", complex.id({d, c}));
    }
}

DeltaComplex descending_link(const DeltaComplex& complex, const HeightFunction& heights, const std::string& vertex) {
  validate_heights(complex, heights);
  const CellRef v = complex.at(vertex);
  if (v.dim != 0) throw DomainError("descending link: '" + vertex + "' is not a vertex");
  const long top = height_of(complex, heights, v.index);
  const DeltaComplex link = link_complex(complex, v);
  return link.subcomplex([&](CellRef c) {
    const CellRef e = complex.at(link.id(c));
    for (std::size_t u : complex.vertices(e))
      if (u != v.index && height_of(complex, heights, u) >= top) return false;
    return true;
  });
}

DeltaComplex sublevel_complex(const DeltaComplex& complex, const HeightFunction& heights, long t) {
  validate_heights(complex, heights);
  return complex.full_subcomplex([&](std::size_t v) { return height_of(complex, heights, v) <= t; });
}

MorseReport bb_verify(const DeltaComplex& complex, const HeightFunction& heights, long t, int d) {
  validate_heights(complex, heights);
  MorseReport report;
  report.level = t;
  report.degree = d;
  report.hypothesis_holds = true;
  for (std::size_t v = 0; v < complex.count(0); ++v) {
    const long h = height_of(complex, heights, v);
    if (h <= t) continue;
    const std::string& id = complex.cells(0)[v].id;
    const DeltaComplex link = descending_link(complex, heights, id);
    DescendingLinkResult r{id, h, link.dimension(), reduced_homology(link), false};
    r.connected_enough = r.homology.vanishes_through(d);
    if (!r.connected_enough && report.hypothesis_holds) {
      report.hypothesis_holds = false;
      report.witness = Witness{"vertex", {id}, d, link.dimension(), r.homology};
    }
    report.descending_links.push_back(std::move(r));
  }
  const DeltaComplex sub = sublevel_complex(complex, heights, t);
  report.sublevel = reduced_homology(sub);
  report.whole = reduced_homology(complex);
  report.relative = relative_homology(complex, sub);
  report.relative_vanishes = report.relative.vanishes_through(d + 1);
  if (!report.hypothesis_holds) {
    report.verdict = Verdict::inconclusive;
  } else if (report.relative_vanishes) {
    report.verdict = Verdict::pass;
  } else {
    report.verdict = Verdict::fail;
    report.witness = Witness{"complex", {}, d + 1, complex.dimension(), report.relative};
  }
  return report;
}

}  // namespace braidcx
