#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcx/delta_complex.hpp"
#include "braidcx/error.hpp"
#include "braidcx/homology.hpp"
#include "braidcx/poset.hpp"

namespace braidcx {

enum class Verdict { pass, fail, inconclusive };
std::string to_string(Verdict verdict);

/// Printed with every Cohen-Macaulay style report.
inline constexpr const char* kHomologicalOnly =
    "sphericity is certified on integer homology only; homotopy-level claims are not verified";

/// The subobject on which a check failed.
struct Witness {
  /// complex | cell | link | boundary | interval | target | fiber | conclusion | vertex
  std::string kind;
  /// Cell or element ids; empty when the whole object fails.
  std::vector<std::string> ids;
  int expected_dimension = -1;
  int actual_dimension = -1;
  HomologyReport homology;
};

struct CMReport {
  Verdict verdict = Verdict::pass;
  int dimension = -1;
  HomologyReport homology;
  std::size_t subcomplexes_checked = 0;
  std::optional<Witness> witness;
};

/// Homological Cohen-Macaulay test of a strict Delta-complex: X is spherical of
/// dim X and the link of every cell c is spherical of dim X - dim c - 1.
/// The witness is the failing cell with the lexicographically least id.
/// DomainError for non-strict input (use poset_cm_check on cell_poset(X)).
CMReport cm_check(const DeltaComplex& complex, unsigned threads = 1);

/// The order complex is spherical of dim P; for every p, link(p) is spherical
/// of dim P - h(p) - 1 and boundary(p) of h(p) - 1; every open interval (p, q)
/// is spherical of h(q) - h(p) - 2.
CMReport poset_cm_check(const Poset& poset, unsigned threads = 1);

/// A poset map that is not strictly increasing: lower < upper but f(lower) >= f(upper) fails.
class PreconditionError : public DomainError {
 public:
  PreconditionError(const std::string& what, std::string lower_id, std::string upper_id)
      : DomainError(what), lower(std::move(lower_id)), upper(std::move(upper_id)) {}
  std::string lower;
  std::string upper;
};

struct FiberResult {
  std::string element;
  int height = 0;
  CMReport report;
};

struct QuillenReport {
  Verdict verdict = Verdict::pass;
  /// Dimension d of the target.
  int dimension = -1;
  CMReport target;
  std::vector<FiberResult> fibers;
  /// Direct check of the source, run only when every hypothesis holds.
  std::optional<CMReport> source;
  /// False only when the hypotheses hold and the direct check disagrees.
  bool conclusion_consistent = true;
  std::optional<Witness> witness;
};

/// Fiber criterion for a strictly increasing f: P -> Q. Requires Q to be CM of
/// dimension d and each f^-1(closure(y)) to be CM of dimension height(y); then
/// checks the conclusion "P is CM of dimension d" directly.
/// PreconditionError if f is not strictly increasing, DomainError if f is not
/// a total map into Q.
QuillenReport quillen_fiber_check(const Poset& source, const Poset& target,
                                  const std::map<std::string, std::string>& map, unsigned threads = 1);

}  // namespace braidcx
