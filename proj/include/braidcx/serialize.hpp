#pragma once

#include <string>

#include "json.hpp"

#include "braidcx/braid.hpp"
#include "braidcx/cohen_macaulay.hpp"
#include "braidcx/delta_complex.hpp"
#include "braidcx/graph_family.hpp"
#include "braidcx/homology.hpp"
#include "braidcx/morse.hpp"
#include "braidcx/partial_braid.hpp"
#include "braidcx/poset.hpp"
#include "braidcx/presentation.hpp"

namespace braidcx {

/// Insertion-ordered JSON, so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// {"cells": [[dim, id, [face ids]], ...]} ordered by dimension, then id.
Json to_json(const DeltaComplex& complex);
/// Cells may come in any order. DomainError on malformed input.
DeltaComplex complex_from_json(const Json& json);

/// Same layout with dim = height and faces = lower covers.
Json to_json(const Poset& poset);
/// A stated dimension that disagrees with the element's height is rejected.
Poset poset_from_json(const Json& json);

/// {"vertices": [...], "edges": [[u, v, id], ...]} with endpoint labels.
Json to_json(const MultiGraph& graph);
MultiGraph graph_from_json(const Json& json);
/// {"ground": graph or "Kn"/"Km,n", "family": name}.
GraphFamily family_from_json(const Json& json);

/// {"m","n","S","T","beta","frozen"}; beta is the word on all strands,
/// frozen is [] or {"bottom": [...], "top": [...], "braid": word}.
Json to_json(const PartialBraid& braid);
PartialBraid partial_braid_from_json(const Json& json);

HeightFunction heights_from_json(const Json& json);

Json to_json(const HomologyReport& report);
Json to_json(const Witness& witness);
Json to_json(const CMReport& report);
Json to_json(const QuillenReport& report);
Json to_json(const MorseReport& report);
Json to_json(const Pi1Report& report);
Json to_json(const GarsideNormalForm& nf);

/// Rows "degree,betti,torsion" with torsion coefficients joined by ';'.
std::string to_csv(const HomologyReport& report);

/// Two-space indented JSON followed by a newline.
std::string dump(const Json& json);

}  // namespace braidcx
