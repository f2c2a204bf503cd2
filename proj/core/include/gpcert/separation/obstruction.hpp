#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gpcert/product/amalgam.hpp"
#include "gpcert/separation/base_separator.hpp"

namespace gpcert {

// For A *_B (B x C) with B not closed in A: the commutator g = [a, c] of an
// inseparable a and a nontrivial c.
struct AmalgamObstruction {
  Element a = 0;
  Element c = 0;
  AmalgamWord g;  // a c a^-1 c^-1
  // A finite quotient of the amalgam in which g survives, so g != e.
  AmalgamSeparation survival;
  // For each co-C subgroup N of A, some b in B with aN = bN.
  std::vector<std::pair<Subgroup, Element>> evidence;
  // Hom pairs into catalog groups of the class that were checked to kill g.
  std::size_t scanned_pairs = 0;
};

// Returns nothing when B is C-closed in A or C is trivial. scan_order bounds
// the catalog targets of the killing scan.
std::optional<AmalgamObstruction> non_separability_witness(
    const FiniteGroup& a, const Subgroup& b, const FiniteGroup& c,
    const ClassTag& tag, const SearchBudget& budget = {},
    std::size_t scan_order = 16);

// Obstruction inside a graph product: at the split over v, the image of G_A
// in the direct product H of its vertex groups leaves a outside every co-C
// separation from G_B. g is additionally verified to die in every quotient
// into the class.
struct GraphObstruction {
  SpecialAmalgamSplit split;
  Word a;
  Syllable c;
  Word g;
  std::vector<std::pair<Subgroup, Element>> evidence;  // in H
};

// Splits whose H exceeds cap are skipped.
std::optional<GraphObstruction> non_separability_witness(
    const GraphProduct& presentation, const ClassTag& tag,
    std::size_t cap = kDefaultOrderCap);

}  // namespace gpcert
