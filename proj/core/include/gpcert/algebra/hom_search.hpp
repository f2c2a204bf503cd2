#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gpcert/algebra/finite_group.hpp"

namespace gpcert {

// A finitely presented group. A relator is a word in the letters +(i+1) for
// generator i and -(i+1) for its inverse.
struct GroupPresentation {
  std::size_t generator_count = 0;
  std::vector<std::vector<int>> relators;
};

// Value of a relator word under a generator assignment.
Element evaluate_relator(const FiniteGroup& target,
                         std::span<const Element> assignment,
                         std::span<const int> relator);

struct HomEnumeration {
  // One generator -> element assignment per homomorphism, in lexicographic
  // order of assignments.
  std::vector<std::vector<Element>> assignments;
  // Set when the budget stopped the enumeration early.
  bool truncated = false;
};

// Visits every assignment satisfying all relators in lexicographic order.
// The visitor returns false to stop. Returns true when the enumeration ran to
// completion.
bool for_each_hom(const GroupPresentation& source, const FiniteGroup& target,
                  const std::function<bool(std::span<const Element>)>& visit);

// Visits every homomorphism from a finite group, given by the images of
// generators, in lexicographic order of generator images. visit receives the
// full image table and returns false to stop. Partial assignments that fail
// to extend to the subgroup generated so far are pruned. Returns true when
// the enumeration ran to completion.
bool for_each_hom_from(const FiniteGroup& source,
                       std::span<const Element> generators,
                       const FiniteGroup& target,
                       const std::function<bool(const std::vector<Element>&)>& visit);

// Collects at most budget homomorphisms.
HomEnumeration enumerate_homs(const GroupPresentation& source,
                              const FiniteGroup& target, std::size_t budget);

}  // namespace gpcert
