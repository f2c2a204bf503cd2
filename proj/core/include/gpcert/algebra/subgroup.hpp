#pragma once

#include <span>
#include <vector>

#include "gpcert/algebra/finite_group.hpp"

namespace gpcert {

// A subgroup of a finite group, kept as a sorted element list together with a
// membership mask over the parent.
class Subgroup {
 public:
  // Wraps a set that is already known to be a subgroup of parent.
  Subgroup(FiniteGroup parent, std::vector<Element> elements);

  const FiniteGroup& parent() const noexcept { return parent_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(Element a) const noexcept {
    return a < mask_.size() && mask_[a];
  }
  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept {
    return elements_.size() == parent_.order();
  }
  bool is_subset_of(const Subgroup& other) const;

  friend bool operator==(const Subgroup& lhs, const Subgroup& rhs) {
    return lhs.elements_ == rhs.elements_;
  }

 private:
  FiniteGroup parent_;
  std::vector<Element> elements_;
  std::vector<char> mask_;
};

Subgroup trivial_subgroup(const FiniteGroup& group);
Subgroup whole_group(const FiniteGroup& group);

// Subgroup generated by the given elements.
Subgroup generate_subgroup(const FiniteGroup& group,
                           std::span<const Element> generators);

// Smallest normal subgroup containing the given elements.
Subgroup normal_closure(const FiniteGroup& group,
                        std::span<const Element> generators);

// [H, K]: the subgroup generated by all h k h^-1 k^-1.
Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k);

Subgroup intersect(const Subgroup& h, const Subgroup& k);

// Checks closure and identity membership; throws PreconditionViolated when the
// element set is not a subgroup of group.
Subgroup make_subgroup(const FiniteGroup& group, std::vector<Element> elements);

bool is_normal(const Subgroup& h);

// Every subgroup, ordered by (order, element list).
std::vector<Subgroup> all_subgroups(const FiniteGroup& group);

// Every normal subgroup, ordered by (order, element list). Always contains
// the trivial subgroup first and the whole group last.
std::vector<Subgroup> normal_subgroups(const FiniteGroup& group);

// Greedy deterministic generating set: repeatedly adds the element that
// enlarges the generated subgroup the most (smallest index on ties).
std::vector<Element> generating_set(const Subgroup& h);
std::vector<Element> generating_set(const FiniteGroup& group);

}  // namespace gpcert
