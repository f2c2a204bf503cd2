#pragma once

#include <unordered_map>
#include <vector>

#include "gpcert/algebra/finite_group.hpp"
#include "gpcert/algebra/homomorphism.hpp"
#include "gpcert/algebra/subgroup.hpp"

namespace gpcert {

struct Quotient {
  FiniteGroup group;
  Homomorphism projection;
};

// G/N with cosets numbered by their smallest representative; the coset of N
// is 0. Throws NotNormal.
Quotient quotient(const FiniteGroup& group, const Subgroup& normal);

struct DirectProduct {
  FiniteGroup group;
  Homomorphism first;
  Homomorphism second;
  std::size_t right_order = 1;

  // Element (a, b) of G x H.
  Element pair(Element a, Element b) const {
    return static_cast<Element>(a * right_order + b);
  }
};

// Elements are numbered (a, b) -> a * |H| + b. Throws OrderOverflow when the
// order exceeds cap.
DirectProduct direct_product(const FiniteGroup& left, const FiniteGroup& right,
                             std::size_t cap = kDefaultOrderCap);

// A subgroup of a direct product of finite groups, materialized as a group of
// its own. tuples[i] holds the coordinates of element i.
class TupleGroup {
 public:
  const FiniteGroup& group() const noexcept { return group_; }
  const std::vector<FiniteGroup>& factors() const noexcept { return factors_; }
  const std::vector<Element>& tuple(Element e) const { return tuples_[e]; }

  // Index of a tuple lying in the subgroup; nullopt otherwise.
  std::optional<Element> find(const std::vector<Element>& coordinates) const;

  friend TupleGroup generate_in_product(std::vector<FiniteGroup> factors,
                                        const std::vector<std::vector<Element>>&
                                            generators,
                                        std::size_t cap);

 private:
  struct TupleHash {
    std::size_t operator()(const std::vector<Element>& v) const noexcept;
  };

  FiniteGroup group_;
  std::vector<FiniteGroup> factors_;
  std::vector<std::vector<Element>> tuples_;
  std::unordered_map<std::vector<Element>, Element, TupleHash> index_;
};

// Subgroup of factors[0] x ... x factors[k-1] generated by the given tuples.
// Throws OrderOverflow once more than cap elements are generated.
TupleGroup generate_in_product(std::vector<FiniteGroup> factors,
                               const std::vector<std::vector<Element>>& generators,
                               std::size_t cap = kDefaultOrderCap);

struct SubgroupRealization {
  FiniteGroup group;
  // Inclusion into the parent, indexed by the realization's elements.
  std::vector<Element> embedding;
  // Parent element -> realization element, for members of the subgroup.
  std::unordered_map<Element, Element> restriction;
};

// A subgroup re-indexed as a standalone group (identity still 0).
SubgroupRealization realize_subgroup(const Subgroup& h);

}  // namespace gpcert
