#pragma once

#include <vector>

#include "gpcert/separation/base_separator.hpp"
#include "gpcert/separation/certificate.hpp"

namespace gpcert {

// A homomorphism out of a graph product of finite groups, given by one map
// per vertex group. An empty map sends that vertex group to the identity.
struct ProductHom {
  FiniteGroup target;
  std::vector<std::vector<Element>> vertex_maps;

  Element evaluate(const Word& word) const;
};

// x -> (h_1(x), ..., h_k(x)) onto the subgroup of the direct product that the
// images generate. Throws OrderOverflow past cap.
ProductHom combine_homs(const GraphProduct& presentation,
                        const std::vector<ProductHom>& homs,
                        std::size_t cap = kDefaultOrderCap);

// Every homomorphism into the class factors through the graph product of the
// vertex groups' largest quotients in the class (for abelian targets, through
// the direct product of abelianizations). True when element dies there, which
// proves it dies in every quotient into the class.
bool killed_by_class(const GraphProduct& presentation, const Word& element,
                     const ClassTag& tag, std::size_t cap = kDefaultOrderCap);

// Builds a certificate for a nontrivial element by induction on its support:
// split at a vertex, separate the middle amalgam segments from the link
// subgroup recursively, then separate the amalgam image. The result always
// passes check_certificate.
// Throws TrivialElement, ClassObstruction or BudgetExceeded.
SeparationCertificate separate(const GraphProduct& presentation, const Word& element,
                               const ClassTag& tag, const SearchBudget& budget = {});

}  // namespace gpcert
