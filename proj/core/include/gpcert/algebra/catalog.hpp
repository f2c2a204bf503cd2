#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcert/algebra/finite_group.hpp"

namespace gpcert {

FiniteGroup cyclic_group(std::size_t n);

// Dihedral group of order 2n.
FiniteGroup dihedral_group(std::size_t n);

// Closure of permutations of {0, ..., degree-1}; element 0 is the identity
// and the rest follow in breadth-first order from the generators.
FiniteGroup permutation_group(std::size_t degree,
                              const std::vector<std::vector<std::size_t>>& generators);

FiniteGroup symmetric_group(std::size_t degree);

// <x, y | x^m, y^n = x^t, y x y^-1 = x^r>. Requires r^n = 1 and t r = t
// modulo m. Elements x^i y^j are numbered i + m j.
FiniteGroup metacyclic_group(std::size_t m, std::size_t n, std::size_t r,
                             std::size_t t);

// N x| Z_k where the generator of Z_k acts by the automorphism sigma (given
// as element images). Elements (a, j) are numbered a + |N| j.
FiniteGroup semidirect_with_cyclic(const FiniteGroup& normal,
                                   const std::vector<Element>& sigma,
                                   std::size_t k);

// Upper unitriangular 3x3 matrices over Z_p.
FiniteGroup heisenberg_group(std::size_t p);

struct CatalogEntry {
  std::string name;
  FiniteGroup group;
};

// Every group of order at most 16 up to isomorphism, S4, S5, the five groups
// of order 27 and the Heisenberg group of order 125. Sorted by order.
const std::vector<CatalogEntry>& group_catalog();

std::optional<FiniteGroup> catalog_group(std::string_view name);

}  // namespace gpcert
