#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gpcert/algebra/finite_group.hpp"
#include "gpcert/algebra/subgroup.hpp"

namespace gpcert {

// The class C of finite groups that quotients must land in.
class ClassTag {
 public:
  enum class Kind { Finite, PGroup, Solvable, FiniteSolvable, Abelian, Nilpotent };

  static ClassTag finite() { return ClassTag(Kind::Finite, 0); }
  // Throws PreconditionViolated unless p is prime.
  static ClassTag pgroup(unsigned p);
  static ClassTag solvable() { return ClassTag(Kind::Solvable, 0); }
  static ClassTag finite_solvable() { return ClassTag(Kind::FiniteSolvable, 0); }
  static ClassTag abelian() { return ClassTag(Kind::Abelian, 0); }
  static ClassTag nilpotent() { return ClassTag(Kind::Nilpotent, 0); }

  // Accepts "finite", "pgroup:<p>", "solvable", "finite-solvable", "abelian",
  // "nilpotent". Throws SchemaError otherwise.
  static ClassTag parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  unsigned prime() const noexcept { return prime_; }
  std::string to_string() const;

  friend bool operator==(const ClassTag&, const ClassTag&) = default;

 private:
  ClassTag(Kind kind, unsigned p) : kind_(kind), prime_(p) {}

  Kind kind_;
  unsigned prime_;
};

bool is_prime(unsigned n);

// Derived series G = G0 > G1 > ... ending at the first repeated term.
std::vector<Subgroup> derived_series(const FiniteGroup& group);

// Lower central series G = L0 > L1 = [G, L0] > ... ending at the first
// repeated term.
std::vector<Subgroup> lower_central_series(const FiniteGroup& group);

bool class_membership(const FiniteGroup& group, const ClassTag& tag);

}  // namespace gpcert
