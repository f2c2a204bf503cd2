#pragma once

#include <optional>
#include <vector>

#include "gpcert/algebra/class_tag.hpp"
#include "gpcert/algebra/constructions.hpp"
#include "gpcert/algebra/homomorphism.hpp"

namespace gpcert {

// The normal subgroups N of group with group/N in the class, ordered by
// (order, elements).
struct CoCFamily {
  FiniteGroup group;
  ClassTag tag;
  std::vector<Subgroup> members;
};

CoCFamily co_c_family(const FiniteGroup& group, const ClassTag& tag);

// Quotient by the largest co-C subgroup that avoids x, if any.
std::optional<Quotient> separating_quotient(const CoCFamily& family, Element x);

struct ClosednessVerdict {
  bool closed = false;
  // When closed: alpha(g) lies outside alpha(X) for every query g.
  std::optional<Quotient> alpha;
  // When not closed: an element of G \ X whose coset meets X for every
  // co-C subgroup.
  std::optional<Element> inseparable;
  std::vector<Element> queries;
};

// Queries must avoid x; an empty list means all of G \ X. The witness is
// re-checked before returning. Throws PreconditionViolated on a query in x.
ClosednessVerdict is_c_closed(const FiniteGroup& group, const Subgroup& x,
                              const ClassTag& tag,
                              std::vector<Element> queries = {});

struct HallVerdict {
  bool open = false;
  std::optional<Subgroup> certificate;  // co-C subgroup contained in H
};

// H is open iff it contains a co-C subgroup. An open H is additionally
// checked to be closed.
HallVerdict hall_open_check(const FiniteGroup& group, const Subgroup& h,
                            const ClassTag& tag);

struct RetractWitness {
  DirectProduct square;   // C x C
  Homomorphism psi;       // f -> (phi(f), phi(rho(f)))
  Subgroup diagonal;
  Element image_of_g = 0;
};

// rho is an idempotent endomorphism of group onto R, g lies outside R, and
// phi separates g from rho(g). Throws PreconditionViolated or
// SeparatorFailed. The returned witness is checked exhaustively.
RetractWitness retract_closure_witness(const Homomorphism& rho, Element g,
                                       const Homomorphism& phi);

// The retraction with kernel normal onto the complement. Throws
// PreconditionViolated unless group = complement * normal with trivial
// intersection and normal is normal.
Homomorphism complement_retraction(const Subgroup& normal,
                                   const Subgroup& complement);

}  // namespace gpcert
