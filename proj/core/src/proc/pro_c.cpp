#include "gpcert/proc/pro_c.hpp"

#include <stdexcept>

namespace gpcert {

namespace {

// x N, as a mask over the group.
std::vector<char> product_mask(const Subgroup& x, const Subgroup& n) {
  const FiniteGroup& g = x.parent();
  std::vector<char> mask(g.order(), 0);
  for (Element a : x.elements()) {
    for (Element b : n.elements()) mask[g.mul(a, b)] = 1;
  }
  return mask;
}

}  // namespace

CoCFamily co_c_family(const FiniteGroup& group, const ClassTag& tag) {
  CoCFamily family{group, tag, {}};
  for (Subgroup& n : normal_subgroups(group)) {
    if (tag.kind() == ClassTag::Kind::Finite ||
        class_membership(quotient(group, n).group, tag)) {
      family.members.push_back(std::move(n));
    }
  }
  return family;
}

std::optional<Quotient> separating_quotient(const CoCFamily& family, Element x) {
  for (auto it = family.members.rbegin(); it != family.members.rend(); ++it) {
    if (!it->contains(x)) return quotient(family.group, *it);
  }
  return std::nullopt;
}

ClosednessVerdict is_c_closed(const FiniteGroup& group, const Subgroup& x,
                              const ClassTag& tag, std::vector<Element> queries) {
  if (queries.empty()) {
    for (Element a = 0; a < group.order(); ++a) {
      if (!x.contains(a)) queries.push_back(a);
    }
  }
  for (Element q : queries) {
    if (!group.contains(q) || x.contains(q)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "query " + std::to_string(q) + " is not in G \\ X");
    }
  }
  const CoCFamily family = co_c_family(group, tag);
  std::vector<std::vector<char>> masks;
  for (const Subgroup& n : family.members) masks.push_back(product_mask(x, n));

  ClosednessVerdict verdict;
  verdict.queries = queries;
  Subgroup kernel = whole_group(group);
  for (Element q : queries) {
    // Largest separating member first keeps the quotient small.
    std::optional<std::size_t> chosen;
    for (std::size_t i = family.members.size(); i-- > 0;) {
      if (!masks[i][q]) {
        chosen = i;
        break;
      }
    }
    if (!chosen) {
      verdict.closed = false;
      verdict.inseparable = q;
      for (const auto& mask : masks) {
        if (!mask[q]) throw std::logic_error("inseparable witness re-check failed");
      }
      return verdict;
    }
    kernel = intersect(kernel, family.members[*chosen]);
  }
  verdict.closed = true;
  verdict.alpha = quotient(group, kernel);
  const Homomorphism& alpha = verdict.alpha->projection;
  std::vector<char> image_of_x(verdict.alpha->group.order(), 0);
  for (Element a : x.elements()) image_of_x[alpha(a)] = 1;
  for (Element q : queries) {
    if (image_of_x[alpha(q)]) throw std::logic_error("closed witness re-check failed");
  }
  return verdict;
}

HallVerdict hall_open_check(const FiniteGroup& group, const Subgroup& h,
                            const ClassTag& tag) {
  HallVerdict verdict;
  const CoCFamily family = co_c_family(group, tag);
  for (const Subgroup& n : family.members) {
    if (n.is_subset_of(h)) {
      verdict.open = true;
      verdict.certificate = n;
      break;
    }
  }
  if (verdict.open && !h.is_whole() && !is_c_closed(group, h, tag).closed) {
    throw std::logic_error("open subgroup failed to be closed");
  }
  return verdict;
}

RetractWitness retract_closure_witness(const Homomorphism& rho, Element g,
                                       const Homomorphism& phi) {
  const FiniteGroup& group = rho.source();
  if (!(rho.target() == group) || !(phi.source() == group)) {
    throw Error(ErrorKind::PreconditionViolated,
                "rho must be an endomorphism and phi must start at its source");
  }
  for (Element a = 0; a < group.order(); ++a) {
    if (rho(rho(a)) != rho(a)) {
      throw Error(ErrorKind::PreconditionViolated, "rho is not idempotent");
    }
  }
  if (!group.contains(g) || rho(g) == g) {
    throw Error(ErrorKind::PreconditionViolated,
                "g = " + std::to_string(g) + " lies in the retract");
  }
  if (phi(g) == phi(rho(g))) {
    throw Error(ErrorKind::SeparatorFailed, "phi(g) = phi(rho(g))");
  }
  const FiniteGroup& c = phi.target();
  DirectProduct square = direct_product(c, c);
  std::vector<Element> images(group.order());
  for (Element a = 0; a < group.order(); ++a) {
    images[a] = square.pair(phi(a), phi(rho(a)));
  }
  std::vector<Element> diag;
  for (Element a = 0; a < c.order(); ++a) diag.push_back(square.pair(a, a));
  Subgroup diagonal(square.group, std::move(diag));
  Homomorphism psi = trusted_homomorphism(group, square.group, std::move(images));

  const Subgroup retract = rho.image();
  for (Element r : retract.elements()) {
    if (!diagonal.contains(psi(r))) throw std::logic_error("retract left the diagonal");
  }
  if (diagonal.contains(psi(g))) throw std::logic_error("g landed on the diagonal");
  return RetractWitness{square, psi, diagonal, psi(g)};
}

Homomorphism complement_retraction(const Subgroup& normal,
                                   const Subgroup& complement) {
  const FiniteGroup& group = normal.parent();
  if (!is_normal(normal) || !intersect(normal, complement).is_trivial() ||
      normal.order() * complement.order() != group.order()) {
    throw Error(ErrorKind::PreconditionViolated, "not a normal complement pair");
  }
  std::vector<Element> images(group.order(), 0);
  for (Element r : complement.elements()) {
    for (Element n : normal.elements()) images[group.mul(r, n)] = r;
  }
  return Homomorphism(group, group, std::move(images));
}

}  // namespace gpcert
