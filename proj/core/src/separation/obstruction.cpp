#include "gpcert/separation/obstruction.hpp"

#include <stdexcept>

#include "gpcert/algebra/catalog.hpp"
#include "gpcert/algebra/constructions.hpp"
#include "gpcert/algebra/hom_search.hpp"
#include "gpcert/proc/pro_c.hpp"
#include "gpcert/separation/engine.hpp"

namespace gpcert {

namespace {

std::vector<std::pair<Subgroup, Element>> coset_evidence(const FiniteGroup& group,
                                                         const Subgroup& b,
                                                         const ClassTag& tag,
                                                         Element a) {
  std::vector<std::pair<Subgroup, Element>> evidence;
  for (const Subgroup& n : co_c_family(group, tag).members) {
    std::optional<Element> match;
    for (Element x : b.elements()) {
      if (n.contains(group.mul(group.inv(a), x))) {
        match = x;
        break;
      }
    }
    if (!match) throw std::logic_error("inseparable element has a separating subgroup");
    evidence.emplace_back(n, *match);
  }
  return evidence;
}

}  // namespace

std::optional<AmalgamObstruction> non_separability_witness(
    const FiniteGroup& a, const Subgroup& b, const FiniteGroup& c,
    const ClassTag& tag, const SearchBudget& budget, std::size_t scan_order) {
  if (!(b.parent() == a)) {
    throw Error(ErrorKind::PreconditionViolated, "B must be a subgroup of A");
  }
  if (c.order() < 2 || b.is_whole()) return std::nullopt;
  ClosednessVerdict verdict = is_c_closed(a, b, tag);
  if (verdict.closed) return std::nullopt;

  AmalgamObstruction out;
  out.a = *verdict.inseparable;
  out.c = 1;
  out.g.q_parts = {out.a, a.inv(out.a), 0};
  out.g.s_parts = {out.c, c.inv(out.c)};
  if (!is_reduced_amalgam_word(out.g, b)) {
    throw std::logic_error("commutator is not in reduced form");
  }
  out.survival = base_separate_amalgam(a, c, b, out.g, ClassTag::finite(), budget);
  out.evidence = coset_evidence(a, b, tag, out.a);

  const auto a_gens = generating_set(a);
  const auto c_gens = generating_set(c);
  const auto b_gens = generating_set(b);
  for (const CatalogEntry& entry : group_catalog()) {
    const FiniteGroup& t = entry.group;
    if (t.order() > scan_order || !class_membership(t, tag)) continue;
    std::vector<std::vector<Element>> c_maps;
    for_each_hom_from(c, c_gens, t, [&](const std::vector<Element>& m) {
      c_maps.push_back(m);
      return true;
    });
    for_each_hom_from(a, a_gens, t, [&](const std::vector<Element>& theta_a) {
      for (const auto& theta_c : c_maps) {
        bool centralizes = true;
        for (Element x : c_gens) {
          for (Element y : b_gens) {
            if (t.mul(theta_c[x], theta_a[y]) != t.mul(theta_a[y], theta_c[x])) {
              centralizes = false;
            }
          }
        }
        if (!centralizes) continue;
        ++out.scanned_pairs;
        Element value = t.mul(t.mul(theta_a[out.a], theta_c[out.c]),
                              t.mul(theta_a[a.inv(out.a)], theta_c[c.inv(out.c)]));
        if (value != 0) {
          throw std::logic_error("obstruction survives in " + entry.name);
        }
      }
      return true;
    });
  }
  return out;
}

std::optional<GraphObstruction> non_separability_witness(
    const GraphProduct& presentation, const ClassTag& tag, std::size_t cap) {
  const SimplicialGraph& graph = presentation.graph();
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    if (presentation.group(v).order() < 2) continue;
    SpecialAmalgamSplit split = amalgam_split(graph, v);
    if (split.a.empty()) continue;
    std::vector<VertexId> factors_at(split.a.begin(), split.a.end());
    std::size_t order = 1;
    for (VertexId u : factors_at) order *= presentation.group(u).order();
    if (order > cap) continue;

    // H = product of the vertex groups over A, generated coordinatewise.
    std::vector<FiniteGroup> factors;
    std::vector<std::vector<Element>> gens;
    for (std::size_t i = 0; i < factors_at.size(); ++i) {
      factors.push_back(presentation.group(factors_at[i]));
    }
    for (std::size_t i = 0; i < factors_at.size(); ++i) {
      for (Element x : generating_set(factors[i])) {
        std::vector<Element> t(factors.size(), 0);
        t[i] = x;
        gens.push_back(std::move(t));
      }
    }
    TupleGroup h = generate_in_product(factors, gens, cap);
    std::vector<Element> b_elements;
    for (Element x = 0; x < h.group().order(); ++x) {
      bool inside = true;
      for (std::size_t i = 0; i < factors_at.size(); ++i) {
        if (!split.b.contains(factors_at[i]) && h.tuple(x)[i] != 0) inside = false;
      }
      if (inside) b_elements.push_back(x);
    }
    Subgroup b(h.group(), b_elements);
    ClosednessVerdict verdict = is_c_closed(h.group(), b, tag);
    if (verdict.closed) continue;

    GraphObstruction out;
    out.split = split;
    const auto& coords = h.tuple(*verdict.inseparable);
    for (std::size_t i = 0; i < factors_at.size(); ++i) {
      if (coords[i] != 0) out.a.push_back({factors_at[i], coords[i]});
    }
    out.c = {v, 1};
    out.g = out.a;
    out.g.push_back(out.c);
    Word a_inv = inverse_word(presentation, out.a);
    out.g.insert(out.g.end(), a_inv.begin(), a_inv.end());
    out.g.push_back({v, presentation.group(v).inv(1)});
    if (is_trivial(presentation, out.g) || !killed_by_class(presentation, out.g, tag, cap)) {
      continue;
    }
    out.evidence = coset_evidence(h.group(), b, tag, *verdict.inseparable);
    return out;
  }
  return std::nullopt;
}

}  // namespace gpcert
