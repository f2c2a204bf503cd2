#include "gpcert/separation/engine.hpp"

#include <map>
#include <optional>
#include <stdexcept>

#include "gpcert/algebra/constructions.hpp"
#include "gpcert/product/amalgam.hpp"
#include "gpcert/product/retraction.hpp"
#include "gpcert/proc/pro_c.hpp"

namespace gpcert {

namespace {

std::string describe(const SimplicialGraph& g, const VertexSet& x) {
  std::string out = "{";
  for (VertexId v : x) out += (out.size() > 1 ? "," : "") + g.name(v);
  return out + "}";
}

ProductHom restrict_hom(const ProductHom& h, const VertexSet& x) {
  ProductHom out = h;
  for (VertexId v = 0; v < out.vertex_maps.size(); ++v) {
    if (!x.contains(v)) out.vertex_maps[v].clear();
  }
  return out;
}

class Engine {
 public:
  Engine(const GraphProduct& presentation, const ClassTag& tag,
         const SearchBudget& budget, std::vector<std::string>& log)
      : g_(presentation), tag_(tag), budget_(budget), log_(log) {
    for (const FiniteGroup& group : g_.groups()) gens_.push_back(generating_set(group));
    families_.resize(g_.groups().size());
  }

  ProductHom run(const Word& nf) { return separate(nf, 0); }

 private:
  const CoCFamily& family(VertexId v) {
    if (!families_[v]) families_[v] = co_c_family(g_.group(v), tag_);
    return *families_[v];
  }

  ProductHom combine(const std::vector<ProductHom>& homs) {
    try {
      return combine_homs(g_, homs, budget_.order_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderOverflow) throw;
      throw Error(ErrorKind::BudgetExceeded, e.what());
    }
  }

  void note(std::size_t depth, const std::string& line) {
    log_.push_back(std::string(2 * depth, ' ') + line);
  }

  ProductHom empty_hom() const {
    return ProductHom{FiniteGroup(), std::vector<std::vector<Element>>(g_.groups().size())};
  }

  ProductHom separate(const Word& nf, std::size_t depth) {
    if (auto it = cache_.find(nf); it != cache_.end()) return it->second;
    const SimplicialGraph& graph = g_.graph();
    VertexSet supp;
    for (const Syllable& s : nf) supp.insert(s.vertex);

    ProductHom result = empty_hom();
    if (supp.size() == 1) {
      const Syllable s = nf.front();
      auto q = separating_quotient(family(s.vertex), s.element);
      if (!q) {
        throw Error(ErrorKind::ClassObstruction,
                    "no " + tag_.to_string() + " quotient of the group at " +
                        graph.name(s.vertex) + " keeps the syllable");
      }
      result.target = q->group;
      result.vertex_maps[s.vertex] = q->projection.images();
      note(depth, "vertex " + graph.name(s.vertex) + ": quotient of order " +
                      std::to_string(q->group.order()));
    } else {
      result = split_and_separate(nf, supp, depth);
    }
    if (result.evaluate(nf) == 0) {
      throw std::logic_error("separating homomorphism kills the element");
    }
    cache_.emplace(nf, result);
    return result;
  }

  ProductHom split_and_separate(const Word& nf, const VertexSet& supp,
                                std::size_t depth) {
    const SimplicialGraph& graph = g_.graph();
    std::map<VertexId, std::size_t> occurrences;
    for (const Syllable& s : nf) ++occurrences[s.vertex];
    VertexId v = occurrences.begin()->first;
    for (auto [u, count] : occurrences) {
      if (count < occurrences[v]) v = u;
    }
    const SpecialAmalgamSplit split = amalgam_split(graph, v, supp);
    const AmalgamForm form = amalgam_form(g_, nf, split);
    const std::size_t n = form.n();
    note(depth, "support " + describe(graph, supp) + ", split at " + graph.name(v) +
                    " with link " + describe(graph, split.b) + ", n = " +
                    std::to_string(n));

    // alpha: coordinates on G_A keeping middle segments outside alpha(G_B).
    std::vector<ProductHom> coords;
    for (std::size_t i = 1; i < n; ++i) {
      const Word& a = form.a_parts[i];
      if (!coords.empty()) {
        ProductHom alpha = combine(coords);
        if (!image_of_link(alpha, split.b).contains(alpha.evaluate(a))) continue;
      }
      Word h = concat(inverse_word(g_, retract(g_, split.b, a).word), a);
      h = normal_form(g_, h).word;
      note(depth, "segment " + std::to_string(i) + ": separate it from the link");
      ProductHom phi = separate(h, depth + 1);
      coords.push_back(phi);
      coords.push_back(restrict_hom(phi, split.b));
    }

    // gamma: a quotient of G_v keeping every c-part and their product.
    const FiniteGroup& gv = g_.group(v);
    std::vector<Element> keep;
    Element c_total = 0;
    for (const Syllable& c : form.c_parts) {
      keep.push_back(c.element);
      c_total = gv.mul(c_total, c.element);
    }
    if (c_total != 0) keep.push_back(c_total);
    Subgroup kernel = whole_group(gv);
    for (Element x : keep) {
      auto q = separating_quotient(family(v), x);
      if (!q) {
        throw Error(ErrorKind::ClassObstruction,
                    "no " + tag_.to_string() + " quotient of the group at " +
                        graph.name(v) + " keeps a syllable");
      }
      kernel = intersect(kernel, q->projection.kernel());
    }
    Quotient gamma = quotient(gv, kernel);

    ProductHom alpha = combine(coords);
    if (c_total == 0) {
      Word rest = retract(g_, split.a, nf).word;
      if (!rest.empty() && alpha.evaluate(rest) == 0) {
        note(depth, "separate the retraction onto " + describe(graph, split.a));
        coords.push_back(separate(rest, depth + 1));
        alpha = combine(coords);
      }
    }

    AmalgamWord word;
    for (const Word& a : form.a_parts) word.q_parts.push_back(alpha.evaluate(a));
    for (const Syllable& c : form.c_parts) word.s_parts.push_back(gamma.projection(c.element));
    Subgroup b_image = image_of_link(alpha, split.b);
    if (!is_reduced_amalgam_word(word, b_image)) {
      throw std::logic_error("amalgam image is not reduced");
    }
    AmalgamSeparation base = base_separate_amalgam(alpha.target, gamma.group, b_image,
                                                   word, tag_, budget_, meter_);
    note(depth, "stage " + std::to_string(base.stage) + " via " + base.target_name +
                    ": |Q| = " + std::to_string(alpha.target.order()) + ", |S| = " +
                    std::to_string(gamma.group.order()) + ", |D| = " +
                    std::to_string(base.target.order()));

    ProductHom out = empty_hom();
    out.target = base.target;
    for (VertexId u : split.a) {
      for (Element x : alpha.vertex_maps[u]) out.vertex_maps[u].push_back(base.theta_q[x]);
    }
    for (Element x = 0; x < gv.order(); ++x) {
      out.vertex_maps[v].push_back(base.theta_s[gamma.projection(x)]);
    }
    return out;
  }

  Subgroup image_of_link(const ProductHom& alpha, const VertexSet& b) const {
    std::vector<Element> gens;
    for (VertexId u : b) {
      if (alpha.vertex_maps[u].empty()) continue;
      for (Element x : gens_[u]) gens.push_back(alpha.vertex_maps[u][x]);
    }
    return generate_subgroup(alpha.target, gens);
  }

  const GraphProduct& g_;
  ClassTag tag_;
  SearchBudget budget_;
  SearchMeter meter_;
  std::vector<std::string>& log_;
  std::vector<std::vector<Element>> gens_;
  std::vector<std::optional<CoCFamily>> families_;
  std::map<Word, ProductHom> cache_;
};

// G_v modulo the intersection of its co-C subgroups.
Quotient residual_quotient(const FiniteGroup& group, const ClassTag& tag) {
  if (tag.kind() == ClassTag::Kind::Abelian) {
    Subgroup whole = whole_group(group);
    return quotient(group, commutator_subgroup(whole, whole));
  }
  Subgroup residual = whole_group(group);
  for (const Subgroup& n : co_c_family(group, tag).members) {
    residual = intersect(residual, n);
  }
  return quotient(group, residual);
}

// The graph product over the vertex groups' largest quotients in the class.
struct ClassReduction {
  ClassReduction(const GraphProduct& presentation, const ClassTag& tag)
      : reduced(presentation.graph(), reduce_groups(presentation, tag)) {}

  std::vector<Quotient> local;
  GraphProduct reduced;

  Word project(const Word& w) const {
    Word out;
    for (const Syllable& s : w) {
      out.push_back({s.vertex, local[s.vertex].projection(s.element)});
    }
    return out;
  }

  // The reduced groups are abelian here; map into their direct product.
  ProductHom abelian_hom(std::size_t cap) const {
    const std::size_t n = reduced.groups().size();
    std::vector<ProductHom> coords;
    for (VertexId v = 0; v < n; ++v) {
      ProductHom h{reduced.group(v), std::vector<std::vector<Element>>(n)};
      h.vertex_maps[v] = Homomorphism::identity(reduced.group(v)).images();
      coords.push_back(std::move(h));
    }
    return combine_homs(reduced, coords, cap);
  }

 private:
  std::vector<FiniteGroup> reduce_groups(const GraphProduct& presentation,
                                         const ClassTag& tag) {
    std::vector<FiniteGroup> groups;
    for (const FiniteGroup& group : presentation.groups()) {
      local.push_back(tag.kind() == ClassTag::Kind::Finite
                          ? Quotient{group, Homomorphism::identity(group)}
                          : residual_quotient(group, tag));
      groups.push_back(local.back().group);
    }
    return groups;
  }
};

}  // namespace

bool killed_by_class(const GraphProduct& presentation, const Word& element,
                     const ClassTag& tag, std::size_t cap) {
  validate_word(presentation, element);
  const ClassReduction reduction(presentation, tag);
  if (tag.kind() == ClassTag::Kind::Abelian) {
    return reduction.abelian_hom(cap).evaluate(reduction.project(element)) == 0;
  }
  return is_trivial(reduction.reduced, reduction.project(element));
}

Element ProductHom::evaluate(const Word& word) const {
  Element value = 0;
  for (const Syllable& s : word) {
    if (s.vertex < vertex_maps.size() && !vertex_maps[s.vertex].empty()) {
      value = target.mul(value, vertex_maps[s.vertex][s.element]);
    }
  }
  return value;
}

ProductHom combine_homs(const GraphProduct& presentation,
                        const std::vector<ProductHom>& homs, std::size_t cap) {
  const std::size_t nv = presentation.groups().size();
  std::vector<FiniteGroup> factors;
  for (const ProductHom& h : homs) factors.push_back(h.target);
  auto coordinates = [&](VertexId v, Element x) {
    std::vector<Element> t;
    for (const ProductHom& h : homs) {
      t.push_back(h.vertex_maps[v].empty() ? 0 : h.vertex_maps[v][x]);
    }
    return t;
  };
  std::vector<VertexId> touched;
  std::vector<std::vector<Element>> generators;
  for (VertexId v = 0; v < nv; ++v) {
    bool any = false;
    for (const ProductHom& h : homs) any = any || !h.vertex_maps[v].empty();
    if (!any) continue;
    touched.push_back(v);
    for (Element x : generating_set(presentation.group(v))) {
      generators.push_back(coordinates(v, x));
    }
  }
  TupleGroup d = generate_in_product(factors, generators, cap);
  ProductHom out{d.group(), std::vector<std::vector<Element>>(nv)};
  for (VertexId v : touched) {
    for (Element x = 0; x < presentation.group(v).order(); ++x) {
      out.vertex_maps[v].push_back(*d.find(coordinates(v, x)));
    }
  }
  return out;
}

SeparationCertificate separate(const GraphProduct& presentation, const Word& element,
                               const ClassTag& tag, const SearchBudget& budget) {
  validate_word(presentation, element);
  const Word nf = normal_form(presentation, element).word;
  if (nf.empty()) {
    throw Error(ErrorKind::TrivialElement, "the element is the identity");
  }
  SeparationCertificate cert{presentation, tag, FiniteGroup(), {}, element, 0, {}};
  std::vector<std::string>& log = cert.derivation_log;
  log.push_back("normal form of length " + std::to_string(nf.size()));

  const ClassReduction reduction(presentation, tag);
  ProductHom reduced_hom;
  if (tag.kind() == ClassTag::Kind::Abelian) {
    reduced_hom = reduction.abelian_hom(budget.order_cap);
    if (reduced_hom.evaluate(reduction.project(nf)) == 0) {
      throw Error(ErrorKind::ClassObstruction,
                  "the element dies in the product of abelianized vertex groups");
    }
    log.push_back("abelianized product of order " +
                  std::to_string(reduced_hom.target.order()));
  } else {
    Word target_nf = normal_form(reduction.reduced, reduction.project(nf)).word;
    if (target_nf.empty()) {
      throw Error(ErrorKind::ClassObstruction,
                  "the element dies once each vertex group is replaced by its largest " +
                      tag.to_string() + " quotient");
    }
    if (tag.kind() != ClassTag::Kind::Finite) {
      log.push_back("vertex groups replaced by their " + tag.to_string() + " quotients");
    }
    Engine engine(reduction.reduced, tag, budget, log);
    reduced_hom = engine.run(target_nf);
  }

  cert.target = reduced_hom.target;
  for (VertexId v = 0; v < presentation.groups().size(); ++v) {
    const FiniteGroup& group = presentation.group(v);
    std::vector<Element> row(group.order(), 0);
    if (!reduced_hom.vertex_maps[v].empty()) {
      for (Element x = 0; x < group.order(); ++x) {
        row[x] = reduced_hom.vertex_maps[v][reduction.local[v].projection(x)];
      }
    }
    cert.vertex_homs.push_back(std::move(row));
  }
  ProductHom full{cert.target, cert.vertex_homs};
  cert.image = full.evaluate(element);
  log.push_back("target of order " + std::to_string(cert.target.order()));

  CheckResult check = check_certificate(cert);
  if (!check.valid()) {
    throw std::logic_error("engine produced an invalid certificate: " +
                           std::string(to_string(check.diagnostic)) + " " + check.detail);
  }
  return cert;
}

}  // namespace gpcert
