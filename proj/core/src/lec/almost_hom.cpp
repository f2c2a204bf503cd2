#include "gpcert/lec/almost_hom.hpp"

#include <algorithm>
#include <stdexcept>

#include "gpcert/algebra/catalog.hpp"
#include "gpcert/separation/engine.hpp"

namespace gpcert {

namespace {

std::string describe(const SyllableAlgebra& algebra, const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (const Syllable& s : word) {
    out += "(" + algebra.graph().name(s.vertex) + "," +
           algebra.element_label(s.vertex, s.element) + ")";
  }
  return out;
}

[[noreturn]] void violated(const std::string& detail) {
  throw Error(ErrorKind::AlmostHomViolated, detail);
}

Word map_syllables(const std::vector<AlmostHom>& maps, const Word& word) {
  Word out;
  out.reserve(word.size());
  for (const Syllable& s : word) out.push_back({s.vertex, maps[s.vertex].map[s.element]});
  return out;
}

Element evaluate(const FiniteGroup& d, const std::vector<std::vector<Element>>& maps,
                 const Word& word) {
  Element acc = 0;
  for (const Syllable& s : word) acc = d.mul(acc, maps[s.vertex][s.element]);
  return acc;
}

}  // namespace

void AlmostHom::validate() const {
  if (map.size() != source.size()) {
    throw Error(ErrorKind::SchemaError, "almost-hom map needs one image per chart element");
  }
  for (Element x : map) {
    if (!target.contains(x)) throw Error(ErrorKind::SchemaError, "image outside the target");
  }
  for (Element x : k) {
    if (x >= source.size()) throw Error(ErrorKind::SchemaError, "K element outside the chart");
  }
}

AlmostHom integer_reduction(int r, unsigned m) {
  if (m == 0) throw Error(ErrorKind::PreconditionViolated, "modulus must be positive");
  AlmostHom h;
  h.source = integer_interval(r);
  h.target = cyclic_group(m);
  for (Element x = 0; x < h.source.size(); ++x) {
    long long value = std::stoll(h.source.label(x));
    long long residue = ((value % static_cast<long long>(m)) + m) % m;
    h.map.push_back(static_cast<Element>(residue));
    h.k.insert(x);
  }
  return h;
}

std::optional<AlmostHomViolation> find_violation(const AlmostHom& hom,
                                                 const std::set<Element>& subset) {
  const FiniteGroup& t = hom.target;
  for (Element a : subset) {
    for (Element b : subset) {
      if (a < b && hom.map[a] == hom.map[b]) {
        return AlmostHomViolation{a, b,
                                  "map(" + hom.source.label(a) + ") = map(" +
                                      hom.source.label(b) + ") = " + t.label(hom.map[a])};
      }
      auto ab = hom.source.mul(a, b);
      if (!ab) continue;
      Element expected = t.mul(hom.map[a], hom.map[b]);
      if (hom.map[*ab] != expected) {
        return AlmostHomViolation{
            a, b,
            "map(" + hom.source.label(a) + "*" + hom.source.label(b) + ") = " +
                t.label(hom.map[*ab]) + " but map(" + hom.source.label(a) + ")*map(" +
                hom.source.label(b) + ") = " + t.label(expected)};
      }
    }
  }
  return std::nullopt;
}

KSets derive_k_sets(const ChartProduct& presentation, const std::vector<Word>& k) {
  std::vector<Word> with_e{Word{}};
  for (const Word& w : k) {
    validate_word(presentation, w);
    with_e.push_back(w);
  }
  KSets out;
  out.k_v.assign(presentation.graph().vertex_count(), std::set<Element>{0});
  std::set<Word> seen;
  for (const Word& left : with_e) {
    const Word left_inv = inverse_word(presentation, left);
    for (const Word& right : with_e) {
      Word nf = normal_form(presentation, concat(left_inv, right)).word;
      if (!seen.insert(nf).second) continue;
      for (const Syllable& s : nf) out.k_v[s.vertex].insert(s.element);
      out.k_prime.push_back(std::move(nf));
    }
  }
  return out;
}

Word AssembledAlmostHom::image(const Word& word) const {
  return normal_form(f, map_syllables(vertex_maps, normal_form(presentation, word).word))
      .word;
}

AssembledAlmostHom assemble_almost_hom(const ChartProduct& presentation,
                                       const std::vector<Word>& k,
                                       const std::vector<AlmostHom>& vertex_maps) {
  const SimplicialGraph& graph = presentation.graph();
  if (vertex_maps.size() != graph.vertex_count()) {
    throw Error(ErrorKind::SchemaError, "expected one almost-hom per vertex");
  }
  std::vector<FiniteGroup> targets;
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    vertex_maps[v].validate();
    if (!(vertex_maps[v].source == presentation.chart(v))) {
      throw Error(ErrorKind::SchemaError, "almost-hom at " + graph.name(v) +
                                              " does not start at the vertex chart");
    }
    targets.push_back(vertex_maps[v].target);
  }

  AssembledAlmostHom out{presentation, {}, vertex_maps, GraphProduct(graph, targets), {}, {}};
  for (const Word& w : k) {
    validate_word(presentation, w);
    Word nf = normal_form(presentation, w).word;
    if (std::find(out.k.begin(), out.k.end(), nf) == out.k.end()) out.k.push_back(nf);
  }

  // Injectivity on K.
  std::vector<Word> images;
  for (const Word& w : out.k) images.push_back(out.image(w));
  for (std::size_t i = 0; i < out.k.size(); ++i) {
    for (std::size_t j = i + 1; j < out.k.size(); ++j) {
      if (images[i] == images[j]) {
        violated("phi(" + describe(presentation, out.k[i]) + ") = phi(" +
                 describe(presentation, out.k[j]) + ") = " + describe(out.f, images[i]));
      }
    }
  }

  out.k_sets = derive_k_sets(presentation, out.k);
  for (VertexId v = 0; v < graph.vertex_count(); ++v) {
    for (Element x : out.k_sets.k_v[v]) {
      if (!vertex_maps[v].k.contains(x)) {
        throw Error(ErrorKind::CoverageMissing,
                    "K at " + graph.name(v) + " misses " + presentation.chart(v).label(x));
      }
    }
    if (auto bad = find_violation(vertex_maps[v], out.k_sets.k_v[v])) {
      violated("at " + graph.name(v) + ": " + bad->detail);
    }
  }

  for (const Word& g : out.k_sets.k_prime) {
    Word mapped = map_syllables(vertex_maps, g);
    if (!is_reduced(out.f, mapped)) {
      violated("image of " + describe(presentation, g) + " is not reduced: " +
               describe(out.f, mapped));
    }
    out.image_table[g] = normal_form(out.f, mapped).word;
  }
  for (std::size_t i = 0; i < out.k.size(); ++i) out.image_table[out.k[i]] = images[i];

  for (std::size_t i = 0; i < out.k.size(); ++i) {
    for (std::size_t j = 0; j < out.k.size(); ++j) {
      Word product = normal_form(presentation, concat(out.k[i], out.k[j])).word;
      Word left = out.image(product);
      Word right = normal_form(out.f, concat(images[i], images[j])).word;
      if (left != right) {
        violated("k = " + describe(presentation, out.k[i]) +
                 ", k' = " + describe(presentation, out.k[j]) + ": phi(kk') = " +
                 describe(out.f, left) + " vs phi(k)phi(k') = " + describe(out.f, right));
      }
    }
  }

  for (std::size_t i = 0; i < out.k.size(); ++i) {
    Word left = out.image(inverse_word(presentation, out.k[i]));
    Word right = normal_form(out.f, inverse_word(out.f, images[i])).word;
    if (left != right) {
      violated("k = " + describe(presentation, out.k[i]) + ": phi(k^-1) = " +
               describe(out.f, left) + " vs phi(k)^-1 = " + describe(out.f, right));
    }
  }
  return out;
}

FinitizedAlmostHom finitize(const AssembledAlmostHom& assembled, const ClassTag& tag,
                            const SearchBudget& budget) {
  const GraphProduct& f = assembled.f;
  const std::size_t nv = f.graph().vertex_count();
  for (VertexId v = 0; v < nv; ++v) {
    if (!class_membership(f.group(v), tag)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "target at " + f.graph().name(v) + " is not in " + tag.to_string());
    }
  }

  FinitizedAlmostHom out;
  std::vector<Word> images;
  for (const Word& w : assembled.k) images.push_back(assembled.image_table.at(w));

  std::vector<ProductHom> homs;
  auto apart = [&](std::size_t i, std::size_t j) {
    return std::any_of(homs.begin(), homs.end(), [&](const ProductHom& h) {
      return h.evaluate(images[i]) != h.evaluate(images[j]);
    });
  };
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (apart(i, j)) continue;
      Word difference = concat(inverse_word(f, images[i]), images[j]);
      SeparationCertificate cert = separate(f, difference, tag, budget);
      out.log.push_back("pair " + std::to_string(i) + "," + std::to_string(j) +
                        ": separated in a group of order " +
                        std::to_string(cert.target.order()));
      homs.push_back(ProductHom{cert.target, cert.vertex_homs});
      ++out.separations;
    }
  }

  std::vector<std::vector<Element>> psi(nv);
  if (homs.empty()) {
    out.target = FiniteGroup();
  } else {
    ProductHom combined;
    try {
      combined = combine_homs(f, homs, budget.order_cap);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderOverflow) throw;
      throw Error(ErrorKind::BudgetExceeded, e.what());
    }
    out.target = combined.target;
    psi = combined.vertex_maps;
  }
  out.vertex_maps.resize(nv);
  for (VertexId v = 0; v < nv; ++v) {
    for (Element x : assembled.vertex_maps[v].map) {
      out.vertex_maps[v].push_back(psi[v].empty() ? 0 : psi[v][x]);
    }
  }
  for (const Word& w : assembled.k) {
    out.k_images.push_back(evaluate(out.target, out.vertex_maps, w));
  }
  if (auto failure = verify_finitized(assembled.presentation, assembled.k, out, tag)) {
    throw std::logic_error("finitized map failed re-verification: " + *failure);
  }
  return out;
}

std::optional<std::string> verify_finitized(const ChartProduct& presentation,
                                            const std::vector<Word>& k,
                                            const FinitizedAlmostHom& hom,
                                            const ClassTag& tag) {
  const std::size_t nv = presentation.graph().vertex_count();
  if (hom.vertex_maps.size() != nv) return "expected one map per vertex";
  for (VertexId v = 0; v < nv; ++v) {
    if (hom.vertex_maps[v].size() != presentation.chart(v).size()) {
      return "map at " + presentation.graph().name(v) + " has the wrong size";
    }
    for (Element x : hom.vertex_maps[v]) {
      if (!hom.target.contains(x)) return "image outside the target";
    }
  }
  if (!class_membership(hom.target, tag)) return "target is not in " + tag.to_string();

  std::vector<Word> nfs;
  std::vector<Element> values;
  for (const Word& w : k) {
    Word nf = normal_form(presentation, w).word;
    if (std::find(nfs.begin(), nfs.end(), nf) != nfs.end()) continue;
    values.push_back(evaluate(hom.target, hom.vertex_maps, nf));
    nfs.push_back(std::move(nf));
  }
  for (std::size_t i = 0; i < nfs.size(); ++i) {
    for (std::size_t j = 0; j < nfs.size(); ++j) {
      if (i < j && values[i] == values[j]) {
        return "not injective on " + describe(presentation, nfs[i]) + " and " +
               describe(presentation, nfs[j]);
      }
      Word product = normal_form(presentation, concat(nfs[i], nfs[j])).word;
      if (evaluate(hom.target, hom.vertex_maps, product) !=
          hom.target.mul(values[i], values[j])) {
        return "not multiplicative on " + describe(presentation, nfs[i]) + " and " +
               describe(presentation, nfs[j]);
      }
    }
  }
  return std::nullopt;
}

}  // namespace gpcert
