#include "gpcert/product/amalgam.hpp"

#include <algorithm>

namespace gpcert {

namespace {

AmalgamForm segment(const SyllableAlgebra& algebra, const Word& word,
                    VertexId v) {
  AmalgamForm form;
  Word current;
  for (const Syllable& s : word) {
    if (s.vertex == v) {
      form.a_parts.push_back(normal_form(algebra, current).word);
      form.c_parts.push_back(s);
      current.clear();
    } else {
      current.push_back(s);
    }
  }
  form.a_parts.push_back(normal_form(algebra, current).word);
  return form;
}

}  // namespace

SpecialAmalgamSplit amalgam_split(const SimplicialGraph& graph, VertexId v) {
  return amalgam_split(graph, v, graph.all_vertices());
}

SpecialAmalgamSplit amalgam_split(const SimplicialGraph& graph, VertexId v,
                                  const VertexSet& within) {
  require_vertices(graph, within);
  if (!within.contains(v)) {
    throw Error(ErrorKind::UnknownVertex,
                graph.name(v) + " is not in the vertex subset");
  }
  SpecialAmalgamSplit split;
  split.v = v;
  split.a = within;
  split.a.erase(v);
  for (VertexId u : link(graph, v)) {
    if (within.contains(u)) split.b.insert(u);
  }
  split.c = {v};
  return split;
}

Word AmalgamForm::interleave() const {
  Word out;
  for (std::size_t i = 0; i < a_parts.size(); ++i) {
    out.insert(out.end(), a_parts[i].begin(), a_parts[i].end());
    if (i < c_parts.size()) out.push_back(c_parts[i]);
  }
  return out;
}

AmalgamForm amalgam_form(const SyllableAlgebra& algebra, const Word& word,
                         const SpecialAmalgamSplit& split) {
  return segment(algebra, normal_form(algebra, word).word, split.v);
}

AmalgamForm amalgam_form_of_reduced(const SyllableAlgebra& algebra,
                                    const Word& word,
                                    const SpecialAmalgamSplit& split) {
  if (!is_reduced(algebra, word)) {
    throw Error(ErrorKind::PreconditionViolated, "word is not reduced");
  }
  for (const Syllable& s : word) {
    if (s.vertex != split.v && !split.a.contains(s.vertex)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "syllable outside the split at vertex id " +
                      std::to_string(s.vertex));
    }
  }
  return segment(algebra, word, split.v);
}

bool is_reduced_amalgam_form(const AmalgamForm& form,
                             const SpecialAmalgamSplit& split) {
  if (form.a_parts.size() != form.c_parts.size() + 1) return false;
  for (const Syllable& c : form.c_parts) {
    if (c.vertex != split.v || c.element == 0) return false;
  }
  for (std::size_t i = 1; i + 1 < form.a_parts.size(); ++i) {
    const Word& a = form.a_parts[i];
    bool outside_b = std::any_of(a.begin(), a.end(), [&](const Syllable& s) {
      return !split.b.contains(s.vertex);
    });
    if (!outside_b) return false;
  }
  return true;
}

}  // namespace gpcert
