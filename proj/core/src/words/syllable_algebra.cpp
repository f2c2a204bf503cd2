#include "gpcert/words/syllable_algebra.hpp"

namespace gpcert {

std::string SyllableAlgebra::element_label(VertexId, Element a) const {
  return std::to_string(a);
}

GraphProduct::GraphProduct(SimplicialGraph graph, std::vector<FiniteGroup> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (groups_.size() != graph_.vertex_count()) {
    throw Error(ErrorKind::SchemaError,
                "expected " + std::to_string(graph_.vertex_count()) +
                    " vertex groups, got " + std::to_string(groups_.size()));
  }
}

void validate_word(const SyllableAlgebra& algebra, const Word& word) {
  for (std::size_t i = 0; i < word.size(); ++i) {
    const Syllable& s = word[i];
    if (s.vertex >= algebra.graph().vertex_count()) {
      throw Error(ErrorKind::UnknownVertex,
                  "syllable " + std::to_string(i) + " names vertex id " +
                      std::to_string(s.vertex));
    }
    if (!algebra.contains(s.vertex, s.element)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "syllable " + std::to_string(i) + " element " +
                      std::to_string(s.element) + " is not in the group at " +
                      algebra.graph().name(s.vertex));
    }
  }
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace gpcert
