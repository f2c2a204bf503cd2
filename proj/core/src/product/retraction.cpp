#include "gpcert/product/retraction.hpp"

namespace gpcert {

NormalForm retract(const SyllableAlgebra& algebra, const VertexSet& x,
                   const Word& word) {
  require_vertices(algebra.graph(), x);
  Word kept;
  for (const Syllable& s : word) {
    if (x.contains(s.vertex)) kept.push_back(s);
  }
  return normal_form(algebra, kept);
}

}  // namespace gpcert
