#pragma once

#include "gpcert/words/rewriting.hpp"

namespace gpcert {

// The canonical retraction onto the full subgroup over x: syllables on
// vertices outside x are deleted and the rest canonicalized. Throws
// UnknownVertex.
NormalForm retract(const SyllableAlgebra& algebra, const VertexSet& x,
                   const Word& word);

}  // namespace gpcert
