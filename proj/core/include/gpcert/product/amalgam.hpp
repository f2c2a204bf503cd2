#pragma once

#include <optional>
#include <type_traits>
#include <vector>

#include "gpcert/words/rewriting.hpp"

namespace gpcert {

// G = G_A *_{G_B} (G_B x G_C) with C = {v} and B = link(v).
struct SpecialAmalgamSplit {
  VertexId v = 0;
  VertexSet a;
  VertexSet b;
  VertexSet c;

  friend bool operator==(const SpecialAmalgamSplit&, const SpecialAmalgamSplit&) = default;
};

// Throws UnknownVertex.
SpecialAmalgamSplit amalgam_split(const SimplicialGraph& graph, VertexId v);

// The split of the full subgroup over within (v must lie in within).
SpecialAmalgamSplit amalgam_split(const SimplicialGraph& graph, VertexId v,
                                  const VertexSet& within);

// a_0 c_1 a_1 ... c_n a_n. Each a-part is a normal form over A.
struct AmalgamForm {
  std::vector<Word> a_parts;
  std::vector<Syllable> c_parts;

  std::size_t n() const noexcept { return c_parts.size(); }
  Word interleave() const;

  friend bool operator==(const AmalgamForm&, const AmalgamForm&) = default;
};

// Reads the form off the normal form of word.
AmalgamForm amalgam_form(const SyllableAlgebra& algebra, const Word& word,
                         const SpecialAmalgamSplit& split);

// Reads the form off an arbitrary reduced word with the same segmentation
// rule. Throws PreconditionViolated when word is not reduced or leaves A u C.
AmalgamForm amalgam_form_of_reduced(const SyllableAlgebra& algebra,
                                    const Word& word,
                                    const SpecialAmalgamSplit& split);

// Every c-part is nontrivial and every middle a-part has support outside B.
bool is_reduced_amalgam_form(const AmalgamForm& form,
                             const SpecialAmalgamSplit& split);

template <typename A, typename C>
struct HomPairImage {
  std::vector<A> a_parts;
  std::vector<C> c_parts;
};

// Applies psi_a to every a-part and psi_c to every c-part. Each map returns
// std::optional; an empty result throws UndefinedImage.
template <typename PsiA, typename PsiC>
auto extend_hom_pair(const AmalgamForm& form, PsiA&& psi_a, PsiC&& psi_c) {
  using A = typename std::invoke_result_t<PsiA&, const Word&>::value_type;
  using C = typename std::invoke_result_t<PsiC&, const Syllable&>::value_type;
  HomPairImage<A, C> out;
  for (std::size_t i = 0; i < form.a_parts.size(); ++i) {
    auto image = psi_a(form.a_parts[i]);
    if (!image) {
      throw Error(ErrorKind::UndefinedImage, "a-part " + std::to_string(i));
    }
    out.a_parts.push_back(std::move(*image));
  }
  for (std::size_t j = 0; j < form.c_parts.size(); ++j) {
    auto image = psi_c(form.c_parts[j]);
    if (!image) {
      throw Error(ErrorKind::UndefinedImage, "c-part " + std::to_string(j + 1));
    }
    out.c_parts.push_back(std::move(*image));
  }
  return out;
}

}  // namespace gpcert
