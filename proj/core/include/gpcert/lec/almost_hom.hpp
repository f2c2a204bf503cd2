#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gpcert/algebra/class_tag.hpp"
#include "gpcert/lec/chart.hpp"
#include "gpcert/separation/base_separator.hpp"
#include "gpcert/words/rewriting.hpp"

namespace gpcert {

// A map from a chart into a finite group, meant to be multiplicative and
// injective on the subset k.
struct AlmostHom {
  GroupChart source;
  std::set<Element> k;
  FiniteGroup target;
  std::vector<Element> map;  // one image per chart element

  // Throws SchemaError on shape or range errors. The almost-hom conditions
  // are not checked here.
  void validate() const;
};

// Reduction mod m on integer_interval(r), with k the whole chart.
AlmostHom integer_reduction(int r, unsigned m);

struct AlmostHomViolation {
  Element left = 0;
  Element right = 0;  // equal to left for an injectivity failure
  std::string detail;
};

// First failure of multiplicativity or injectivity over subset x subset, in
// lexicographic order. Products the chart leaves undefined are skipped.
std::optional<AlmostHomViolation> find_violation(const AlmostHom& hom,
                                                 const std::set<Element>& subset);

struct KSets {
  std::vector<Word> k_prime;            // normal forms, without repeats
  std::vector<std::set<Element>> k_v;   // per vertex, always holding 0
};

// K' = {k^-1 k' : k, k' in K and e}; K_v collects the syllables of K' at v.
// Throws ChartIncomplete.
KSets derive_k_sets(const ChartProduct& presentation, const std::vector<Word>& k);

struct AssembledAlmostHom {
  ChartProduct presentation;
  std::vector<Word> k;  // normal forms in the presentation
  std::vector<AlmostHom> vertex_maps;
  GraphProduct f;
  KSets k_sets;
  std::map<Word, Word> image_table;  // K and K' normal forms -> normal forms in F

  // phi(g) = NF of the syllable-wise image of NF(g). Throws ChartIncomplete.
  Word image(const Word& word) const;
};

// Builds phi from the vertex maps and verifies it exhaustively on K: injective
// on K, multiplicative on K x K, reduced images of K', inverse compatible.
// Throws SchemaError, ChartIncomplete, CoverageMissing or AlmostHomViolated.
AssembledAlmostHom assemble_almost_hom(const ChartProduct& presentation,
                                       const std::vector<Word>& k,
                                       const std::vector<AlmostHom>& vertex_maps);

struct FinitizedAlmostHom {
  FiniteGroup target;
  std::vector<std::vector<Element>> vertex_maps;  // chart element -> target
  std::vector<Element> k_images;
  std::size_t separations = 0;
  std::vector<std::string> log;
};

// Composes phi with a quotient of F in the class that keeps phi(K) apart.
// Throws PreconditionViolated, BudgetExceeded or ClassObstruction.
FinitizedAlmostHom finitize(const AssembledAlmostHom& assembled, const ClassTag& tag,
                            const SearchBudget& budget = {});

// Re-checks a finitized map against the charts alone: multiplicative and
// injective on K, target in the class. Returns a description of the first
// failure.
std::optional<std::string> verify_finitized(const ChartProduct& presentation,
                                            const std::vector<Word>& k,
                                            const FinitizedAlmostHom& hom,
                                            const ClassTag& tag);

}  // namespace gpcert
