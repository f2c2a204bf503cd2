#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gpcert/algebra/finite_group.hpp"
#include "gpcert/graph/simplicial_graph.hpp"

namespace gpcert {

struct Syllable {
  VertexId vertex = 0;
  Element element = 0;

  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

using Word = std::vector<Syllable>;

// Vertex-group arithmetic over a simplicial graph: everything the rewriting
// calculus needs. Element 0 is the identity of every vertex group.
class SyllableAlgebra {
 public:
  virtual ~SyllableAlgebra() = default;

  virtual const SimplicialGraph& graph() const = 0;
  virtual Element multiply(VertexId v, Element a, Element b) const = 0;
  virtual Element inverse(VertexId v, Element a) const = 0;
  virtual bool contains(VertexId v, std::int64_t element) const = 0;
  virtual std::string element_label(VertexId v, Element a) const;
};

// Graph product of finite vertex groups.
class GraphProduct final : public SyllableAlgebra {
 public:
  // Throws SchemaError unless there is exactly one group per vertex.
  GraphProduct(SimplicialGraph graph, std::vector<FiniteGroup> groups);

  const SimplicialGraph& graph() const override { return graph_; }
  Element multiply(VertexId v, Element a, Element b) const override {
    return groups_[v].mul(a, b);
  }
  Element inverse(VertexId v, Element a) const override {
    return groups_[v].inv(a);
  }
  bool contains(VertexId v, std::int64_t element) const override {
    return v < groups_.size() && groups_[v].contains(element);
  }
  std::string element_label(VertexId v, Element a) const override {
    return groups_[v].label(a);
  }

  const FiniteGroup& group(VertexId v) const { return groups_.at(v); }
  const std::vector<FiniteGroup>& groups() const noexcept { return groups_; }

 private:
  SimplicialGraph graph_;
  std::vector<FiniteGroup> groups_;
};

// Throws UnknownVertex or IndexOutOfRange on a syllable outside the algebra.
void validate_word(const SyllableAlgebra& algebra, const Word& word);

Word concat(const Word& a, const Word& b);

}  // namespace gpcert
