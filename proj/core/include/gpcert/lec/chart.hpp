#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gpcert/words/syllable_algebra.hpp"

namespace gpcert {

// A finite fragment of a possibly infinite group: labeled elements with a
// partial product and a partial inverse. The identity is element 0.
class GroupChart {
 public:
  GroupChart();

  // Products and inverses are given by label. The identity is moved to index
  // 0 with the other labels keeping their order. Products with the identity
  // and x * inv(x) = inv(x) * x = e are filled in when absent. Throws
  // SchemaError on unknown labels, duplicates, or entries contradicting the
  // identity and inverse laws.
  GroupChart(std::vector<std::string> labels, std::string_view identity,
             const std::vector<std::array<std::string, 3>>& products,
             const std::vector<std::array<std::string, 2>>& inverses);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  std::optional<Element> find(std::string_view label) const;

  std::optional<Element> mul(Element a, Element b) const;
  std::optional<Element> inv(Element a) const;

  // Defined (a, b, c) entries, sorted.
  std::vector<std::array<Element, 3>> products() const;
  std::vector<std::array<Element, 2>> inverses() const;

  // Some (a, b, c) with (ab)c and a(bc) both defined and different.
  std::optional<std::array<Element, 3>> associativity_violation() const;

  // Replaces one product entry; no law is re-checked.
  GroupChart with_product(Element a, Element b, Element c) const;

  friend bool operator==(const GroupChart&, const GroupChart&) = default;

 private:
  static constexpr Element kUndefined = ~Element{0};

  std::vector<std::string> labels_;
  std::vector<Element> mul_;  // size^2, kUndefined where absent
  std::vector<Element> inv_;
};

// The integers -r..r with sums and negatives inside the range. Labels are the
// decimal integers.
GroupChart integer_interval(int r);

// Graph product of charts: the rewriting calculus over partial vertex
// arithmetic. A product or inverse that a chart leaves undefined throws
// ChartIncomplete.
class ChartProduct final : public SyllableAlgebra {
 public:
  ChartProduct(SimplicialGraph graph, std::vector<GroupChart> charts);

  const SimplicialGraph& graph() const override { return graph_; }
  Element multiply(VertexId v, Element a, Element b) const override;
  Element inverse(VertexId v, Element a) const override;
  bool contains(VertexId v, std::int64_t element) const override;
  std::string element_label(VertexId v, Element a) const override;

  const GroupChart& chart(VertexId v) const { return charts_.at(v); }
  const std::vector<GroupChart>& charts() const noexcept { return charts_; }

 private:
  SimplicialGraph graph_;
  std::vector<GroupChart> charts_;
};

}  // namespace gpcert
