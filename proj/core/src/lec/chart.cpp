#include "gpcert/lec/chart.hpp"

#include <algorithm>

namespace gpcert {

GroupChart::GroupChart() : labels_{"e"}, mul_{0}, inv_{0} {}

GroupChart::GroupChart(std::vector<std::string> labels, std::string_view identity,
                       const std::vector<std::array<std::string, 3>>& products,
                       const std::vector<std::array<std::string, 2>>& inverses) {
  auto id = std::find(labels.begin(), labels.end(), identity);
  if (id == labels.end()) {
    throw Error(ErrorKind::SchemaError, "identity '" + std::string(identity) +
                                            "' is not a chart element");
  }
  std::rotate(labels.begin(), id, id + 1);
  std::vector<std::string> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::SchemaError, "duplicate chart label");
  }
  labels_ = std::move(labels);
  const std::size_t n = labels_.size();
  mul_.assign(n * n, kUndefined);
  inv_.assign(n, kUndefined);

  auto index = [&](const std::string& label) {
    auto found = find(label);
    if (!found) throw Error(ErrorKind::SchemaError, "unknown chart label '" + label + "'");
    return *found;
  };
  auto set_mul = [&](Element a, Element b, Element c) {
    Element& slot = mul_[a * n + b];
    if (slot != kUndefined && slot != c) {
      throw Error(ErrorKind::SchemaError, "conflicting products for " + labels_[a] +
                                              " * " + labels_[b]);
    }
    slot = c;
  };
  auto set_inv = [&](Element a, Element b) {
    if (inv_[a] != kUndefined && inv_[a] != b) {
      throw Error(ErrorKind::SchemaError, "conflicting inverses for " + labels_[a]);
    }
    inv_[a] = b;
  };

  for (const auto& [a, b, c] : products) set_mul(index(a), index(b), index(c));
  for (Element a = 0; a < n; ++a) {
    set_mul(0, a, a);
    set_mul(a, 0, a);
  }
  set_inv(0, 0);
  for (const auto& [a, b] : inverses) {
    Element x = index(a), y = index(b);
    set_inv(x, y);
    set_inv(y, x);
    set_mul(x, y, 0);
    set_mul(y, x, 0);
  }
}

std::optional<Element> GroupChart::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::optional<Element> GroupChart::mul(Element a, Element b) const {
  if (a >= size() || b >= size()) return std::nullopt;
  Element c = mul_[a * size() + b];
  if (c == kUndefined) return std::nullopt;
  return c;
}

std::optional<Element> GroupChart::inv(Element a) const {
  if (a >= size() || inv_[a] == kUndefined) return std::nullopt;
  return inv_[a];
}

std::vector<std::array<Element, 3>> GroupChart::products() const {
  std::vector<std::array<Element, 3>> out;
  for (Element a = 0; a < size(); ++a) {
    for (Element b = 0; b < size(); ++b) {
      if (auto c = mul(a, b)) out.push_back({a, b, *c});
    }
  }
  return out;
}

std::vector<std::array<Element, 2>> GroupChart::inverses() const {
  std::vector<std::array<Element, 2>> out;
  for (Element a = 0; a < size(); ++a) {
    if (auto b = inv(a)) out.push_back({a, *b});
  }
  return out;
}

std::optional<std::array<Element, 3>> GroupChart::associativity_violation() const {
  for (Element a = 0; a < size(); ++a) {
    for (Element b = 0; b < size(); ++b) {
      auto ab = mul(a, b);
      if (!ab) continue;
      for (Element c = 0; c < size(); ++c) {
        auto bc = mul(b, c);
        if (!bc) continue;
        auto left = mul(*ab, c);
        auto right = mul(a, *bc);
        if (left && right && *left != *right) return std::array<Element, 3>{a, b, c};
      }
    }
  }
  return std::nullopt;
}

GroupChart GroupChart::with_product(Element a, Element b, Element c) const {
  if (a >= size() || b >= size() || c >= size()) {
    throw Error(ErrorKind::IndexOutOfRange, "chart element out of range");
  }
  GroupChart out = *this;
  out.mul_[a * size() + b] = c;
  return out;
}

GroupChart integer_interval(int r) {
  if (r < 0) throw Error(ErrorKind::PreconditionViolated, "negative chart radius");
  std::vector<std::string> labels;
  std::vector<std::array<std::string, 3>> products;
  std::vector<std::array<std::string, 2>> inverses;
  for (int a = -r; a <= r; ++a) {
    labels.push_back(std::to_string(a));
    inverses.push_back({std::to_string(a), std::to_string(-a)});
    for (int b = -r; b <= r; ++b) {
      if (a + b >= -r && a + b <= r) {
        products.push_back({std::to_string(a), std::to_string(b), std::to_string(a + b)});
      }
    }
  }
  return GroupChart(std::move(labels), "0", products, inverses);
}

ChartProduct::ChartProduct(SimplicialGraph graph, std::vector<GroupChart> charts)
    : graph_(std::move(graph)), charts_(std::move(charts)) {
  if (charts_.size() != graph_.vertex_count()) {
    throw Error(ErrorKind::SchemaError, "expected one chart per vertex");
  }
}

Element ChartProduct::multiply(VertexId v, Element a, Element b) const {
  auto c = charts_[v].mul(a, b);
  if (!c) {
    throw Error(ErrorKind::ChartIncomplete,
                "product " + charts_[v].label(a) + " * " + charts_[v].label(b) +
                    " is undefined at " + graph_.name(v));
  }
  return *c;
}

Element ChartProduct::inverse(VertexId v, Element a) const {
  auto b = charts_[v].inv(a);
  if (!b) {
    throw Error(ErrorKind::ChartIncomplete,
                "inverse of " + charts_[v].label(a) + " is undefined at " + graph_.name(v));
  }
  return *b;
}

bool ChartProduct::contains(VertexId v, std::int64_t element) const {
  return v < charts_.size() && element >= 0 &&
         static_cast<std::size_t>(element) < charts_[v].size();
}

std::string ChartProduct::element_label(VertexId v, Element a) const {
  return charts_[v].label(a);
}

}  // namespace gpcert
