#include "gpcert/algebra/constructions.hpp"

#include <algorithm>

namespace gpcert {

Quotient quotient(const FiniteGroup& group, const Subgroup& normal) {
  if (!is_normal(normal)) {
    throw Error(ErrorKind::NotNormal, "subgroup is not normal");
  }
  const std::size_t n = group.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> coset_of(n, kUnset);
  std::vector<Element> representative;
  for (Element x = 0; x < n; ++x) {
    if (coset_of[x] != kUnset) continue;
    auto index = static_cast<Element>(representative.size());
    representative.push_back(x);
    for (Element k : normal.elements()) coset_of[group.mul(x, k)] = index;
  }
  const std::size_t m = representative.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      table[i * m + j] =
          coset_of[group.mul(representative[i], representative[j])];
    }
  }
  FiniteGroup q = FiniteGroup::from_trusted_table(m, std::move(table));
  return {q, trusted_homomorphism(group, q, std::move(coset_of))};
}

DirectProduct direct_product(const FiniteGroup& left, const FiniteGroup& right,
                             std::size_t cap) {
  const std::size_t a = left.order();
  const std::size_t b = right.order();
  if (a * b > cap) {
    throw Error(ErrorKind::OrderOverflow,
                "direct product of order " + std::to_string(a * b) +
                    " exceeds cap " + std::to_string(cap));
  }
  const std::size_t n = a * b;
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      auto l = left.mul(static_cast<Element>(x / b), static_cast<Element>(y / b));
      auto r = right.mul(static_cast<Element>(x % b), static_cast<Element>(y % b));
      table[x * n + y] = static_cast<Element>(l * b + r);
    }
  }
  FiniteGroup g = FiniteGroup::from_trusted_table(n, std::move(table));
  std::vector<Element> p1(n), p2(n);
  for (std::size_t x = 0; x < n; ++x) {
    p1[x] = static_cast<Element>(x / b);
    p2[x] = static_cast<Element>(x % b);
  }
  return {g, trusted_homomorphism(g, left, std::move(p1)),
          trusted_homomorphism(g, right, std::move(p2)), b};
}

std::size_t TupleGroup::TupleHash::operator()(
    const std::vector<Element>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Element e : v) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::optional<Element> TupleGroup::find(
    const std::vector<Element>& coordinates) const {
  auto it = index_.find(coordinates);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TupleGroup generate_in_product(std::vector<FiniteGroup> factors,
                               const std::vector<std::vector<Element>>& generators,
                               std::size_t cap) {
  const std::size_t k = factors.size();
  auto multiply = [&](const std::vector<Element>& x,
                      const std::vector<Element>& y) {
    std::vector<Element> z(k);
    for (std::size_t i = 0; i < k; ++i) z[i] = factors[i].mul(x[i], y[i]);
    return z;
  };

  TupleGroup out;
  out.tuples_.push_back(std::vector<Element>(k, 0));
  out.index_.emplace(out.tuples_[0], 0);

  // Breadth-first closure under right multiplication by generators. Every
  // non-identity y records (parent, generator) with y = parent * generator.
  std::vector<Element> parent{0};
  std::vector<std::size_t> via{0};
  std::vector<std::vector<Element>> right;  // right[x][s] = x * gen_s
  for (std::size_t i = 0; i < out.tuples_.size(); ++i) {
    std::vector<Element> row(generators.size());
    for (std::size_t s = 0; s < generators.size(); ++s) {
      auto y = multiply(out.tuples_[i], generators[s]);
      auto [it, inserted] =
          out.index_.emplace(y, static_cast<Element>(out.tuples_.size()));
      if (inserted) {
        if (out.tuples_.size() >= cap) {
          throw Error(ErrorKind::OrderOverflow,
                      "generated subgroup exceeds cap " + std::to_string(cap));
        }
        out.tuples_.push_back(std::move(y));
        parent.push_back(static_cast<Element>(i));
        via.push_back(s);
      }
      row[s] = it->second;
    }
    right.push_back(std::move(row));
  }

  const std::size_t n = out.tuples_.size();
  std::vector<Element> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    table[x * n] = static_cast<Element>(x);
    // Elements were discovered in BFS order, so parent[y] < y.
    for (std::size_t y = 1; y < n; ++y) {
      table[x * n + y] = right[table[x * n + parent[y]]][via[y]];
    }
  }
  out.group_ = FiniteGroup::from_trusted_table(n, std::move(table));
  out.factors_ = std::move(factors);
  return out;
}

SubgroupRealization realize_subgroup(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  const auto& elems = h.elements();  // sorted, so elems[0] == 0
  const std::size_t n = elems.size();
  std::unordered_map<Element, Element> local;
  for (std::size_t i = 0; i < n; ++i) local.emplace(elems[i], static_cast<Element>(i));
  std::vector<Element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = local.at(g.mul(elems[i], elems[j]));
    }
  }
  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    for (Element e : elems) labels.push_back(g.label(e));
  }
  return {FiniteGroup::from_trusted_table(n, std::move(table), std::move(labels)),
          elems, std::move(local)};
}

}  // namespace gpcert
