#include "gpcert/algebra/finite_group.hpp"

#include <algorithm>
#include <numeric>

namespace gpcert {

namespace {

std::vector<Element> compute_inverses(std::size_t n,
                                      const std::vector<Element>& table) {
  std::vector<Element> inverse(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] == 0) {
        inverse[a] = static_cast<Element>(b);
        break;
      }
    }
  }
  return inverse;
}

// Light's associativity test: it suffices to check (x g) y = x (g y) for g
// ranging over a generating set of the magma.
std::optional<std::vector<std::int64_t>> find_nonassociative_triple(
    std::size_t n, const std::vector<Element>& t) {
  std::vector<char> reached(n, 0);
  std::vector<Element> members;
  std::vector<Element> generators;
  members.reserve(n);
  auto add = [&](Element x) {
    if (!reached[x]) {
      reached[x] = 1;
      members.push_back(x);
    }
  };
  std::size_t processed = 0;
  for (Element a = 0; a < n; ++a) {
    if (reached[a]) continue;
    generators.push_back(a);
    add(a);
    while (processed < members.size()) {
      Element x = members[processed];
      for (std::size_t j = 0; j <= processed; ++j) {
        Element y = members[j];
        add(t[x * n + y]);
        add(t[y * n + x]);
      }
      ++processed;
    }
  }
  for (Element g : generators) {
    for (std::size_t x = 0; x < n; ++x) {
      Element xg = t[x * n + g];
      for (std::size_t y = 0; y < n; ++y) {
        if (t[xg * n + y] != t[x * n + t[g * n + y]]) {
          return std::vector<std::int64_t>{static_cast<std::int64_t>(x), g,
                                           static_cast<std::int64_t>(y)};
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

FiniteGroup::FiniteGroup()
    : FiniteGroup(std::make_shared<const Data>(Data{1, {0}, {0}, {}})) {}

FiniteGroup::FiniteGroup(std::shared_ptr<const Data> data)
    : data_(std::move(data)),
      table_(data_->table.data()),
      inverse_(data_->inverse.data()),
      order_(data_->order) {}

FiniteGroup FiniteGroup::from_trusted_table(std::size_t order,
                                            std::vector<Element> flat_table,
                                            std::vector<std::string> labels) {
  auto inverse = compute_inverses(order, flat_table);
  return FiniteGroup(std::make_shared<const Data>(
      Data{order, std::move(flat_table), std::move(inverse), std::move(labels)}));
}

std::size_t FiniteGroup::order() const noexcept { return order_; }

Element FiniteGroup::pow(Element a, long long exponent) const {
  if (exponent < 0) {
    a = inv(a);
    exponent = -exponent;
  }
  Element result = 0;
  Element base = a;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Element FiniteGroup::commutator(Element a, Element b) const {
  return mul(mul(a, b), mul(inv(a), inv(b)));
}

std::size_t FiniteGroup::element_order(Element a) const {
  std::size_t k = 1;
  for (Element x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Element a = 0; a < order_; ++a) {
    for (Element b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::span<const Element> FiniteGroup::flat_table() const noexcept {
  return {data_->table.data(), data_->table.size()};
}

std::vector<std::vector<Element>> FiniteGroup::rows() const {
  std::vector<std::vector<Element>> out(order_);
  for (std::size_t a = 0; a < order_; ++a) {
    out[a].assign(table_ + a * order_, table_ + (a + 1) * order_);
  }
  return out;
}

const std::vector<std::string>& FiniteGroup::labels() const noexcept {
  return data_->labels;
}

std::string FiniteGroup::label(Element a) const {
  if (a < data_->labels.size()) return data_->labels[a];
  return std::to_string(a);
}

std::optional<Element> FiniteGroup::find_label(std::string_view label) const {
  const auto& labels = data_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<Element>(it - labels.begin());
}

bool operator==(const FiniteGroup& lhs, const FiniteGroup& rhs) {
  return lhs.data_ == rhs.data_ ||
         (lhs.order_ == rhs.order_ && lhs.data_->table == rhs.data_->table);
}

FiniteGroup validate_group(const std::vector<std::vector<std::int64_t>>& table,
                           std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) {
    throw TableError(ErrorKind::MalformedTable, {}, "table is empty");
  }
  if (!labels.empty() && labels.size() != n) {
    throw TableError(ErrorKind::MalformedTable, {},
                     "label count does not match the table order");
  }
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a].size() != n) {
      throw TableError(ErrorKind::MalformedTable,
                       {static_cast<std::int64_t>(a)},
                       "row " + std::to_string(a) + " has the wrong length");
    }
    for (std::size_t b = 0; b < n; ++b) {
      std::int64_t v = table[a][b];
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw TableError(ErrorKind::MalformedTable,
                         {static_cast<std::int64_t>(a),
                          static_cast<std::int64_t>(b)},
                         "entry (" + std::to_string(a) + "," +
                             std::to_string(b) + ") out of range");
      }
      flat[a * n + b] = static_cast<Element>(v);
    }
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      ok = flat[e * n + a] == a && flat[a * n + e] == a;
    }
    if (ok) identity = e;
  }
  if (!identity) {
    throw TableError(ErrorKind::NoIdentity, {}, "no two-sided identity");
  }
  const Element e = *identity;

  for (Element a = 0; a < n; ++a) {
    bool found = false;
    for (Element b = 0; b < n && !found; ++b) {
      found = flat[a * n + b] == e && flat[b * n + a] == e;
    }
    if (!found) {
      throw TableError(ErrorKind::NoInverse, {a},
                       "element " + std::to_string(a) + " has no inverse");
    }
  }

  if (auto triple = find_nonassociative_triple(n, flat)) {
    const auto& w = *triple;
    throw TableError(ErrorKind::NotAssociative, w,
                     "(" + std::to_string(w[0]) + "," + std::to_string(w[1]) +
                         "," + std::to_string(w[2]) + ") is not associative");
  }

  if (e != 0) {
    // Swap indices 0 and e so that the identity sits at 0.
    auto swap_index = [e](Element x) -> Element {
      if (x == 0) return e;
      if (x == e) return 0;
      return x;
    };
    std::vector<Element> relabeled(n * n);
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        relabeled[swap_index(a) * n + swap_index(b)] =
            swap_index(flat[a * n + b]);
      }
    }
    flat = std::move(relabeled);
    if (labels.empty()) {
      labels.resize(n);
      for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
    }
    std::swap(labels[0], labels[e]);
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

}  // namespace gpcert
