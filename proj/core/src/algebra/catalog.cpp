#include "gpcert/algebra/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gpcert/algebra/constructions.hpp"

namespace gpcert {

namespace {

template <typename Mul>
FiniteGroup tabulate(std::size_t n, Mul mul) {
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = static_cast<Element>(mul(a, b));
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat));
}

FiniteGroup product_of(const FiniteGroup& a, const FiniteGroup& b) {
  return direct_product(a, b).group;
}

// Image of the named automorphism on Z4 x Z2 numbered (i, j) -> 2i + j.
std::vector<Element> z4z2_automorphism(bool b_to_a2b) {
  std::vector<Element> sigma(8);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      // a -> ab, b -> b   or   a -> a, b -> a^2 b
      std::size_t ni = b_to_a2b ? (i + 2 * j) % 4 : i;
      std::size_t nj = b_to_a2b ? j : (j + i) % 2;
      sigma[2 * i + j] = static_cast<Element>(2 * ni + nj);
    }
  }
  return sigma;
}

std::vector<CatalogEntry> build_catalog() {
  auto z = cyclic_group;
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, FiniteGroup g) {
    out.push_back({std::move(name), std::move(g)});
  };
  add("Z1", z(1));
  add("Z2", z(2));
  add("Z3", z(3));
  add("Z4", z(4));
  add("Z2xZ2", product_of(z(2), z(2)));
  add("Z5", z(5));
  add("Z6", z(6));
  add("S3", symmetric_group(3));
  add("Z7", z(7));
  add("Z8", z(8));
  add("Z4xZ2", product_of(z(4), z(2)));
  add("Z2xZ2xZ2", product_of(product_of(z(2), z(2)), z(2)));
  add("D8", dihedral_group(4));
  add("Q8", metacyclic_group(4, 2, 3, 2));
  add("Z9", z(9));
  add("Z3xZ3", product_of(z(3), z(3)));
  add("Z10", z(10));
  add("D10", dihedral_group(5));
  add("Z11", z(11));
  add("Z12", z(12));
  add("Z6xZ2", product_of(z(6), z(2)));
  add("A4", permutation_group(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}));
  add("D12", dihedral_group(6));
  add("Dic12", metacyclic_group(6, 2, 5, 3));
  add("Z13", z(13));
  add("Z14", z(14));
  add("D14", dihedral_group(7));
  add("Z15", z(15));
  const FiniteGroup z4z2 = product_of(z(4), z(2));
  add("Z16", z(16));
  add("Z4xZ4", product_of(z(4), z(4)));
  add("(Z4xZ2):Z2", semidirect_with_cyclic(z4z2, z4z2_automorphism(false), 2));
  add("Z4:Z4", metacyclic_group(4, 4, 3, 0));
  add("Z8xZ2", product_of(z(8), z(2)));
  add("M16", metacyclic_group(8, 2, 5, 0));
  add("D16", dihedral_group(8));
  add("SD16", metacyclic_group(8, 2, 3, 0));
  add("Q16", metacyclic_group(8, 2, 7, 4));
  add("Z4xZ2xZ2", product_of(z4z2, z(2)));
  add("Z2xD8", product_of(z(2), dihedral_group(4)));
  add("Z2xQ8", product_of(z(2), metacyclic_group(4, 2, 3, 2)));
  add("Pauli", semidirect_with_cyclic(z4z2, z4z2_automorphism(true), 2));
  add("Z2^4", product_of(product_of(z(2), z(2)), product_of(z(2), z(2))));
  add("S4", symmetric_group(4));
  add("Z27", z(27));
  add("Z9xZ3", product_of(z(9), z(3)));
  add("Z3^3", product_of(product_of(z(3), z(3)), z(3)));
  add("Heis27", heisenberg_group(3));
  add("Z9:Z3", metacyclic_group(9, 3, 4, 0));
  add("S5", symmetric_group(5));
  add("Heis125", heisenberg_group(5));
  std::stable_sort(out.begin(), out.end(),
                   [](const CatalogEntry& a, const CatalogEntry& b) {
                     return a.group.order() < b.group.order();
                   });
  return out;
}

}  // namespace

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw Error(ErrorKind::PreconditionViolated, "cyclic group of order 0");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  std::vector<Element> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      flat[a * n + b] = static_cast<Element>((a + b) % n);
    }
  }
  return FiniteGroup::from_trusted_table(n, std::move(flat), std::move(labels));
}

FiniteGroup dihedral_group(std::size_t n) {
  return metacyclic_group(n, 2, n - 1, 0);
}

FiniteGroup permutation_group(
    std::size_t degree, const std::vector<std::vector<std::size_t>>& generators) {
  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm& p, const Perm& q) {
    // apply q first, then p
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::vector<Perm> elements{id};
  std::map<Perm, std::size_t> index{{id, 0}};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const Perm& s : generators) {
      if (s.size() != degree) {
        throw Error(ErrorKind::PreconditionViolated, "permutation has wrong degree");
      }
      Perm next = compose(elements[i], s);
      if (index.emplace(next, elements.size()).second) {
        elements.push_back(std::move(next));
      }
      if (elements.size() > kDefaultOrderCap) {
        throw Error(ErrorKind::OrderOverflow, "permutation group too large");
      }
    }
  }
  return tabulate(elements.size(), [&](std::size_t a, std::size_t b) {
    return index.at(compose(elements[a], elements[b]));
  });
}

FiniteGroup symmetric_group(std::size_t degree) {
  if (degree <= 1) return FiniteGroup();
  std::vector<std::size_t> swap(degree), cycle(degree);
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[0], swap[1]);
  for (std::size_t i = 0; i < degree; ++i) cycle[i] = (i + 1) % degree;
  if (degree == 2) return permutation_group(2, {swap});
  return permutation_group(degree, {swap, cycle});
}

FiniteGroup metacyclic_group(std::size_t m, std::size_t n, std::size_t r,
                             std::size_t t) {
  std::vector<std::size_t> rpow(n + 1, 1 % m);
  for (std::size_t j = 1; j <= n; ++j) rpow[j] = rpow[j - 1] * r % m;
  if (rpow[n] != 1 % m || (t * r) % m != t % m) {
    throw Error(ErrorKind::PreconditionViolated, "inconsistent metacyclic parameters");
  }
  return tabulate(m * n, [&](std::size_t a, std::size_t b) {
    std::size_t i = a % m, j = a / m, k = b % m, l = b / m;
    std::size_t x = (i + k * rpow[j]) % m;
    std::size_t y = j + l;
    if (y >= n) {
      y -= n;
      x = (x + t) % m;
    }
    return x + m * y;
  });
}

FiniteGroup semidirect_with_cyclic(const FiniteGroup& normal,
                                   const std::vector<Element>& sigma,
                                   std::size_t k) {
  const std::size_t n = normal.order();
  if (!is_homomorphism(normal, normal, sigma)) {
    throw Error(ErrorKind::PreconditionViolated, "action is not an endomorphism");
  }
  std::vector<std::vector<Element>> powers{std::vector<Element>(n)};
  std::iota(powers[0].begin(), powers[0].end(), Element{0});
  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Element> next(n);
    for (std::size_t a = 0; a < n; ++a) next[a] = sigma[powers[j - 1][a]];
    powers.push_back(std::move(next));
  }
  if (powers[k] != powers[0]) {
    throw Error(ErrorKind::PreconditionViolated, "action order does not divide k");
  }
  return tabulate(n * k, [&](std::size_t x, std::size_t y) {
    std::size_t a = x % n, j = x / n, b = y % n, l = y / n;
    return normal.mul(static_cast<Element>(a), powers[j][b]) + n * ((j + l) % k);
  });
}

FiniteGroup heisenberg_group(std::size_t p) {
  // (a, b, c) numbered a + p b + p^2 c, product adds c + a b'.
  return tabulate(p * p * p, [&](std::size_t x, std::size_t y) {
    std::size_t a = x % p, b = x / p % p, c = x / (p * p);
    std::size_t a2 = y % p, b2 = y / p % p, c2 = y / (p * p);
    return (a + a2) % p + p * ((b + b2) % p) + p * p * ((c + c2 + a * b2) % p);
  });
}

const std::vector<CatalogEntry>& group_catalog() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

std::optional<FiniteGroup> catalog_group(std::string_view name) {
  for (const auto& entry : group_catalog()) {
    if (entry.name == name) return entry.group;
  }
  return std::nullopt;
}

}  // namespace gpcert
