#include "gpcert/algebra/subgroup.hpp"

#include <algorithm>
#include <set>

namespace gpcert {

namespace {

std::vector<Element> closure(const FiniteGroup& g,
                             std::span<const Element> generators) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> members{0};
  seen[0] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element s : generators) {
      Element y = g.mul(members[i], s);
      if (!seen[y]) {
        seen[y] = 1;
        members.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<std::vector<Element>> conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> assigned(g.order(), 0);
  std::vector<std::vector<Element>> classes;
  for (Element x = 0; x < g.order(); ++x) {
    if (assigned[x]) continue;
    std::vector<Element> cls;
    for (Element h = 0; h < g.order(); ++h) {
      Element c = g.mul(g.mul(h, x), g.inv(h));
      if (!assigned[c]) {
        assigned[c] = 1;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
  if (a.order() != b.order()) return a.order() < b.order();
  return a.elements() < b.elements();
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<Element> elements)
    : parent_(std::move(parent)),
      elements_(std::move(elements)),
      mask_(parent_.order(), 0) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  for (Element e : elements_) mask_[e] = 1;
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](Element e) { return other.contains(e); });
}

Subgroup trivial_subgroup(const FiniteGroup& group) {
  return Subgroup(group, {0});
}

Subgroup whole_group(const FiniteGroup& group) {
  std::vector<Element> all(group.order());
  for (Element i = 0; i < group.order(); ++i) all[i] = i;
  return Subgroup(group, std::move(all));
}

Subgroup generate_subgroup(const FiniteGroup& group,
                           std::span<const Element> generators) {
  return Subgroup(group, closure(group, generators));
}

Subgroup normal_closure(const FiniteGroup& group,
                        std::span<const Element> generators) {
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup(group);
  for (Element x : generators) {
    for (Element h = 0; h < group.order(); ++h) {
      Element c = group.mul(group.mul(h, x), group.inv(h));
      if (!current.contains(c)) {
        gens.push_back(c);
        current = generate_subgroup(group, gens);
      }
    }
  }
  return current;
}

Subgroup commutator_subgroup(const Subgroup& h, const Subgroup& k) {
  const FiniteGroup& g = h.parent();
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup(g);
  for (Element a : h.elements()) {
    for (Element b : k.elements()) {
      Element c = g.commutator(a, b);
      if (!current.contains(c)) {
        gens.push_back(c);
        current = generate_subgroup(g, gens);
      }
    }
  }
  return current;
}

Subgroup intersect(const Subgroup& h, const Subgroup& k) {
  std::vector<Element> common;
  for (Element e : h.elements()) {
    if (k.contains(e)) common.push_back(e);
  }
  return Subgroup(h.parent(), std::move(common));
}

Subgroup make_subgroup(const FiniteGroup& group, std::vector<Element> elements) {
  for (Element e : elements) {
    if (!group.contains(e)) {
      throw Error(ErrorKind::PreconditionViolated,
                  "element " + std::to_string(e) + " is not in the group");
    }
  }
  Subgroup candidate(group, std::move(elements));
  if (!candidate.contains(0)) {
    throw Error(ErrorKind::PreconditionViolated,
                "subset does not contain the identity");
  }
  for (Element a : candidate.elements()) {
    if (!candidate.contains(group.inv(a))) {
      throw Error(ErrorKind::PreconditionViolated,
                  "subset is not closed under inverses");
    }
    for (Element b : candidate.elements()) {
      if (!candidate.contains(group.mul(a, b))) {
        throw Error(ErrorKind::PreconditionViolated,
                    "subset is not closed under multiplication");
      }
    }
  }
  return candidate;
}

bool is_normal(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  for (Element x = 0; x < g.order(); ++x) {
    Element xi = g.inv(x);
    for (Element a : h.elements()) {
      if (!h.contains(g.mul(g.mul(x, a), xi))) return false;
    }
  }
  return true;
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& group) {
  std::vector<Subgroup> found;
  std::vector<std::vector<Element>> found_generators;
  std::set<std::vector<Element>> keys;
  std::vector<Element> cyclic_generators;
  for (Element x = 0; x < group.order(); ++x) {
    Element gens[] = {x};
    Subgroup c = generate_subgroup(group, gens);
    if (keys.insert(c.elements()).second) {
      found.push_back(c);
      found_generators.push_back({x});
      cyclic_generators.push_back(x);
    }
  }
  // Every subgroup is a join of cyclic subgroups.
  const std::size_t cyclic_count = found.size();
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = 0; j < cyclic_count; ++j) {
      Element x = cyclic_generators[j];
      if (found[i].contains(x)) continue;
      std::vector<Element> gens = found_generators[i];
      gens.push_back(x);
      Subgroup joined = generate_subgroup(group, gens);
      if (keys.insert(joined.elements()).second) {
        found.push_back(std::move(joined));
        found_generators.push_back(std::move(gens));
      }
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

std::vector<Subgroup> normal_subgroups(const FiniteGroup& group) {
  std::vector<Subgroup> found;
  std::set<std::vector<Element>> keys;
  auto add = [&](Subgroup s) {
    if (keys.insert(s.elements()).second) found.push_back(std::move(s));
  };
  add(trivial_subgroup(group));
  // Seeds are the normal closures of single elements; every normal subgroup
  // is a product of seeds.
  std::vector<Subgroup> seeds;
  for (const auto& cls : conjugacy_classes(group)) {
    Subgroup s = generate_subgroup(group, cls);
    bool fresh = std::none_of(seeds.begin(), seeds.end(),
                              [&](const Subgroup& t) { return t == s; });
    if (fresh) seeds.push_back(s);
    add(s);
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const Subgroup& seed : seeds) {
      if (seed.is_subset_of(found[i])) continue;
      std::vector<char> in_product(group.order(), 0);
      std::vector<Element> product;
      for (Element n : found[i].elements()) {
        for (Element m : seed.elements()) {
          Element x = group.mul(n, m);
          if (!in_product[x]) {
            in_product[x] = 1;
            product.push_back(x);
          }
        }
      }
      add(Subgroup(group, std::move(product)));
    }
  }
  std::sort(found.begin(), found.end(), subgroup_less);
  return found;
}

std::vector<Element> generating_set(const Subgroup& h) {
  const FiniteGroup& g = h.parent();
  std::vector<Element> gens;
  Subgroup current = trivial_subgroup(g);
  while (current.order() < h.order()) {
    std::size_t best_order = 0;
    Element best = 0;
    for (Element x : h.elements()) {
      if (current.contains(x)) continue;
      std::vector<Element> trial = gens;
      trial.push_back(x);
      std::size_t order = closure(g, trial).size();
      if (order > best_order) {
        best_order = order;
        best = x;
      }
      if (best_order == h.order()) break;
    }
    gens.push_back(best);
    current = generate_subgroup(g, gens);
  }
  return gens;
}

std::vector<Element> generating_set(const FiniteGroup& group) {
  return generating_set(whole_group(group));
}

}  // namespace gpcert
