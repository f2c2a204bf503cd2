#include "gpcert/algebra/hom_search.hpp"

#include <algorithm>
#include <cstdlib>

namespace gpcert {

Element evaluate_relator(const FiniteGroup& target,
                         std::span<const Element> assignment,
                         std::span<const int> relator) {
  Element value = 0;
  for (int letter : relator) {
    Element x = assignment[static_cast<std::size_t>(std::abs(letter)) - 1];
    value = target.mul(value, letter > 0 ? x : target.inv(x));
  }
  return value;
}

bool for_each_hom(const GroupPresentation& source, const FiniteGroup& target,
                  const std::function<bool(std::span<const Element>)>& visit) {
  const std::size_t k = source.generator_count;
  for (const auto& r : source.relators) {
    for (int letter : r) {
      if (letter == 0 || static_cast<std::size_t>(std::abs(letter)) > k) {
        throw Error(ErrorKind::PreconditionViolated,
                    "relator letter " + std::to_string(letter) +
                        " does not name a generator");
      }
    }
  }
  // A relator becomes checkable once its largest generator is assigned.
  std::vector<std::vector<std::size_t>> ready(k + 1);
  for (std::size_t r = 0; r < source.relators.size(); ++r) {
    std::size_t top = 0;
    for (int letter : source.relators[r]) {
      top = std::max(top, static_cast<std::size_t>(std::abs(letter)));
    }
    ready[top].push_back(r);
  }
  std::vector<Element> assignment(k, 0);
  bool keep_going = true;
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (!keep_going) return;
    if (depth == k) {
      keep_going = visit(assignment);
      return;
    }
    for (Element x = 0; x < target.order() && keep_going; ++x) {
      assignment[depth] = x;
      bool ok = true;
      for (std::size_t r : ready[depth + 1]) {
        if (evaluate_relator(target, assignment, source.relators[r]) != 0) {
          ok = false;
          break;
        }
      }
      if (ok) descend(depth + 1);
    }
  };
  descend(0);
  return keep_going;
}

bool for_each_hom_from(const FiniteGroup& source,
                       std::span<const Element> generators,
                       const FiniteGroup& target,
                       const std::function<bool(const std::vector<Element>&)>& visit) {
  constexpr Element kUnset = ~Element{0};
  const std::size_t k = generators.size();
  std::vector<std::size_t> target_order(target.order());
  for (Element x = 0; x < target.order(); ++x) target_order[x] = target.element_order(x);
  std::vector<std::size_t> generator_order(k);
  for (std::size_t i = 0; i < k; ++i) generator_order[i] = source.element_order(generators[i]);

  std::vector<Element> images(k, 0);
  std::vector<Element> map(source.order());
  std::vector<Element> queue;
  // Extends the first depth generator images over the subgroup they generate.
  auto consistent = [&](std::size_t depth) {
    std::fill(map.begin(), map.end(), kUnset);
    map[0] = 0;
    queue.assign(1, 0);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Element x = queue[q];
      for (std::size_t i = 0; i < depth; ++i) {
        Element y = source.mul(x, generators[i]);
        Element fy = target.mul(map[x], images[i]);
        if (map[y] == kUnset) {
          map[y] = fy;
          queue.push_back(y);
        } else if (map[y] != fy) {
          return false;
        }
      }
    }
    return true;
  };

  bool keep_going = true;
  std::function<void(std::size_t)> descend = [&](std::size_t depth) {
    if (depth == k) {
      if (queue.size() != source.order()) {
        throw Error(ErrorKind::PreconditionViolated,
                    "generators do not generate the source");
      }
      keep_going = visit(map);
      return;
    }
    for (Element x = 0; x < target.order() && keep_going; ++x) {
      if (generator_order[depth] % target_order[x] != 0) continue;
      images[depth] = x;
      if (consistent(depth + 1)) descend(depth + 1);
    }
  };
  if (k == 0) {
    consistent(0);
    descend(0);
  } else {
    descend(0);
  }
  return keep_going;
}

HomEnumeration enumerate_homs(const GroupPresentation& source,
                              const FiniteGroup& target, std::size_t budget) {
  HomEnumeration out;
  bool finished = for_each_hom(source, target, [&](std::span<const Element> a) {
    if (out.assignments.size() == budget) {
      out.truncated = true;
      return false;
    }
    out.assignments.emplace_back(a.begin(), a.end());
    return true;
  });
  if (finished) out.truncated = false;
  return out;
}

}  // namespace gpcert
