#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpcert/algebra/catalog.hpp"
#include "gpcert/algebra/class_tag.hpp"
#include "gpcert/words/rewriting.hpp"

namespace gpcert::testing {

inline FiniteGroup group(const std::string& name) {
  auto g = catalog_group(name);
  if (!g) throw std::runtime_error("no catalog group " + name);
  return *g;
}

inline GraphProduct product(std::vector<std::string> names,
                            std::vector<std::pair<std::string, std::string>> edges,
                            const std::vector<std::string>& groups) {
  std::vector<FiniteGroup> gs;
  for (const auto& g : groups) gs.push_back(group(g));
  return GraphProduct(SimplicialGraph(std::move(names), edges), std::move(gs));
}

inline GraphProduct uniform_product(const SimplicialGraph& graph, const FiniteGroup& g) {
  return GraphProduct(graph, std::vector<FiniteGroup>(graph.vertex_count(), g));
}

// Graph families on n vertices named v0, v1, ...
inline SimplicialGraph family_graph(const std::string& kind, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (kind == "path" || kind == "cycle") {
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    if (kind == "cycle" && n >= 3) edges.emplace_back(n - 1, 0);
  } else if (kind == "complete") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return SimplicialGraph::from_ids(std::move(names), edges);
}

// Every word of exactly the given length over all syllables, identity
// syllables included.
inline void for_each_word(const GraphProduct& g, std::size_t length,
                          const std::function<void(const Word&)>& visit) {
  std::vector<Syllable> letters;
  for (VertexId v = 0; v < g.graph().vertex_count(); ++v)
    for (Element x = 0; x < g.group(v).order(); ++x) letters.push_back({v, x});
  Word w(length);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == length) {
      visit(w);
      return;
    }
    for (const Syllable& s : letters) {
      w[i] = s;
      rec(i + 1);
    }
  };
  rec(0);
}

inline std::size_t syllable_count(const GraphProduct& g) {
  std::size_t n = 0;
  for (VertexId v = 0; v < g.graph().vertex_count(); ++v) n += g.group(v).order();
  return n;
}

// Brute-force subgroup enumeration over all subsets containing 0; usable for
// groups of order at most 12.
inline std::vector<std::vector<Element>> brute_subgroups(const FiniteGroup& g, bool normal_only) {
  const std::size_t n = g.order();
  std::vector<std::vector<Element>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (n - 1)); ++mask) {
    std::vector<char> in(n, 0);
    in[0] = 1;
    for (std::size_t i = 1; i < n; ++i) in[i] = (mask >> (i - 1)) & 1;
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a)
      for (Element b = 0; b < n && ok; ++b)
        if (in[a] && in[b] && !in[g.mul(a, b)]) ok = false;
    if (ok && normal_only) {
      for (Element a = 0; a < n && ok; ++a)
        for (Element x = 0; x < n && ok; ++x)
          if (in[a] && !in[g.mul(g.mul(x, a), g.inv(x))]) ok = false;
    }
    if (!ok) continue;
    std::vector<Element> s;
    for (Element a = 0; a < n; ++a)
      if (in[a]) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

// A bijection preserving the table, found by backtracking on images of a
// generating sequence.
inline bool brute_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  std::vector<std::size_t> order_a(n), order_b(n);
  for (Element x = 0; x < n; ++x) {
    order_a[x] = a.element_order(x);
    order_b[x] = b.element_order(x);
  }
  auto ha = order_a, hb = order_b;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;
  // Greedy generating sequence of a.
  std::vector<Element> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  auto close = [&](std::vector<char>& r) {
    bool grew = true;
    while (grew) {
      grew = false;
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (r[x] && r[y] && !r[a.mul(x, y)]) r[a.mul(x, y)] = grew = true;
    }
  };
  for (Element x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    reached[x] = 1;
    close(reached);
  }
  std::vector<Element> images(gens.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == gens.size()) {
      // Extend by words in the generators and check consistency.
      std::vector<long long> map(n, -1);
      map[0] = 0;
      std::vector<Element> frontier{0};
      while (!frontier.empty()) {
        Element x = frontier.back();
        frontier.pop_back();
        for (std::size_t k = 0; k < gens.size(); ++k) {
          Element y = a.mul(x, gens[k]);
          Element fy = b.mul(static_cast<Element>(map[x]), images[k]);
          if (map[y] < 0) {
            map[y] = fy;
            frontier.push_back(y);
          } else if (map[y] != fy) {
            return false;
          }
        }
      }
      std::vector<char> hit(n, 0);
      for (Element x = 0; x < n; ++x) {
        if (hit[map[x]]) return false;
        hit[map[x]] = 1;
      }
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
      return true;
    }
    for (Element y = 0; y < n; ++y) {
      if (order_b[y] != order_a[gens[i]]) continue;
      images[i] = y;
      if (rec(i + 1)) return true;
    }
    return false;
  };
  return rec(0);
}

// Every homomorphism a -> t as an image table, by trying all images of a
// greedy generating sequence and checking the full table.
inline std::vector<std::vector<Element>> brute_homs(const FiniteGroup& a, const FiniteGroup& t) {
  const std::size_t n = a.order();
  std::vector<Element> gens;
  std::vector<char> reached(n, 0);
  reached[0] = 1;
  for (Element x = 1; x < n; ++x) {
    if (reached[x]) continue;
    gens.push_back(x);
    bool grew = true;
    reached[x] = 1;
    while (grew) {
      grew = false;
      for (Element p = 0; p < n; ++p)
        for (Element q = 0; q < n; ++q)
          if (reached[p] && reached[q] && !reached[a.mul(p, q)]) reached[a.mul(p, q)] = grew = true;
    }
  }
  std::vector<std::vector<Element>> out;
  std::vector<Element> images(gens.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i < gens.size()) {
      for (Element y = 0; y < t.order(); ++y) {
        images[i] = y;
        rec(i + 1);
      }
      return;
    }
    std::vector<long long> map(n, -1);
    map[0] = 0;
    std::vector<Element> frontier{0};
    while (!frontier.empty()) {
      Element x = frontier.back();
      frontier.pop_back();
      for (std::size_t k = 0; k < gens.size(); ++k) {
        Element y = a.mul(x, gens[k]);
        Element fy = t.mul(static_cast<Element>(map[x]), images[k]);
        if (map[y] < 0) {
          map[y] = fy;
          frontier.push_back(y);
        } else if (map[y] != fy) {
          return;
        }
      }
    }
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (map[a.mul(x, y)] != static_cast<long long>(t.mul(static_cast<Element>(map[x]), static_cast<Element>(map[y])))) return;
    out.emplace_back(map.begin(), map.end());
  };
  rec(0);
  return out;
}

// Free reduction in a free product of copies of Z: letters are (vertex,
// nonzero exponent); adjacent letters on one vertex add.
using FreeWord = std::vector<std::pair<VertexId, long long>>;

inline FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (auto [v, e] : w) {
    if (e == 0) continue;
    if (!out.empty() && out.back().first == v) {
      out.back().second += e;
      if (out.back().second == 0) out.pop_back();
    } else {
      out.emplace_back(v, e);
    }
  }
  return out;
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.emplace_back(it->first, -it->second);
  return out;
}

}  // namespace gpcert::testing
