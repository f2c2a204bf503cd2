#include "gpcert/words/oracle.hpp"

#include <deque>

namespace gpcert {

namespace {

void check_cap(const Word& w, std::size_t cap) {
  if (w.size() > cap) {
    throw Error(ErrorKind::OracleCapExceeded,
                "word length " + std::to_string(w.size()) + " exceeds cap " +
                    std::to_string(cap));
  }
}

template <typename Visit>
void neighbors(const SyllableAlgebra& algebra, const Word& w, bool shuffles_only,
               Visit visit) {
  const SimplicialGraph& g = algebra.graph();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!shuffles_only && w[i].element == 0) {
      Word n;
      n.reserve(w.size() - 1);
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (k != i) n.push_back(w[k]);
      }
      visit(std::move(n));
    }
    if (i + 1 == w.size()) continue;
    const Syllable& x = w[i];
    const Syllable& y = w[i + 1];
    if (!shuffles_only && x.vertex == y.vertex) {
      Word n;
      n.reserve(w.size() - 1);
      for (std::size_t k = 0; k < i; ++k) n.push_back(w[k]);
      n.push_back({x.vertex, algebra.multiply(x.vertex, x.element, y.element)});
      for (std::size_t k = i + 2; k < w.size(); ++k) n.push_back(w[k]);
      visit(std::move(n));
    }
    if (g.adjacent(x.vertex, y.vertex)) {
      Word n = w;
      n[i] = y;
      n[i + 1] = x;
      visit(std::move(n));
    }
  }
}

std::set<Word> explore(const SyllableAlgebra& algebra, const Word& start,
                       bool shuffles_only) {
  std::set<Word> seen{start};
  std::deque<Word> queue{start};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    neighbors(algebra, w, shuffles_only, [&](Word n) {
      if (seen.insert(n).second) queue.push_back(std::move(n));
    });
  }
  return seen;
}

}  // namespace

std::set<Word> oracle_reachable(const SyllableAlgebra& algebra, const Word& word,
                                std::size_t cap) {
  check_cap(word, cap);
  return explore(algebra, word, false);
}

bool bfs_oracle_trivial(const SyllableAlgebra& algebra, const Word& word,
                        std::size_t cap) {
  return oracle_reachable(algebra, word, cap).contains(Word{});
}

bool bfs_oracle_equal(const SyllableAlgebra& algebra, const Word& a,
                      const Word& b, std::size_t cap) {
  std::set<Word> ra = oracle_reachable(algebra, a, cap);
  std::set<Word> rb = oracle_reachable(algebra, b, cap);
  const auto& small = ra.size() < rb.size() ? ra : rb;
  const auto& large = ra.size() < rb.size() ? rb : ra;
  for (const Word& w : small) {
    if (large.contains(w)) return true;
  }
  return false;
}

bool shuffle_connected(const SyllableAlgebra& algebra, const Word& a,
                       const Word& b) {
  if (a.size() != b.size()) return false;
  return explore(algebra, a, true).contains(b);
}

}  // namespace gpcert
