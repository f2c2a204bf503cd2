#include "gpcert/words/rewriting.hpp"

#include <optional>

namespace gpcert {

namespace {

[[noreturn]] void not_applicable(Move move, const std::string& reason) {
  throw Error(ErrorKind::MoveNotApplicable,
              std::string(to_string(move.kind)) + "(" +
                  std::to_string(move.index) + "): " + reason);
}

bool joinable(const SimplicialGraph& g, const Word& w, std::size_t i,
              std::size_t j) {
  VertexId v = w[i].vertex;
  if (w[j].vertex != v) return false;
  for (std::size_t k = i + 1; k < j; ++k) {
    if (!g.adjacent(w[k].vertex, v)) return false;
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> first_joinable(
    const SimplicialGraph& g, const Word& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[j].vertex == w[i].vertex) {
        if (joinable(g, w, i, j)) return std::pair{i, j};
        break;  // a later same-vertex syllable is blocked by this one
      }
      if (!g.adjacent(w[j].vertex, w[i].vertex)) break;
    }
  }
  return std::nullopt;
}

class Rewriter {
 public:
  Rewriter(const SyllableAlgebra& algebra, Word word, RewriteTrace* trace)
      : algebra_(algebra), word_(std::move(word)), trace_(trace) {}

  void apply(Move move) {
    if (trace_) {
      Word after = rewrite_step(algebra_, word_, move);
      trace_->push_back({move, word_, after});
      word_ = std::move(after);
    } else {
      word_ = rewrite_step(algebra_, word_, move);
    }
  }

  Word& word() { return word_; }

 private:
  const SyllableAlgebra& algebra_;
  Word word_;
  RewriteTrace* trace_;
};

}  // namespace

std::string_view to_string(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::T1: return "T1";
    case MoveKind::T2: return "T2";
    case MoveKind::T3: return "T3";
  }
  return "T?";
}

Word rewrite_step(const SyllableAlgebra& algebra, const Word& word, Move move) {
  const std::size_t i = move.index;
  switch (move.kind) {
    case MoveKind::T1: {
      if (i >= word.size()) not_applicable(move, "index out of range");
      if (word[i].element != 0) not_applicable(move, "syllable is not the identity");
      Word out = word;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      return out;
    }
    case MoveKind::T2: {
      if (i + 1 >= word.size()) not_applicable(move, "index out of range");
      if (word[i].vertex != word[i + 1].vertex) {
        not_applicable(move, "syllables lie on different vertices");
      }
      Word out = word;
      VertexId v = word[i].vertex;
      out[i].element = algebra.multiply(v, word[i].element, word[i + 1].element);
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      return out;
    }
    case MoveKind::T3: {
      if (i + 1 >= word.size()) not_applicable(move, "index out of range");
      if (!algebra.graph().adjacent(word[i].vertex, word[i + 1].vertex)) {
        not_applicable(move, "vertices are not adjacent");
      }
      Word out = word;
      std::swap(out[i], out[i + 1]);
      return out;
    }
  }
  not_applicable(move, "unknown move");
}

NormalForm normal_form(const SyllableAlgebra& algebra, const Word& word,
                       RewriteTrace* trace) {
  const SimplicialGraph& g = algebra.graph();
  Rewriter r(algebra, word, trace);
  while (true) {
    if (auto pair = first_joinable(g, r.word())) {
      auto [i, j] = *pair;
      for (std::size_t k = j; k > i + 1; --k) r.apply({MoveKind::T3, k - 1});
      r.apply({MoveKind::T2, i});
      if (r.word()[i].element == 0) r.apply({MoveKind::T1, i});
      continue;
    }
    const Word& w = r.word();
    std::size_t id = 0;
    while (id < w.size() && w[id].element != 0) ++id;
    if (id == w.size()) break;
    r.apply({MoveKind::T1, id});
  }
  // Shuffle sort: fix positions left to right with the smallest available
  // vertex.
  for (std::size_t front = 0; front < r.word().size(); ++front) {
    const Word& w = r.word();
    std::size_t best = front;
    for (std::size_t k = front; k < w.size(); ++k) {
      bool available = true;
      for (std::size_t m = front; m < k && available; ++m) {
        available = g.adjacent(w[m].vertex, w[k].vertex);
      }
      if (available && w[k].vertex < w[best].vertex) best = k;
    }
    for (std::size_t k = best; k > front; --k) r.apply({MoveKind::T3, k - 1});
  }
  return NormalForm{std::move(r.word())};
}

bool can_join(const SyllableAlgebra& algebra, const Word& word, std::size_t i,
              std::size_t j) {
  if (i >= j || j >= word.size()) {
    throw Error(ErrorKind::IndexOutOfRange,
                "can_join(" + std::to_string(i) + ", " + std::to_string(j) +
                    ") on a word of length " + std::to_string(word.size()));
  }
  return joinable(algebra.graph(), word, i, j);
}

bool is_reduced(const SyllableAlgebra& algebra, const Word& word) {
  for (const Syllable& s : word) {
    if (s.element == 0) return false;
  }
  return !first_joinable(algebra.graph(), word).has_value();
}

Word inverse_word(const SyllableAlgebra& algebra, const Word& word) {
  Word out(word.rbegin(), word.rend());
  for (Syllable& s : out) s.element = algebra.inverse(s.vertex, s.element);
  return out;
}

VertexSet support(const SyllableAlgebra& algebra, const Word& word) {
  VertexSet out;
  for (const Syllable& s : normal_form(algebra, word).word) out.insert(s.vertex);
  return out;
}

WordSummary word_ops(const SyllableAlgebra& algebra, const Word& word) {
  NormalForm nf = normal_form(algebra, word);
  WordSummary out;
  out.length = nf.word.size();
  for (const Syllable& s : nf.word) out.support.insert(s.vertex);
  out.inverse = inverse_word(algebra, word);
  out.is_reduced = is_reduced(algebra, word);
  return out;
}

bool is_reduced_product(const SyllableAlgebra& algebra,
                        std::span<const Word> factors) {
  Word all;
  std::size_t total = 0;
  for (const Word& f : factors) {
    total += normal_form(algebra, f).word.size();
    all.insert(all.end(), f.begin(), f.end());
  }
  return normal_form(algebra, all).word.size() == total;
}

NormalForm multiply(const SyllableAlgebra& algebra, const Word& a, const Word& b) {
  return normal_form(algebra, concat(a, b));
}

bool is_trivial(const SyllableAlgebra& algebra, const Word& word) {
  return normal_form(algebra, word).word.empty();
}

}  // namespace gpcert
