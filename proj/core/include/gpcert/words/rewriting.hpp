#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "gpcert/words/syllable_algebra.hpp"

namespace gpcert {

enum class MoveKind { T1, T2, T3 };

std::string_view to_string(MoveKind kind) noexcept;

// T1(i) deletes an identity syllable i; T2(i) merges syllables i and i+1 on
// the same vertex; T3(i) swaps syllables i and i+1 on adjacent vertices.
struct Move {
  MoveKind kind = MoveKind::T1;
  std::size_t index = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

struct RewriteStep {
  Move move;
  Word before;
  Word after;
};

using RewriteTrace = std::vector<RewriteStep>;

// Throws MoveNotApplicable.
Word rewrite_step(const SyllableAlgebra& algebra, const Word& word, Move move);

// The canonical reduced representative.
struct NormalForm {
  Word word;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// Reduces by joins (smallest pair first) and identity deletions, then sorts
// the reduced word into the shuffle representative whose vertex sequence is
// lexicographically least. Every step is appended to trace when given.
NormalForm normal_form(const SyllableAlgebra& algebra, const Word& word,
                       RewriteTrace* trace = nullptr);

// Syllables i < j share a vertex v and everything strictly between lies on
// link(v). Throws IndexOutOfRange.
bool can_join(const SyllableAlgebra& algebra, const Word& word, std::size_t i,
              std::size_t j);

// No identity syllable and no joinable pair.
bool is_reduced(const SyllableAlgebra& algebra, const Word& word);

Word inverse_word(const SyllableAlgebra& algebra, const Word& word);

VertexSet support(const SyllableAlgebra& algebra, const Word& word);

struct WordSummary {
  std::size_t length = 0;
  VertexSet support;
  Word inverse;
  bool is_reduced = false;
};

WordSummary word_ops(const SyllableAlgebra& algebra, const Word& word);

bool is_reduced_product(const SyllableAlgebra& algebra,
                        std::span<const Word> factors);

// Normal form of the product a b.
NormalForm multiply(const SyllableAlgebra& algebra, const Word& a, const Word& b);

bool is_trivial(const SyllableAlgebra& algebra, const Word& word);

}  // namespace gpcert
