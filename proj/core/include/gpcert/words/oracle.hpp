#pragma once

#include <cstddef>
#include <set>

#include "gpcert/words/syllable_algebra.hpp"

namespace gpcert {

inline constexpr std::size_t kDefaultOracleCap = 8;

// Every word reachable from word by T1, T2 and T3 moves, found by breadth
// first search. Shares no code with normal_form. Throws OracleCapExceeded
// when the word is longer than cap.
std::set<Word> oracle_reachable(const SyllableAlgebra& algebra, const Word& word,
                                std::size_t cap = kDefaultOracleCap);

// The empty word is reachable.
bool bfs_oracle_trivial(const SyllableAlgebra& algebra, const Word& word,
                        std::size_t cap = kDefaultOracleCap);

// Both words reach a common word. Moves never lengthen a word, so this
// decides equality for words within the cap.
bool bfs_oracle_equal(const SyllableAlgebra& algebra, const Word& a,
                      const Word& b, std::size_t cap = kDefaultOracleCap);

// b is reachable from a by T3 moves alone.
bool shuffle_connected(const SyllableAlgebra& algebra, const Word& a,
                       const Word& b);

}  // namespace gpcert
