#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpcert/algebra/class_tag.hpp"
#include "gpcert/algebra/subgroup.hpp"

namespace gpcert {

struct SearchBudget {
  // Largest catalog group tried as a search target.
  std::size_t max_target_order = 128;
  // Hom pairs evaluated across one top-level call.
  std::size_t max_candidates = 2'000'000;
  // Nonzero seeds shuffle the target order within each pass.
  std::uint64_t seed = 0;
  // Largest finite group materialized along the way.
  std::size_t order_cap = kDefaultOrderCap;
};

// Candidates spent so far; shared by the nested searches of one call.
struct SearchMeter {
  std::size_t candidates = 0;
};

// q_0 s_1 q_1 ... s_n q_n in Q *_B (B x S).
struct AmalgamWord {
  std::vector<Element> q_parts;
  std::vector<Element> s_parts;
};

// Every s-part is nontrivial and every middle q-part lies outside b.
bool is_reduced_amalgam_word(const AmalgamWord& word, const Subgroup& b);

struct AmalgamSeparation {
  FiniteGroup target;
  std::vector<Element> theta_q;  // Q -> D
  std::vector<Element> theta_s;  // S -> D
  Element image = 0;
  int stage = 1;
  std::string target_name;  // catalog name for stage 2, "QxS" for stage 1
  std::size_t candidates = 0;
};

// Finds a homomorphism of Q *_B (B x S) onto a group in the class that keeps
// word nontrivial. Stage 1 tries the projection onto Q x S; stage 2 searches
// catalog targets T for pairs theta_q, theta_s with theta_s(S) centralizing
// theta_q(B). Throws PreconditionViolated when word is not reduced and
// BudgetExceeded when the search gives up.
AmalgamSeparation base_separate_amalgam(const FiniteGroup& q, const FiniteGroup& s,
                                        const Subgroup& b, const AmalgamWord& word,
                                        const ClassTag& tag,
                                        const SearchBudget& budget,
                                        SearchMeter& meter);

AmalgamSeparation base_separate_amalgam(const FiniteGroup& q, const FiniteGroup& s,
                                        const Subgroup& b, const AmalgamWord& word,
                                        const ClassTag& tag,
                                        const SearchBudget& budget = {});

// Catalog indices in search order: groups in the class first, then the rest,
// each pass by order and shuffled within itself when seed is nonzero.
std::vector<std::size_t> search_targets(const ClassTag& tag, const SearchBudget& budget);

}  // namespace gpcert
