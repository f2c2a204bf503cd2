#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "document.hpp"
#include "gpcert/words/oracle.hpp"

namespace gpcert::cli {

enum ExitCode : int { kOk = 0, kVerdictFalse = 1, kInputError = 2, kBudgetExceeded = 3 };

struct Options {
  std::uint64_t seed = 0;
  std::size_t budget_order = SearchBudget{}.max_target_order;
  std::size_t budget_candidates = SearchBudget{}.max_candidates;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string tag = "finite";
  std::vector<std::string> words;  // names in the document; empty means all
  std::string vertex;
  std::vector<std::string> subset;
  bool expect_trivial = false;
  bool trace = false;
};

struct Outcome {
  json document;
  int exit_code = kOk;
};

const std::vector<std::string>& command_names();

json options_to_json(const Options& options);

// Never throws for bad input: errors become an {error: {kind, detail}}
// document with the matching exit code.
Outcome run(const std::string& command, const json& input, const Options& options);

int exit_code_for(ErrorKind kind) noexcept;

}  // namespace gpcert::cli
