#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

std::string read_all(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace gpcert::cli;
  CLI::App app{"Graph product normal forms, separation certificates and almost-homomorphisms"};
  Options options;
  std::string command;
  std::string input_path = "-";
  std::string output_path = "-";
  std::string subset;

  app.add_option("command", command, "One of: nf, wp, supp, retract, split, amalgam, closure, "
                                     "separate, check-cert, obstruct, lec-assemble, lec-finitize")
      ->required();
  app.add_option("input", input_path, "Input document, - for stdin");
  app.add_option("-o,--output", output_path, "Output document, - for stdout");
  app.add_option("--seed", options.seed, "Search seed");
  app.add_option("--budget-order", options.budget_order, "Largest catalog target order");
  app.add_option("--budget-candidates", options.budget_candidates, "Homomorphism pairs to try");
  app.add_option("--oracle-cap", options.oracle_cap, "Longest word given to the BFS oracle");
  app.add_option("--tag", options.tag, "Target class: finite, pgroup:<p>, solvable, "
                                       "finite-solvable, abelian, nilpotent");
  app.add_option("--word", options.words, "Word name from the document (repeatable)");
  app.add_option("--vertex", options.vertex, "Splitting vertex");
  app.add_option("--subset", subset, "Comma-separated vertex names");
  app.add_flag("--expect-trivial", options.expect_trivial, "Exit 1 unless every word is trivial");
  app.add_flag("--trace", options.trace, "Record rewrite steps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::string item;
  for (char ch : subset + ",") {
    if (ch == ',') {
      if (!item.empty()) options.subset.push_back(item);
      item.clear();
    } else {
      item += ch;
    }
  }

  json input;
  try {
    input = json::parse(read_all(input_path));
  } catch (const std::exception& e) {
    std::cerr << "gpcert: " << e.what() << "\n";
    return kInputError;
  }

  Outcome outcome = run(command, input, options);
  const std::string text = outcome.document.dump(2) + "\n";
  if (output_path == "-") {
    std::cout << text;
  } else {
    std::ofstream(output_path) << text;
  }
  if (outcome.document.contains("error")) {
    std::cerr << "gpcert: " << outcome.document["error"]["detail"].get<std::string>() << "\n";
  }
  return outcome.exit_code;
}
