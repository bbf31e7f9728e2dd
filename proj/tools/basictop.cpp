#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "basictop/errors.hpp"
#include "basictop/workspace.hpp"

namespace {

template <class T>
void env_fallback(T& value, const CLI::Option* option, const char* variable) {
  if (option->count() > 0) return;
  const char* env = std::getenv(variable);
  if (!env) return;
  std::istringstream in(env);
  T parsed{};
  if (!(in >> parsed) || !in.eof()) throw CLI::ValidationError(variable, std::string("not a number: ") + env);
  value = parsed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Basic topologies over finite Heyting algebras"};
  std::string doc_path;
  std::size_t subset_cap = basictop::kDefaultSubsetCap;
  basictop::RunOptions options;
  std::vector<std::string> command;

  app.add_option("--doc", doc_path, "workspace document (default: Boolean algebra, carrier {a, b})");
  auto* cap_opt = app.add_option("--subset-cap", subset_cap, "largest |H|^|S| enumerated exhaustively");
  auto* samples_opt = app.add_option("--sample-count", options.sample_count, "samples for randomized checks");
  auto* seed_opt = app.add_option("--seed", options.seed, "seed for randomized checks");
  app.add_option("command", command,
                 "validate | classify OP | compat OP OP | ll OP | rr OP | aa RED | jj SAT | galois SAT RED | "
                 "laws [SUITE] | generate AXIOMS | represent REL | diagram TOPOLOGY | counterexample NAME")
      ->required();

  try {
    app.parse(argc, argv);
    env_fallback(subset_cap, cap_opt, "BASICTOP_SUBSET_CAP");
    env_fallback(options.sample_count, samples_opt, "BASICTOP_SAMPLE_COUNT");
    env_fallback(options.seed, seed_opt, "BASICTOP_SEED");
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text = basictop::default_document();
  if (!doc_path.empty()) {
    std::ifstream in(doc_path);
    if (!in) {
      std::cerr << "error: cannot read " << doc_path << "\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }

  try {
    auto ws = basictop::parse_document(text, subset_cap);
    auto result = basictop::run(ws, command, options);
    std::cout << result.output;
    return result.exit_code;
  } catch (const basictop::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const basictop::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
