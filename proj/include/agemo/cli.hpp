#pragma once

#include "agemo/catalog.hpp"
#include "agemo/explorer.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace agemo::cli {

enum ExitCode { Ok = 0, CheckFailed = 1, UsageError = 2 };

struct Config {
  std::size_t horizon = 20;
  std::size_t walk_horizon = 12;
  std::uint64_t seed = SearchOptions{}.seed;
  Field field = Field::rational();
  std::optional<mpq_class> q;
  std::string format = "json";
};

// Bad input from the command line: unknown builtin, bad module spec, unknown op.
struct UsageFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LoadedAlgebra {
  std::string source;
  AlgebraPtr algebra;
  std::optional<CompiledQuiver> quiver;
  bool is_lambda = false;
  mpq_class q{2};
};

// "lambda[:q=V]", "lambda_prime[:q=V]", "lambda_dprime", "lambda_tilde[:q=V]", or a file path.
// Files ending in .quiver use the quiver grammar; anything else is read as an algebra table.
LoadedAlgebra load_algebra(const std::string& spec, const Config& cfg);

// "name:key=value,..."; see the README for the list of names.
Module build_module(const LoadedAlgebra& alg, const std::string& spec);

std::vector<std::string> operation_names();

// Runs one operation and returns the report in cfg.format (json or text).
std::string compute(const LoadedAlgebra& alg, const Module& m, const std::string& op, const Config& cfg);

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace agemo::cli
