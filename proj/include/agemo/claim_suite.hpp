#pragma once

#include "agemo/catalog.hpp"
#include "agemo/explorer.hpp"

#include <string>
#include <vector>

namespace agemo {

struct SuiteConfig {
  mpq_class q{2};
  std::size_t horizon = 20;
  std::size_t walk_horizon = 8;
  std::size_t tr_horizon = 8;
  SearchOptions search;
  ExtOptions ext;
  bool parallel = true;
};

struct ClaimResult {
  std::size_t index = 0;
  std::string id;
  std::string title;
  bool pass = false;
  std::vector<std::string> failures;
  std::string summary;
  double seconds = 0;
};

// Sweep used for the ideal facts: special values 0, 1, q plus generic points.
std::vector<mpq_class> ideal_sweep();

// Modules of both sides used by the property checks.
struct CorpusEntry {
  std::string label;
  Module module;
};
std::vector<CorpusEntry> property_corpus(const CompiledQuiver& lambda, const mpq_class& q);

std::vector<ClaimResult> run_claim_suite(const SuiteConfig& cfg);
std::string format_suite(const std::vector<ClaimResult>& results);

}  // namespace agemo
