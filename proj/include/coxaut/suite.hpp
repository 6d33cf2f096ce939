#pragma once

#include <memory>
#include <string>
#include <vector>

#include "coxaut/word_engine.hpp"

namespace coxaut {

enum class CheckStatus { kPass, kFail, kVacuous, kIndeterminate };

std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct SuiteOptions {
  int radius = 5;
  int probe = -1;  // negative: radius - max finite order
  int n_max = 3;
  // Stabiliser census stops after this many entries for flexible systems.
  std::size_t census_cap = 256;
};

struct SuiteReport {
  int radius = 0;
  int probe = 0;
  bool flexible = false;
  std::string witness;  // "pivot=s phi=(t u)" when flexible
  std::string verdict;  // DISCRETE-EVIDENCE / NONDISCRETE-EVIDENCE / INCONCLUSIVE
  std::vector<CheckResult> checks;

  bool failed() const;
  bool indeterminate() const;
  // 0 pass, 1 violation, 3 indeterminate.
  int exit_code() const;
};

// Runs every ball-level invariant for one system: bipartiteness, distances,
// essential-cycle characterisation and label alternation, local permutation
// laws, the factored group law, the exotic maps when the diagram is flexible,
// the identity-stabiliser census and the adjacent-vertex coupling law.
SuiteReport run_invariant_suite(std::shared_ptr<WordEngine const> engine,
                                SuiteOptions const& options);

}  // namespace coxaut
