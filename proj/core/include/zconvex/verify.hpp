#pragma once

// Cross-checks between the census, the structural predicates and the
// generating functions, collected into a serialisable report.

#include <functional>
#include <string>
#include <vector>

#include "zconvex/census.hpp"
#include "zconvex/series.hpp"

namespace zconvex {

// Labels used by census_table: "convex", one of "centered" / "ascending" /
// "descending", "l-convex" and "z-convex" when they apply, and "degree=k".
Classifier standard_classifier();

// Restricts standard_classifier to the named labels. "all" stands for
// "convex"; "degree" keeps every "degree=k" label. Throws CensusError on an
// unknown name.
Classifier label_filter(const std::vector<std::string>& names);

// Count of convex polyominoes with the given semi-perimeter (>= 2), from the
// closed form (2n+11) 4^n - 4(2n+1) binom(2n,n) with n = sp - 4, and the
// initial values 1, 2 for sp 2, 3.
Integer convex_count_formula(int sp);

struct CheckResult {
  std::string name;
  std::string source;  // "literature", "brute-force" or "identity"
  std::string observed;
  std::string expected;
  bool pass = false;
  double seconds = 0;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct VerificationReport {
  int order = 0;
  int max_sp = 0;
  int workers = 1;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
  std::string to_json() const;
  static VerificationReport from_json(const std::string& text);

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  int max_sp = 10;
  int order = 12;
  int workers = 1;
  // Names of checks to run; empty runs all of verification_checks().
  std::vector<std::string> only;
  // Applied to every generating function (by name) before it is compared,
  // so a deliberately wrong coefficient can exercise the failure path.
  std::function<void(const std::string& series, BiSeries& f)> tamper;
  // Called after each check completes.
  std::function<void(const CheckResult&)> progress;
};

// Names of the checks in execution order.
const std::vector<std::string>& verification_checks();

// Throws std::invalid_argument when max_sp < 2 or order < max_sp.
VerificationReport run_verification(const VerifyOptions& options);

// Process exit codes.
inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

}  // namespace zconvex
