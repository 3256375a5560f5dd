#pragma once

#include <cstdint>
#include <string>

#include "fracgb/instance.hpp"
#include "fracgb/rational.hpp"
#include "fracgb/solver.hpp"

namespace fracgb {

struct PipelineOptions {
  Rational q{1, 1};
  Strategy strategy = Strategy::Empty;
  std::uint64_t seed = 0;
  std::uint32_t prime = 32003;
  /// Brute-force satisfiability precheck when the instance is small enough.
  bool oracle_precheck = true;
};

/// Full run record. to_text() has a stable key order and exact rational
/// values so identical runs serialize byte-identically.
struct PipelineReport {
  Kind kind = Kind::Not2;
  std::uint32_t prime = 0;
  Rational q{0, 1};
  Rational epsilon{0, 1};
  Strategy strategy = Strategy::Empty;
  std::uint64_t seed = 0;

  long long literals_original = 0, predicates_original = 0;
  long long literals_tailored = 0, predicates_tailored = 0;
  long long removed_trivial = 0, loner_rounds = 0, loner_predicates = 0, loner_literals = 0;
  long long fixed_literals = 0;

  long long system_size = 0;     // |F|
  long long ignored_vars = 0;    // |Y'|
  long long ignored_polys = 0;   // |F_{Y'}|
  long long predicates_surviving = 0;  // |P_R|
  long long predicates_ignored = 0;    // |P_D|

  long long satisfied_surviving = 0, satisfied_ignored = 0, satisfied_removed = 0;
  long long satisfied_tailored = 0, satisfied_original = 0;
  Rational fraction_tailored{0, 1}, fraction_original{0, 1}, required_fraction{0, 1};

  bool flag_two_fifths = false;
  bool flag_budget = false;
  bool flag_inequality = false;
  bool flag_pd_half = false;
  bool flag_pr_all = false;
  bool flag_removed_all = false;
  bool flag_final_bound = false;

  Assignment assignment;

  bool all_flags() const;
  std::string to_text() const;
};

/// parse -> tailor -> encode -> solve -> extract -> derandomize ->
/// reinsert -> evaluate. Throws with a stage tag on failure.
PipelineReport run_pipeline(const PredicateInstance& inst, const PipelineOptions& options);

}  // namespace fracgb
