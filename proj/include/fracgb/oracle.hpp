#pragma once

#include <cstdint>
#include <vector>

#include "fracgb/instance.hpp"
#include "fracgb/polynomial.hpp"
#include "fracgb/rational.hpp"

namespace fracgb {

/// Exhaustive enumeration is capped at 2^20 points.
inline constexpr int kMaxEnumerationVars = 20;

struct BruteMaxResult {
  long long best_satisfied = 0;
  Rational fraction{0, 1};
  Assignment witness;  // ties broken toward the lowest binary encoding
};

/// Maximum satisfied fraction over all 2^n assignments. The parallel kernel
/// is the default; the serial variant is the reference the tests compare
/// against. Both throw TooLargeToEnumerateError above the cap.
BruteMaxResult brute_max_fraction(const PredicateInstance& inst);
BruteMaxResult brute_max_fraction_serial(const PredicateInstance& inst);

bool is_satisfiable(const PredicateInstance& inst);

/// All boolean points (as bit masks, ascending) zeroing every polynomial.
std::vector<std::uint32_t> brute_variety(const std::vector<Polynomial>& polys, int num_vars);
std::vector<std::uint32_t> brute_variety_serial(const std::vector<Polynomial>& polys, int num_vars);

}  // namespace fracgb
