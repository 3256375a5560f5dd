#pragma once

#include <map>
#include <set>
#include <vector>

#include "fracgb/instance.hpp"
#include "fracgb/rational.hpp"

namespace fracgb {

/// Assignment state entering Stage 3: decided literal values plus the set
/// still awaiting a value. The two parts are disjoint and jointly cover the
/// literals under consideration.
struct PartialAssignment {
  std::map<int, int> values;
  std::set<int> undecided;
};

/// Exact probability that the predicate is satisfied when every undecided
/// literal is set true/false independently with probability 1/2; computed
/// by enumerating the predicate's undecided literals (at most 3).
Rational satisfaction_probability(const Predicate& pred, const PartialAssignment& partial);

/// Linearity of expectation over the list.
Rational expected_satisfied(const std::vector<Predicate>& preds, const PartialAssignment& partial);

/// Method of conditional expectations: fixes undecided literals in
/// ascending index order, choosing the value that maximizes the conditional
/// expected number of satisfied predicates (ties to 0). The final satisfied
/// count is at least the initial expectation.
PartialAssignment derandomize(const std::vector<Predicate>& preds, PartialAssignment partial);

}  // namespace fracgb
