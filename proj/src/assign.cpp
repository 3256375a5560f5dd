#include "fracgb/assign.hpp"

#include <algorithm>

#include "fracgb/errors.hpp"

namespace fracgb {

Rational satisfaction_probability(const Predicate& pred, const PartialAssignment& partial) {
  int max_literal = -1;
  std::vector<int> undecided;
  for (int lit : free_literals(pred)) {
    max_literal = std::max(max_literal, lit);
    if (partial.undecided.contains(lit)) {
      undecided.push_back(lit);
    } else if (!partial.values.contains(lit)) {
      throw UnassignedVariableError("literal l" + std::to_string(lit + 1) +
                                    " neither decided nor undecided");
    }
  }

  Assignment x(static_cast<std::size_t>(max_literal + 1), kUnassigned);
  for (const auto& [lit, value] : partial.values) {
    if (lit <= max_literal) x[lit] = static_cast<std::int8_t>(value);
  }

  long long satisfied = 0;
  const std::size_t combos = std::size_t{1} << undecided.size();
  for (std::size_t bits = 0; bits < combos; ++bits) {
    for (std::size_t i = 0; i < undecided.size(); ++i)
      x[undecided[i]] = static_cast<std::int8_t>((bits >> i) & 1);
    if (evaluate_predicate(pred, x)) ++satisfied;
  }
  return Rational(satisfied, static_cast<long long>(combos));
}

Rational expected_satisfied(const std::vector<Predicate>& preds, const PartialAssignment& partial) {
  Rational sum(0, 1);
  for (const Predicate& pred : preds) sum += satisfaction_probability(pred, partial);
  return sum;
}

PartialAssignment derandomize(const std::vector<Predicate>& preds, PartialAssignment partial) {
  while (!partial.undecided.empty()) {
    const int lit = *partial.undecided.begin();
    partial.undecided.erase(partial.undecided.begin());

    partial.values[lit] = 0;
    const Rational with_zero = expected_satisfied(preds, partial);
    partial.values[lit] = 1;
    const Rational with_one = expected_satisfied(preds, partial);
    partial.values[lit] = with_zero >= with_one ? 0 : 1;
  }
  return partial;
}

}  // namespace fracgb
