#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fracgb/rational.hpp"

namespace fracgb {

/// A literal in positive or negated form. Indices are 0-based internally;
/// instance files use 1-based indices with sign encoding negation.
struct SignedLiteral {
  int literal = 0;
  bool negated = false;
  bool operator==(const SignedLiteral&) const = default;
};

/// A predicate slot whose truth value was permanently fixed by tailoring.
/// Stores the truth value of the original signed literal, not of the
/// underlying variable.
struct FixedTerm {
  int value = 0;
  bool operator==(const FixedTerm&) const = default;
};

using Slot = std::variant<SignedLiteral, FixedTerm>;

/// Arity-3 "not two" predicate: satisfied unless exactly 2 slots are true.
struct Not2Predicate {
  std::vector<Slot> slots;  // 1 to 3 entries
  bool operator==(const Not2Predicate&) const = default;
};

/// special OR (sym1 XOR sym2).
struct OxrPredicate {
  Slot special;
  Slot sym1;
  Slot sym2;
  bool operator==(const OxrPredicate&) const = default;
};

using Predicate = std::variant<Not2Predicate, OxrPredicate>;

enum class Kind { Not2, Oxr };

const char* kind_name(Kind kind);

struct PredicateInstance {
  Kind kind = Kind::Not2;
  int num_literals = 0;
  std::vector<std::pair<Predicate, int>> predicates;  // predicate, original id
};

/// Total or partial assignment indexed by literal; -1 marks unassigned.
using Assignment = std::vector<std::int8_t>;

inline constexpr std::int8_t kUnassigned = -1;

bool slot_is_fixed(const Slot& slot);
/// Truth value of a slot under an assignment; throws UnassignedVariableError
/// for an unassigned referenced literal.
bool slot_truth(const Slot& slot, const Assignment& x);
/// Distinct literal indices of the non-fixed slots, ascending.
std::vector<int> free_literals(const Predicate& pred);
std::vector<Slot> predicate_slots(const Predicate& pred);

bool evaluate_predicate(const Predicate& pred, const Assignment& x);

long long count_satisfied(const PredicateInstance& inst, const Assignment& x);
/// Exact satisfied fraction; throws EmptyInstanceError when no predicates.
Rational satisfied_fraction(const PredicateInstance& inst, const Assignment& x);

PredicateInstance parse_instance(std::istream& in);
PredicateInstance parse_instance_text(const std::string& text);
/// Inverse of parse for instances without fixed slots (bit-exact).
std::string serialize_instance(const PredicateInstance& inst);

/// Planted-satisfiable generator: each predicate is drawn uniformly over the
/// kind-legal shapes, then redrawn until the planted assignment satisfies
/// it. Deterministic per seed.
std::pair<PredicateInstance, Assignment> generate_satisfiable(Kind kind, int num_literals,
                                                              int num_predicates, std::uint64_t seed);

}  // namespace fracgb
