#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fracgb/instance.hpp"

namespace fracgb {

/// Case labels of the simplification machine. N3a never fires: a predicate
/// matching its description always contains two identical signed literals
/// and is classified as N2a first.
enum class CaseCode { N1, N2a, N2b, N2c, N2d, N3a, N3b, N3c, N3d, Oxr1, Oxr2 };

const char* case_code_name(CaseCode code);

struct LonerRound {
  std::vector<int> literals;       // removed loner literals, ascending
  std::vector<int> predicate_ids;  // original ids removed this round, ascending
};

/// Replayable audit trail of Stage 1.
struct TailoringRecord {
  std::map<int, int> fixed_literals;                        // permanently fixed values
  std::vector<std::pair<int, CaseCode>> removed_trivial;    // ids removed by the case machine
  std::vector<LonerRound> loner_rounds;
  std::vector<std::pair<int, CaseCode>> case_log;
  std::string to_text() const;
};

struct TailorResult {
  PredicateInstance instance;  // keeps the original literal indexing
  TailoringRecord record;
};

/// Stage 1 for Max Not-2: the case machine runs over the predicates in
/// ascending id order with substitutions applied immediately, repeated to a
/// fixpoint, followed by iterated loner-literal rounds. Throws
/// ContradictionError when the input's satisfiability promise fails.
TailorResult tailor_not2(const PredicateInstance& inst);

/// Stage 1 for Max OXR (symmetric-position cases, then loner rounds).
TailorResult tailor_oxr(const PredicateInstance& inst);

TailorResult tailor(const PredicateInstance& inst);

/// Extends an assignment that is total on the tailored literals to the full
/// original literal set: loner literals are filled round by round in reverse
/// removal order so that every loner-round predicate is satisfied, then the
/// permanently fixed values are merged.
Assignment reinsert_loners(const Assignment& partial, const TailoringRecord& record,
                           const PredicateInstance& original);

/// Literals occurring free in at least one predicate, ascending.
std::vector<int> remaining_literals(const PredicateInstance& inst);

/// 5|P| >= 2(|P| + |L|) with |L| the number of occurring literals.
bool check_two_fifths(const PredicateInstance& inst);

/// Structural scan: multi-occurrence Not-2 predicates have exactly the two
/// permitted forms; OXR symmetric positions hold distinct literals.
bool holds_property1(const PredicateInstance& inst);

/// Structural scan: every occurring literal occurs in at least 2 predicates.
bool holds_property2(const PredicateInstance& inst);

}  // namespace fracgb
