#include "fracgb/tailor.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "fracgb/errors.hpp"

namespace fracgb {

const char* case_code_name(CaseCode code) {
  switch (code) {
    case CaseCode::N1: return "1";
    case CaseCode::N2a: return "2a";
    case CaseCode::N2b: return "2b";
    case CaseCode::N2c: return "2c";
    case CaseCode::N2d: return "2d";
    case CaseCode::N3a: return "3a";
    case CaseCode::N3b: return "3b";
    case CaseCode::N3c: return "3c";
    case CaseCode::N3d: return "3d";
    case CaseCode::Oxr1: return "OXR-1";
    case CaseCode::Oxr2: return "OXR-2";
  }
  return "?";
}

std::string TailoringRecord::to_text() const {
  std::ostringstream out;
  for (const auto& [id, code] : case_log) out << "id=" << id << " case=" << case_code_name(code) << "\n";
  for (const auto& [lit, value] : fixed_literals) out << "fixed l" << (lit + 1) << "=" << value << "\n";
  for (std::size_t r = 0; r < loner_rounds.size(); ++r) {
    out << "loner round " << (r + 1) << ": literals";
    for (int lit : loner_rounds[r].literals) out << " l" << (lit + 1);
    out << "; predicates";
    for (int id : loner_rounds[r].predicate_ids) out << " " << id;
    out << "\n";
  }
  return out.str();
}

namespace {

struct Working {
  PredicateInstance inst;  // predicates mutate in place; removed ones flagged
  std::vector<bool> alive;
  TailoringRecord rec;

  explicit Working(const PredicateInstance& input) : inst(input), alive(input.predicates.size(), true) {}

  Predicate& pred(std::size_t k) { return inst.predicates[k].first; }
  int id(std::size_t k) const { return inst.predicates[k].second; }

  void remove(std::size_t k, CaseCode code) {
    alive[k] = false;
    rec.removed_trivial.emplace_back(id(k), code);
    rec.case_log.emplace_back(id(k), code);
  }

  /// Permanently fixes a literal and substitutes the resulting slot truth
  /// into every predicate. `value` is the variable's truth value.
  void fix_literal(int literal, int value) {
    auto [it, inserted] = rec.fixed_literals.emplace(literal, value);
    if (!inserted && it->second != value)
      throw ContradictionError("literal l" + std::to_string(literal + 1) +
                               " forced to both truth values");
    for (std::size_t k = 0; k < alive.size(); ++k) {
      for (Slot& slot : slots_of(pred(k))) {
        if (const auto* sl = std::get_if<SignedLiteral>(&slot); sl != nullptr && sl->literal == literal) {
          slot = FixedTerm{sl->negated ? 1 - value : value};
        }
      }
    }
  }

  static std::vector<std::reference_wrapper<Slot>> slots_of(Predicate& pred) {
    std::vector<std::reference_wrapper<Slot>> out;
    if (auto* n2 = std::get_if<Not2Predicate>(&pred)) {
      for (Slot& s : n2->slots) out.emplace_back(s);
    } else {
      auto& oxr = std::get<OxrPredicate>(pred);
      out.emplace_back(oxr.special);
      out.emplace_back(oxr.sym1);
      out.emplace_back(oxr.sym2);
    }
    return out;
  }

  /// A predicate none of whose free-literal settings satisfies it signals a
  /// violated satisfiability promise.
  void check_satisfiable_under_fixed(std::size_t k) {
    const Predicate& p = inst.predicates[k].first;
    const std::vector<int> free = free_literals(p);
    Assignment x(inst.num_literals, kUnassigned);
    const std::size_t combos = std::size_t{1} << free.size();
    for (std::size_t bits = 0; bits < combos; ++bits) {
      for (std::size_t i = 0; i < free.size(); ++i)
        x[free[i]] = static_cast<std::int8_t>((bits >> i) & 1);
      if (evaluate_predicate(p, x)) return;
    }
    throw ContradictionError("predicate " + std::to_string(id(k)) +
                             " became unsatisfiable under permanently fixed values");
  }

  PredicateInstance finish() {
    PredicateInstance out;
    out.kind = inst.kind;
    out.num_literals = inst.num_literals;
    for (std::size_t k = 0; k < alive.size(); ++k) {
      if (alive[k]) out.predicates.push_back(inst.predicates[k]);
    }
    return out;
  }
};

/// Value for the underlying variable making a signed literal false.
int value_making_false(const SignedLiteral& sl) { return sl.negated ? 1 : 0; }
/// Value for the underlying variable making a signed literal true.
int value_making_true(const SignedLiteral& sl) { return sl.negated ? 0 : 1; }

void run_not2_case_machine(Working& w) {
  bool fired = true;
  while (fired) {
    fired = false;
    for (std::size_t k = 0; k < w.alive.size(); ++k) {
      if (!w.alive[k]) continue;
      w.check_satisfiable_under_fixed(k);
      const auto& slots = std::get<Not2Predicate>(w.pred(k)).slots;

      // Locate a literal with more than one signed occurrence.
      std::vector<const SignedLiteral*> occ;
      int target = -1;
      for (const Slot& s : slots) {
        const auto* sl = std::get_if<SignedLiteral>(&s);
        if (sl == nullptr) continue;
        for (const Slot& t : slots) {
          const auto* tl = std::get_if<SignedLiteral>(&t);
          if (tl != nullptr && tl != sl && tl->literal == sl->literal) {
            target = sl->literal;
            break;
          }
        }
        if (target >= 0) break;
      }
      if (target < 0) continue;
      std::optional<Slot> third;
      for (const Slot& s : slots) {
        const auto* sl = std::get_if<SignedLiteral>(&s);
        if (sl != nullptr && sl->literal == target) {
          occ.push_back(sl);
        } else {
          third = s;
        }
      }

      if (occ.size() == 3) {
        if (occ[0]->negated == occ[1]->negated && occ[1]->negated == occ[2]->negated) {
          // Case 1: three identical signed literals; any sum is 0 or 3.
          w.remove(k, CaseCode::N1);
          fired = true;
          continue;
        }
        // Two identical plus the opposing form: fall through to case 2a with
        // the majority form as the pair.
        const bool majority_negated =
            (occ[0]->negated == occ[1]->negated) ? occ[0]->negated : occ[2]->negated;
        const SignedLiteral pair{target, majority_negated};
        w.remove(k, CaseCode::N2a);
        w.fix_literal(target, value_making_false(pair));
        fired = true;
        continue;
      }

      // Exactly two occurrences of the target literal. The third slot, when
      // present, is a fixed term or a signed literal of a different index
      // (a third occurrence of the target would have landed above).
      const bool identical = occ[0]->negated == occ[1]->negated;
      if (identical) {
        const SignedLiteral pair = *occ[0];
        if (!third.has_value()) {
          // Case 2b: the pair alone must contribute 0 true literals.
          w.remove(k, CaseCode::N2b);
          w.fix_literal(target, value_making_false(pair));
          fired = true;
        }
        // Case 2c (distinct unfixed third literal) and case 2d (fixed third
        // term): keep the predicate.
      } else {
        // Opposing pair: its two terms always sum to 1.
        if (!third.has_value()) {
          // Case 3d: the sum is constantly 1; trivially satisfied.
          w.remove(k, CaseCode::N3d);
          fired = true;
        } else if (const auto* tl = std::get_if<SignedLiteral>(&*third)) {
          // Case 3b: the third term must be 0 or the total would be 2.
          const int forced = value_making_false(*tl);
          w.remove(k, CaseCode::N3b);
          w.fix_literal(tl->literal, forced);
          fired = true;
        } else {
          // Case 3c: the fixed third term must have value 0, else the
          // satisfiability check above would have fired.
          w.remove(k, CaseCode::N3c);
          fired = true;
        }
      }
    }
  }

  // Log the keep-cases visible at the fixpoint.
  for (std::size_t k = 0; k < w.alive.size(); ++k) {
    if (!w.alive[k]) continue;
    const auto& slots = std::get<Not2Predicate>(w.pred(k)).slots;
    for (std::size_t a = 0; a < slots.size(); ++a) {
      const auto* sa = std::get_if<SignedLiteral>(&slots[a]);
      if (sa == nullptr) continue;
      bool paired = false;
      for (std::size_t b = 0; b < slots.size(); ++b) {
        const auto* sb = std::get_if<SignedLiteral>(&slots[b]);
        if (a != b && sb != nullptr && sb->literal == sa->literal) paired = true;
      }
      if (paired) {
        bool fixed_third = false;
        for (const Slot& s : slots) {
          if (slot_is_fixed(s)) fixed_third = true;
        }
        w.rec.case_log.emplace_back(w.id(k), fixed_third ? CaseCode::N2d : CaseCode::N2c);
        break;
      }
    }
  }
}

void run_oxr_case_machine(Working& w) {
  bool fired = true;
  while (fired) {
    fired = false;
    for (std::size_t k = 0; k < w.alive.size(); ++k) {
      if (!w.alive[k]) continue;
      w.check_satisfiable_under_fixed(k);
      const auto& oxr = std::get<OxrPredicate>(w.pred(k));

      // Determine whether the xor over the symmetric positions is constant.
      std::optional<bool> xor_constant;
      const auto* a = std::get_if<SignedLiteral>(&oxr.sym1);
      const auto* b = std::get_if<SignedLiteral>(&oxr.sym2);
      if (a != nullptr && b != nullptr && a->literal == b->literal) {
        xor_constant = a->negated != b->negated;
      } else if (a == nullptr && b == nullptr) {
        xor_constant = std::get<FixedTerm>(oxr.sym1).value != std::get<FixedTerm>(oxr.sym2).value;
      }
      if (!xor_constant.has_value()) continue;

      if (*xor_constant) {
        // Case 2: the xor holds under every assignment.
        w.remove(k, CaseCode::Oxr2);
        fired = true;
        continue;
      }
      // Case 1: the xor is identically false, so the special-position
      // signed literal must be true in every satisfying assignment.
      if (const auto* sp = std::get_if<SignedLiteral>(&oxr.special)) {
        const SignedLiteral special = *sp;
        w.remove(k, CaseCode::Oxr1);
        w.fix_literal(special.literal, value_making_true(special));
        fired = true;
      } else {
        // Fixed special: value 1 keeps the predicate satisfied; value 0
        // would have tripped the satisfiability check above.
        w.remove(k, CaseCode::Oxr1);
        fired = true;
      }
    }
  }
}

void run_loner_rounds(Working& w) {
  while (true) {
    std::map<int, int> occurrences;
    for (std::size_t k = 0; k < w.alive.size(); ++k) {
      if (!w.alive[k]) continue;
      for (int lit : free_literals(w.pred(k))) ++occurrences[lit];
    }
    LonerRound round;
    for (const auto& [lit, count] : occurrences) {
      if (count <= 1) round.literals.push_back(lit);
    }
    if (round.literals.empty()) break;

    for (std::size_t k = 0; k < w.alive.size(); ++k) {
      if (!w.alive[k]) continue;
      const std::vector<int> free = free_literals(w.pred(k));
      const bool has_loner = std::any_of(free.begin(), free.end(), [&](int lit) {
        return std::binary_search(round.literals.begin(), round.literals.end(), lit);
      });
      if (has_loner) {
        round.predicate_ids.push_back(w.id(k));
        w.alive[k] = false;
      }
    }
    w.rec.loner_rounds.push_back(std::move(round));
  }
}

TailorResult finish_tailoring(Working& w) {
  TailorResult result{w.finish(), std::move(w.rec)};
  if (!check_two_fifths(result.instance))
    throw InternalError("tailored instance violates the two-fifths bound");
  return result;
}

}  // namespace

TailorResult tailor_not2(const PredicateInstance& inst) {
  if (inst.kind != Kind::Not2) throw InputError("tailor_not2 requires a not2 instance");
  Working w(inst);
  run_not2_case_machine(w);
  run_loner_rounds(w);
  return finish_tailoring(w);
}

TailorResult tailor_oxr(const PredicateInstance& inst) {
  if (inst.kind != Kind::Oxr) throw InputError("tailor_oxr requires an oxr instance");
  Working w(inst);
  run_oxr_case_machine(w);
  run_loner_rounds(w);
  return finish_tailoring(w);
}

TailorResult tailor(const PredicateInstance& inst) {
  return inst.kind == Kind::Not2 ? tailor_not2(inst) : tailor_oxr(inst);
}

Assignment reinsert_loners(const Assignment& partial, const TailoringRecord& record,
                           const PredicateInstance& original) {
  Assignment x = partial;
  x.resize(original.num_literals, kUnassigned);
  for (const auto& [lit, value] : record.fixed_literals) {
    if (x[lit] != kUnassigned && x[lit] != value)
      throw InternalError("partial assignment conflicts with a permanently fixed literal");
    x[lit] = static_cast<std::int8_t>(value);
  }

  // Literals in no loner round and no surviving predicate are unconstrained
  // (every predicate mentioning them was removed with its satisfaction
  // arranged elsewhere); default them before the rounds run so that round
  // predicates have all non-loner literals decided.
  std::set<int> round_literals;
  for (const LonerRound& round : record.loner_rounds) {
    round_literals.insert(round.literals.begin(), round.literals.end());
  }
  for (int lit = 0; lit < original.num_literals; ++lit) {
    if (x[lit] == kUnassigned && !round_literals.contains(lit)) x[lit] = 0;
  }

  for (auto round = record.loner_rounds.rbegin(); round != record.loner_rounds.rend(); ++round) {
    for (int lit : round->literals) {
      // Each loner occurs in at most one predicate, necessarily removed in
      // its own round. The last loner of a predicate gets the satisfying
      // value; earlier ones may take any value.
      const Predicate* home = nullptr;
      for (int id : round->predicate_ids) {
        const auto& pred = original.predicates[id].first;
        const std::vector<int> free = free_literals(pred);
        if (std::binary_search(free.begin(), free.end(), lit)) {
          home = &pred;
          break;
        }
      }
      if (home == nullptr) {
        x[lit] = 0;
        continue;
      }
      bool last_unassigned = true;
      for (int other : free_literals(*home)) {
        if (other != lit && x[other] == kUnassigned) last_unassigned = false;
      }
      if (!last_unassigned) {
        x[lit] = 0;
        continue;
      }
      bool satisfied = false;
      for (int v = 0; v <= 1 && !satisfied; ++v) {
        x[lit] = static_cast<std::int8_t>(v);
        satisfied = evaluate_predicate(*home, x);
      }
      if (!satisfied)
        throw InternalError("no satisfying value exists for loner literal l" + std::to_string(lit + 1));
    }
  }

  for (int lit = 0; lit < original.num_literals; ++lit) {
    if (x[lit] == kUnassigned)
      throw InternalError("assignment incomplete after loner reinsertion at l" + std::to_string(lit + 1));
  }
  return x;
}

std::vector<int> remaining_literals(const PredicateInstance& inst) {
  std::set<int> lits;
  for (const auto& [pred, id] : inst.predicates) {
    for (int lit : free_literals(pred)) lits.insert(lit);
  }
  return {lits.begin(), lits.end()};
}

bool check_two_fifths(const PredicateInstance& inst) {
  const long long p = static_cast<long long>(inst.predicates.size());
  const long long l = static_cast<long long>(remaining_literals(inst).size());
  return 5 * p >= 2 * (p + l);
}

bool holds_property1(const PredicateInstance& inst) {
  for (const auto& [pred, id] : inst.predicates) {
    if (const auto* n2 = std::get_if<Not2Predicate>(&pred)) {
      std::map<int, std::vector<bool>> occ;  // literal -> negation flags
      for (const Slot& s : n2->slots) {
        if (const auto* sl = std::get_if<SignedLiteral>(&s)) occ[sl->literal].push_back(sl->negated);
      }
      for (const auto& [lit, forms] : occ) {
        if (forms.size() == 1) continue;
        if (forms.size() != 2 || forms[0] != forms[1]) return false;
        // The pair needs a companion slot: a distinct literal or fixed term.
        if (n2->slots.size() != 3) return false;
      }
    } else {
      const auto& oxr = std::get<OxrPredicate>(pred);
      const auto* a = std::get_if<SignedLiteral>(&oxr.sym1);
      const auto* b = std::get_if<SignedLiteral>(&oxr.sym2);
      if (a != nullptr && b != nullptr && a->literal == b->literal) return false;
      if (a == nullptr && b == nullptr) return false;  // constant xor survived
    }
  }
  return true;
}

bool holds_property2(const PredicateInstance& inst) {
  std::map<int, int> occurrences;
  for (const auto& [pred, id] : inst.predicates) {
    for (int lit : free_literals(pred)) ++occurrences[lit];
  }
  return std::all_of(occurrences.begin(), occurrences.end(),
                     [](const auto& kv) { return kv.second >= 2; });
}

}  // namespace fracgb
