#include "fracgb/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fracgb/assign.hpp"
#include "fracgb/encode.hpp"
#include "fracgb/errors.hpp"
#include "fracgb/oracle.hpp"
#include "fracgb/tailor.hpp"

namespace fracgb {

bool PipelineReport::all_flags() const {
  return flag_two_fifths && flag_budget && flag_inequality && flag_pd_half && flag_pr_all &&
         flag_removed_all && flag_final_bound;
}

std::string PipelineReport::to_text() const {
  std::ostringstream out;
  const auto flag = [](bool b) { return b ? "true" : "false"; };
  out << "kind: " << kind_name(kind) << "\n";
  out << "prime: " << prime << "\n";
  out << "q: " << to_string(q) << "\n";
  out << "epsilon: " << to_string(epsilon) << "\n";
  out << "strategy: " << strategy_name(strategy) << "\n";
  out << "seed: " << seed << "\n";
  out << "literals_original: " << literals_original << "\n";
  out << "predicates_original: " << predicates_original << "\n";
  out << "literals_tailored: " << literals_tailored << "\n";
  out << "predicates_tailored: " << predicates_tailored << "\n";
  out << "removed_trivial: " << removed_trivial << "\n";
  out << "loner_rounds: " << loner_rounds << "\n";
  out << "loner_predicates: " << loner_predicates << "\n";
  out << "loner_literals: " << loner_literals << "\n";
  out << "fixed_literals: " << fixed_literals << "\n";
  out << "system_size: " << system_size << "\n";
  out << "ignored_vars: " << ignored_vars << "\n";
  out << "ignored_polys: " << ignored_polys << "\n";
  out << "predicates_surviving: " << predicates_surviving << "\n";
  out << "predicates_ignored: " << predicates_ignored << "\n";
  out << "satisfied_surviving: " << satisfied_surviving << "\n";
  out << "satisfied_ignored: " << satisfied_ignored << "\n";
  out << "satisfied_removed: " << satisfied_removed << "\n";
  out << "satisfied_tailored: " << satisfied_tailored << "\n";
  out << "satisfied_original: " << satisfied_original << "\n";
  out << "fraction_tailored: " << to_string(fraction_tailored) << "\n";
  out << "fraction_original: " << to_string(fraction_original) << "\n";
  out << "required_fraction: " << to_string(required_fraction) << "\n";
  out << "flag_two_fifths: " << flag(flag_two_fifths) << "\n";
  out << "flag_budget: " << flag(flag_budget) << "\n";
  out << "flag_inequality: " << flag(flag_inequality) << "\n";
  out << "flag_pd_half: " << flag(flag_pd_half) << "\n";
  out << "flag_pr_all: " << flag(flag_pr_all) << "\n";
  out << "flag_removed_all: " << flag(flag_removed_all) << "\n";
  out << "flag_final_bound: " << flag(flag_final_bound) << "\n";
  out << "assignment: ";
  for (std::int8_t v : assignment) out << static_cast<int>(v);
  out << "\n";
  return out.str();
}

namespace {

template <typename F>
auto stage(const char* name, F&& f) {
  try {
    return f();
  } catch (const ContradictionError& e) {
    throw ContradictionError(std::string(name) + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(std::string(name) + ": " + e.what());
  } catch (const Error& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

}  // namespace

PipelineReport run_pipeline(const PredicateInstance& inst, const PipelineOptions& options) {
  if (options.q < Rational(0, 1) || options.q > Rational(1, 1))
    throw InputError("q must lie in [0, 1]");
  if (inst.predicates.empty()) throw EmptyInstanceError("instance has no predicates");

  PipelineReport rep;
  rep.kind = inst.kind;
  rep.prime = options.prime;
  rep.q = options.q;
  rep.strategy = options.strategy;
  rep.seed = options.seed;
  rep.literals_original = inst.num_literals;
  rep.predicates_original = static_cast<long long>(inst.predicates.size());

  const Rational threshold = inst.kind == Kind::Not2 ? Rational(7, 10) : Rational(4, 5);
  rep.epsilon = options.q - threshold;
  const Rational base = inst.kind == Kind::Not2 ? Rational(5, 8) : Rational(6, 8);
  rep.required_fraction = rep.epsilon >= Rational(0, 1)
                              ? base + Rational(5, 4) * rep.epsilon
                              : Rational(0, 1);

  if (options.oracle_precheck && inst.num_literals <= kMaxEnumerationVars) {
    stage("precheck", [&] {
      if (!is_satisfiable(inst))
        throw ContradictionError("instance is not satisfiable (brute-force check)");
      return 0;
    });
  }

  // Stage 1: tailoring.
  const TailorResult tailored = stage("tailor", [&] { return tailor(inst); });
  const std::vector<int> remaining = remaining_literals(tailored.instance);
  rep.literals_tailored = static_cast<long long>(remaining.size());
  rep.predicates_tailored = static_cast<long long>(tailored.instance.predicates.size());
  rep.removed_trivial = static_cast<long long>(tailored.record.removed_trivial.size());
  rep.loner_rounds = static_cast<long long>(tailored.record.loner_rounds.size());
  for (const LonerRound& round : tailored.record.loner_rounds) {
    rep.loner_predicates += static_cast<long long>(round.predicate_ids.size());
    rep.loner_literals += static_cast<long long>(round.literals.size());
  }
  rep.fixed_literals = static_cast<long long>(tailored.record.fixed_literals.size());
  rep.flag_two_fifths = check_two_fifths(tailored.instance);

  // Stage 2: encoding and the fractional Groebner solve.
  const PolynomialSystem sys = stage("encode", [&] { return encode(tailored.instance, options.prime); });
  rep.system_size = static_cast<long long>(sys.size());

  const LexOrder ord = LexOrder::natural(sys.num_vars);
  const FractionalSolution sol = stage(
      "solve", [&] { return solve_fractional(sys, options.q, options.strategy, options.seed, ord); });
  rep.ignored_vars = static_cast<long long>(sol.ignored_vars.size());
  rep.ignored_polys = sol.ignored_polys;
  rep.predicates_surviving = static_cast<long long>(sol.surviving_ids.size());
  rep.predicates_ignored = static_cast<long long>(sol.ignored_ids.size());
  rep.flag_budget =
      Rational(sol.ignored_polys, 1) <= (Rational(1, 1) - options.q) * Rational(rep.system_size, 1);
  rep.flag_inequality = check_budget_inequality(sol, rep.predicates_tailored, inst.kind);

  const std::map<int, int> point = stage("extract", [&] { return extract_point(sol, ord); });

  // Stage 3: seed the partial assignment with the extracted values; ignored
  // variables stay undecided.
  PartialAssignment partial;
  for (int lit : remaining) {
    const int var = sys.var_of_literal.at(lit);
    if (sol.ignored_vars.contains(var)) {
      partial.undecided.insert(lit);
    } else {
      partial.values[lit] = point.at(var);
    }
  }

  // Derandomize over the ignored predicates plus any surviving predicates
  // that still reference undecided literals. The latter arise only from
  // identically-zero predicate polynomials and are satisfied regardless of
  // the coin flips; the assertion pins that down.
  std::set<int> pd_ids(sol.ignored_ids.begin(), sol.ignored_ids.end());
  std::vector<Predicate> stage3_preds;
  for (const auto& [pred, id] : tailored.instance.predicates) {
    if (pd_ids.contains(id)) {
      stage3_preds.push_back(pred);
      continue;
    }
    const std::vector<int> free = free_literals(pred);
    const bool touches_undecided = std::any_of(free.begin(), free.end(), [&](int lit) {
      return partial.undecided.contains(lit);
    });
    if (touches_undecided) {
      if (satisfaction_probability(pred, partial) != Rational(1, 1))
        throw InternalError("surviving predicate " + std::to_string(id) +
                            " depends on an undecided literal");
      stage3_preds.push_back(pred);
    }
  }
  const PartialAssignment total = stage(
      "derandomize", [&] { return derandomize(stage3_preds, std::move(partial)); });

  // Reassemble the full assignment on the original literals.
  Assignment on_tailored(inst.num_literals, kUnassigned);
  for (const auto& [lit, value] : total.values) on_tailored[lit] = static_cast<std::int8_t>(value);
  const Assignment full =
      stage("reinsert", [&] { return reinsert_loners(on_tailored, tailored.record, inst); });
  rep.assignment = full;

  // Per-bucket accounting, all on the original predicate forms.
  for (const auto& [pred, id] : tailored.instance.predicates) {
    const bool sat = evaluate_predicate(inst.predicates[id].first, full);
    if (pd_ids.contains(id)) {
      rep.satisfied_ignored += sat ? 1 : 0;
    } else {
      rep.satisfied_surviving += sat ? 1 : 0;
    }
  }
  rep.satisfied_tailored = rep.satisfied_surviving + rep.satisfied_ignored;

  std::set<int> kept_ids;
  for (const auto& [pred, id] : tailored.instance.predicates) kept_ids.insert(id);
  long long removed_total = 0;
  for (const auto& [pred, id] : inst.predicates) {
    if (kept_ids.contains(id)) continue;
    ++removed_total;
    rep.satisfied_removed += evaluate_predicate(pred, full) ? 1 : 0;
  }
  rep.satisfied_original = count_satisfied(inst, full);

  rep.fraction_original = Rational(rep.satisfied_original, rep.predicates_original);
  rep.fraction_tailored = rep.predicates_tailored == 0
                              ? Rational(1, 1)
                              : Rational(rep.satisfied_tailored, rep.predicates_tailored);

  rep.flag_pr_all = rep.satisfied_surviving == rep.predicates_surviving;
  rep.flag_removed_all = rep.satisfied_removed == removed_total;
  rep.flag_pd_half = 2 * rep.satisfied_ignored >= rep.predicates_ignored;

  const long long floor_guarantee =
      rep.predicates_surviving + (rep.predicates_ignored + 1) / 2 + removed_total;
  rep.flag_final_bound = rep.satisfied_original >= floor_guarantee &&
                         rep.fraction_tailored >= rep.required_fraction &&
                         rep.fraction_original >= rep.required_fraction;
  return rep;
}

}  // namespace fracgb
