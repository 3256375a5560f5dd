// Acceptance suite: runs every quantitative guarantee of the pipeline at
// desk scale and prints one pass/fail line per criterion. Exit code 0 only
// if every criterion holds. All comparisons are exact; there are no
// tolerances anywhere.

#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "fracgb/assign.hpp"
#include "fracgb/encode.hpp"
#include "fracgb/groebner.hpp"
#include "fracgb/oracle.hpp"
#include "fracgb/pipeline.hpp"
#include "fracgb/solver.hpp"
#include "fracgb/tailor.hpp"

using namespace fracgb;

namespace {

constexpr std::uint32_t kPrime = 32003;

struct Entry {
  PredicateInstance instance;
  TailorResult tailored;
  PolynomialSystem system;
};

std::vector<Entry> build_corpus(Kind kind, int count, int min_n, int max_n, std::uint64_t seed0) {
  std::vector<Entry> corpus;
  corpus.reserve(count);
  std::mt19937_64 seeds(seed0);
  for (int i = 0; i < count; ++i) {
    const int n = min_n + i % (max_n - min_n + 1);
    const int m = n + static_cast<int>(seeds() % (2 * n));
    auto [inst, planted] = generate_satisfiable(kind, n, m, seeds());
    Entry e{std::move(inst), {}, {}};
    e.tailored = tailor(e.instance);
    e.system = encode(e.tailored.instance, kPrime);
    corpus.push_back(std::move(e));
  }
  return corpus;
}

struct SweepRun {
  const Entry* entry;
  Kind kind;
  Rational q;
  Strategy strategy;
  std::uint64_t seed;
  FractionalSolution solution;
  PipelineReport report;
};

// ---------------------------------------------------------------------------

bool criterion1_buchberger_certificate(const std::vector<Entry>& not2, const std::vector<Entry>& oxr) {
  long long systems = 0;
  for (const std::vector<Entry>* corpus : {&not2, &oxr}) {
    for (const Entry& e : *corpus) {
      if (e.system.num_vars > 6) continue;
      ++systems;
      const LexOrder& ord = LexOrder::natural(e.system.num_vars);
      const std::vector<Polynomial> inputs = e.system.all_polys();
      const GroebnerBasis basis = buchberger(inputs, ord);
      const auto& g = basis.generators;
      for (std::size_t i = 0; i < g.size(); ++i) {
        if (g[i].leading_term(ord).second.value != 1) return false;
        for (const auto& [mono, coeff] : g[i].terms()) {
          for (std::size_t j = 0; j < g.size(); ++j) {
            if (i != j && g[j].leading_term(ord).first.divides(mono)) return false;
          }
        }
        for (std::size_t j = i + 1; j < g.size(); ++j) {
          if (!normal_form(s_polynomial(g[i], g[j], ord), g, ord).is_zero()) return false;
        }
      }
      for (const Polynomial& f : inputs) {
        if (!ideal_member(f, basis)) return false;
      }
      if (buchberger(g, ord).generators != g) return false;
    }
  }
  return systems >= 200;
}

bool criterion2_variety_equivalence(const std::vector<Entry>& not2, const std::vector<Entry>& oxr) {
  for (const std::vector<Entry>* corpus : {&not2, &oxr}) {
    for (const Entry& e : *corpus) {
      if (!check_variety_equivalence(e.system, e.tailored.instance)) return false;
    }
  }
  return true;
}

bool criterion3_tailoring_soundness(const std::vector<Entry>& not2, const std::vector<Entry>& oxr) {
  std::mt19937_64 rng(7777);
  for (const std::vector<Entry>* corpus : {&not2, &oxr}) {
    for (const Entry& e : *corpus) {
      const PredicateInstance& tailored = e.tailored.instance;
      if (!tailored.predicates.empty() && brute_max_fraction(tailored).fraction != Rational(1, 1))
        return false;
      if (!holds_property1(tailored) || !holds_property2(tailored)) return false;
      if (!check_two_fifths(tailored)) return false;

      // 100% recovery of removed predicates under 20 random satisfying
      // assignments of the tailored instance.
      std::set<int> kept;
      for (const auto& [pred, id] : tailored.predicates) kept.insert(id);
      const std::vector<std::uint32_t> variety =
          brute_variety(e.system.all_polys(), e.system.num_vars);
      if (variety.empty()) return false;
      for (int round = 0; round < 20; ++round) {
        const std::uint32_t mask = variety[rng() % variety.size()];
        Assignment partial(e.instance.num_literals, kUnassigned);
        for (int v = 0; v < e.system.num_vars; ++v)
          partial[e.system.literal_of_var[v]] = static_cast<std::int8_t>((mask >> v) & 1);
        const Assignment full = reinsert_loners(partial, e.tailored.record, e.instance);
        for (const auto& [pred, id] : e.instance.predicates) {
          if (!kept.contains(id) && !evaluate_predicate(pred, full)) return false;
        }
      }
    }
  }
  return true;
}

bool criterion4_degree_bounds(const std::vector<Entry>& not2, const std::vector<Entry>& oxr) {
  for (const Entry& e : not2) {
    for (const auto& [poly, id] : e.system.predicate_polys) {
      if (poly.total_degree() > 3 || poly.support().size() > 3) return false;
    }
  }
  for (const Entry& e : oxr) {
    for (const auto& [poly, id] : e.system.predicate_polys) {
      if (poly.total_degree() > 2 || poly.support().size() > 3) return false;
    }
  }
  return true;
}

bool criterion5_budget_and_inequality(const std::vector<SweepRun>& sweep) {
  for (const SweepRun& run : sweep) {
    const Rational touched(run.solution.ignored_polys, 1);
    const Rational budget =
        (Rational(1, 1) - run.q) * Rational(run.solution.total_polys, 1);
    if (touched > budget) return false;
    const long long total =
        static_cast<long long>(run.entry->tailored.instance.predicates.size());
    if (!check_budget_inequality(run.solution, total, run.kind)) return false;
  }
  return true;
}

bool criterion6_extraction(const std::vector<SweepRun>& sweep) {
  for (const SweepRun& run : sweep) {
    const Entry& e = *run.entry;
    const LexOrder ord = LexOrder::natural(e.system.num_vars);
    const std::map<int, int> point = extract_point(run.solution, ord);

    std::map<int, std::uint32_t> fp_point;
    for (const auto& [v, value] : point) fp_point[v] = static_cast<std::uint32_t>(value);
    for (const Polynomial& poly : run.solution.surviving) {
      if (!poly.evaluate(fp_point).is_zero()) return false;
    }

    // Pulled back, the point satisfies every surviving predicate whose
    // literals it decides; the rest have identically-zero polynomials and
    // are satisfied under any completion of the assignment.
    Assignment x(e.instance.num_literals, kUnassigned);
    for (const auto& [v, value] : point)
      x[e.system.literal_of_var[v]] = static_cast<std::int8_t>(value);
    const std::set<int> pr(run.solution.surviving_ids.begin(), run.solution.surviving_ids.end());
    for (const auto& [pred, id] : e.tailored.instance.predicates) {
      if (!pr.contains(id)) continue;
      bool decided = true;
      for (int lit : free_literals(pred)) decided = decided && x[lit] != kUnassigned;
      if (decided) {
        if (!evaluate_predicate(pred, x)) return false;
      } else {
        Assignment probe = x;
        for (int lit : free_literals(pred)) {
          if (probe[lit] == kUnassigned) probe[lit] = 0;
        }
        Assignment probe1 = x;
        for (int lit : free_literals(pred)) {
          if (probe1[lit] == kUnassigned) probe1[lit] = 1;
        }
        if (!evaluate_predicate(pred, probe) || !evaluate_predicate(pred, probe1)) return false;
      }
    }
  }
  return true;
}

// Criterion 7 helpers: the admissible shape space over three abstract
// literals, every decided/undecided pattern, compared against a local
// enumeration oracle.

std::vector<Slot> slot_alphabet() {
  std::vector<Slot> slots;
  for (int lit = 0; lit < 3; ++lit) {
    slots.push_back(SignedLiteral{lit, false});
    slots.push_back(SignedLiteral{lit, true});
  }
  slots.push_back(FixedTerm{0});
  slots.push_back(FixedTerm{1});
  return slots;
}

bool not2_shape_admissible(const std::vector<Slot>& slots) {
  std::map<int, std::vector<bool>> occ;
  for (const Slot& s : slots) {
    if (const auto* sl = std::get_if<SignedLiteral>(&s)) occ[sl->literal].push_back(sl->negated);
  }
  if (occ.empty()) return false;  // needs at least one free literal
  for (const auto& [lit, forms] : occ) {
    if (forms.size() == 1) continue;
    if (forms.size() != 2 || forms[0] != forms[1]) return false;
    if (slots.size() != 3) return false;  // a pair needs a companion slot
  }
  return true;
}

bool oxr_shape_admissible(const OxrPredicate& p) {
  const auto* a = std::get_if<SignedLiteral>(&p.sym1);
  const auto* b = std::get_if<SignedLiteral>(&p.sym2);
  if (a == nullptr && b == nullptr) return false;  // constant xor never survives
  if (a != nullptr && b != nullptr && a->literal == b->literal) return false;
  return !free_literals(Predicate{p}).empty();
}

Rational enumeration_oracle(const Predicate& pred, const PartialAssignment& partial) {
  std::vector<int> undecided;
  for (int lit : free_literals(pred)) {
    if (partial.undecided.contains(lit)) undecided.push_back(lit);
  }
  Assignment x(3, kUnassigned);
  for (const auto& [lit, v] : partial.values) {
    if (lit < 3) x[lit] = static_cast<std::int8_t>(v);
  }
  long long hits = 0;
  for (std::size_t bits = 0; bits < (std::size_t{1} << undecided.size()); ++bits) {
    for (std::size_t i = 0; i < undecided.size(); ++i)
      x[undecided[i]] = static_cast<std::int8_t>((bits >> i) & 1);
    hits += evaluate_predicate(pred, x) ? 1 : 0;
  }
  return Rational(hits, 1LL << undecided.size());
}

bool check_all_patterns(const Predicate& pred) {
  const std::vector<int> free = free_literals(pred);
  std::vector<int> choice(free.size(), 0);  // 0 undecided, 1 -> false, 2 -> true
  while (true) {
    bool any_undecided = false;
    PartialAssignment partial;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (choice[i] == 0) {
        partial.undecided.insert(free[i]);
        any_undecided = true;
      } else {
        partial.values[free[i]] = choice[i] - 1;
      }
    }
    if (any_undecided) {
      const Rational prob = satisfaction_probability(pred, partial);
      if (prob != enumeration_oracle(pred, partial)) return false;
      if (prob < Rational(1, 2)) return false;
    }
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
  return true;
}

std::map<int, Rational> margin_distribution(const Predicate& pred, const PartialAssignment& partial) {
  std::vector<int> undecided;
  for (int lit : free_literals(pred)) {
    if (partial.undecided.contains(lit)) undecided.push_back(lit);
  }
  Assignment x(3, kUnassigned);
  for (const auto& [lit, v] : partial.values) x[lit] = static_cast<std::int8_t>(v);
  std::map<int, Rational> dist;
  const long long total = 1LL << undecided.size();
  for (std::size_t bits = 0; bits < static_cast<std::size_t>(total); ++bits) {
    for (std::size_t i = 0; i < undecided.size(); ++i)
      x[undecided[i]] = static_cast<std::int8_t>((bits >> i) & 1);
    int margin = 0;
    for (const Slot& slot : predicate_slots(pred)) {
      const auto* sl = std::get_if<SignedLiteral>(&slot);
      if (sl != nullptr && partial.undecided.contains(sl->literal) && slot_truth(slot, x)) ++margin;
    }
    auto [it, inserted] = dist.emplace(margin, Rational(1, total));
    if (!inserted) it->second += Rational(1, total);
  }
  return dist;
}

bool criterion7_probability_oracle() {
  const std::vector<Slot> alphabet = slot_alphabet();
  long long shapes = 0;

  // Every admissible Not-2 shape of arity 1..3.
  for (std::size_t arity = 1; arity <= 3; ++arity) {
    std::vector<std::size_t> idx(arity, 0);
    while (true) {
      std::vector<Slot> slots;
      for (std::size_t i : idx) slots.push_back(alphabet[i]);
      if (not2_shape_admissible(slots)) {
        ++shapes;
        if (!check_all_patterns(Not2Predicate{slots})) return false;
      }
      std::size_t k = 0;
      while (k < arity && idx[k] == alphabet.size() - 1) idx[k++] = 0;
      if (k == arity) break;
      ++idx[k];
    }
  }

  // Every admissible OXR shape.
  for (const Slot& sp : alphabet) {
    for (const Slot& s1 : alphabet) {
      for (const Slot& s2 : alphabet) {
        const OxrPredicate p{sp, s1, s2};
        if (oxr_shape_admissible(p)) {
          ++shapes;
          if (!check_all_patterns(Predicate{p})) return false;
        }
      }
    }
  }
  if (shapes == 0) return false;

  // The paper's tabulated probability spaces.
  const Predicate three = Not2Predicate{{SignedLiteral{0, false}, SignedLiteral{1, false},
                                         SignedLiteral{2, false}}};
  const Predicate pair = Not2Predicate{{SignedLiteral{0, false}, SignedLiteral{0, false},
                                        SignedLiteral{1, false}}};
  using Dist = std::map<int, Rational>;
  if (margin_distribution(three, PartialAssignment{{}, {0, 1, 2}}) !=
      Dist{{0, {1, 8}}, {1, {3, 8}}, {2, {3, 8}}, {3, {1, 8}}})
    return false;
  if (margin_distribution(three, PartialAssignment{{{0, 0}}, {1, 2}}) !=
      Dist{{0, {1, 4}}, {1, {1, 2}}, {2, {1, 4}}})
    return false;
  if (margin_distribution(three, PartialAssignment{{{0, 0}, {1, 0}}, {2}}) !=
      Dist{{0, {1, 2}}, {1, {1, 2}}})
    return false;
  if (margin_distribution(pair, PartialAssignment{{}, {0, 1}}) !=
      Dist{{0, {1, 4}}, {1, {1, 4}}, {2, {1, 4}}, {3, {1, 4}}})
    return false;
  if (margin_distribution(pair, PartialAssignment{{{1, 1}}, {0}}) != Dist{{0, {1, 2}}, {2, {1, 2}}})
    return false;
  return true;
}

bool criterion8_derandomization(const std::vector<SweepRun>& sweep) {
  for (const SweepRun& run : sweep) {
    if (2 * run.report.satisfied_ignored < run.report.predicates_ignored) return false;
  }
  return true;
}

bool criterion9_final_bound(const std::vector<SweepRun>& sweep) {
  for (const SweepRun& run : sweep) {
    const Rational required = run.kind == Kind::Not2
                                  ? Rational(5, 8) + Rational(5, 4) * Rational(1, 20)
                                  : Rational(6, 8) + Rational(5, 4) * Rational(1, 20);
    if (run.report.required_fraction != required) return false;
    if (run.report.fraction_tailored < required && run.report.predicates_tailored > 0) return false;
    if (run.report.fraction_original < required) return false;
    if (!run.report.all_flags()) return false;  // the CLI exit-0 condition
  }
  return true;
}

bool criterion10_determinism(const std::vector<SweepRun>& sweep) {
  int checked = 0;
  for (std::size_t i = 0; i < sweep.size(); i += 9) {
    const SweepRun& run = sweep[i];
    PipelineOptions opts;
    opts.q = run.q;
    opts.strategy = run.strategy;
    opts.seed = run.seed;
    opts.prime = kPrime;
    const std::string once = run_pipeline(run.entry->instance, opts).to_text();
    if (once != run.report.to_text()) return false;
    ++checked;
  }
  return checked > 0;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  std::printf("building corpora...\n");
  // 100 instances per kind at n <= 12 for the variety/tailoring criteria,
  // plus 100 per kind at n <= 6 for the Buchberger certificate.
  const std::vector<Entry> small_not2 = build_corpus(Kind::Not2, 100, 3, 6, 11);
  const std::vector<Entry> small_oxr = build_corpus(Kind::Oxr, 100, 3, 6, 12);
  const std::vector<Entry> not2 = build_corpus(Kind::Not2, 100, 4, 12, 21);
  const std::vector<Entry> oxr = build_corpus(Kind::Oxr, 100, 4, 12, 22);

  // Sweep: 10 instances per kind, strategies {empty, greedy, random x5}.
  std::printf("running the strategy sweep...\n");
  std::vector<SweepRun> sweep;
  for (const std::vector<Entry>* corpus : {&not2, &oxr}) {
    const Kind kind = corpus == &not2 ? Kind::Not2 : Kind::Oxr;
    const Rational q = kind == Kind::Not2 ? Rational(3, 4) : Rational(17, 20);
    for (int i = 0; i < 10; ++i) {
      const Entry& entry = (*corpus)[i * 10 + 5];  // spread across sizes
      std::vector<std::pair<Strategy, std::uint64_t>> variants{{Strategy::Empty, 0},
                                                               {Strategy::Greedy, 0}};
      for (std::uint64_t s = 1; s <= 5; ++s) variants.emplace_back(Strategy::Random, s);
      for (const auto& [strategy, seed] : variants) {
        SweepRun run{&entry, kind, q, strategy, seed, {}, {}};
        const LexOrder ord = LexOrder::natural(entry.system.num_vars);
        run.solution = solve_fractional(entry.system, q, strategy, seed, ord);
        PipelineOptions opts;
        opts.q = q;
        opts.strategy = strategy;
        opts.seed = seed;
        opts.prime = kPrime;
        run.report = run_pipeline(entry.instance, opts);
        sweep.push_back(std::move(run));
      }
    }
  }

  int failures = 0;
  const auto check = [&](int number, const char* name, bool pass) {
    std::printf("[%s] criterion %2d: %s   (t=%.1fs)\n", pass ? "PASS" : "FAIL", number, name,
                elapsed());
    if (!pass) ++failures;
  };

  check(1, "Buchberger certificate on 200 encoded systems (n <= 6)",
        criterion1_buchberger_certificate(small_not2, small_oxr));
  check(2, "variety = satisfying assignments on 100 instances per kind (n <= 12)",
        criterion2_variety_equivalence(not2, oxr));
  check(3, "tailoring soundness: satisfiable, properties 1-2, two-fifths, full recovery",
        criterion3_tailoring_soundness(not2, oxr));
  check(4, "degree <= 3 / <= 2 and at most 3 variables per polynomial",
        criterion4_degree_bounds(not2, oxr));
  check(5, "fractional budget and the |P_R| inequalities (exact rationals)",
        criterion5_budget_and_inequality(sweep));
  check(6, "extracted points zero the surviving system and satisfy P_R",
        criterion6_extraction(sweep));
  check(7, "stage-3 probabilities: exhaustive shape space, oracle equality, >= 1/2",
        criterion7_probability_oracle());
  check(8, "derandomized P_D satisfaction >= ceil(|P_D|/2) on every sweep run",
        criterion8_derandomization(sweep));
  check(9, "final satisfaction bounds on tailored and original instances",
        criterion9_final_bound(sweep));
  check(10, "byte-identical reports on repeated runs", criterion10_determinism(sweep));

  std::printf("%s (%d criteria failed, %.1fs total)\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              failures, elapsed());
  return failures == 0 ? 0 : 1;
}
