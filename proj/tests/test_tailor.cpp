#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fracgb/errors.hpp"
#include "fracgb/oracle.hpp"
#include "fracgb/tailor.hpp"

using namespace fracgb;

namespace {

SignedLiteral pos(int lit) { return SignedLiteral{lit, false}; }
SignedLiteral neg(int lit) { return SignedLiteral{lit, true}; }

Predicate n2(std::vector<Slot> slots) { return Not2Predicate{std::move(slots)}; }
Predicate oxr(Slot special, Slot a, Slot b) { return OxrPredicate{special, a, b}; }

PredicateInstance make(Kind kind, int num_literals, std::vector<Predicate> preds) {
  PredicateInstance inst;
  inst.kind = kind;
  inst.num_literals = num_literals;
  for (std::size_t i = 0; i < preds.size(); ++i)
    inst.predicates.emplace_back(std::move(preds[i]), static_cast<int>(i));
  return inst;
}

/// Two predicates over three fresh literals that survive tailoring intact:
/// every literal occurs twice and no literal repeats within a predicate.
void add_core_not2(std::vector<Predicate>& preds, int a, int b, int c) {
  preds.push_back(n2({pos(a), pos(b), pos(c)}));
  preds.push_back(n2({neg(a), neg(b), neg(c)}));
}

void add_core_oxr(std::vector<Predicate>& preds, int a, int b, int c) {
  preds.push_back(oxr(pos(a), pos(b), pos(c)));
  preds.push_back(oxr(neg(a), neg(b), neg(c)));
}

bool removed_with(const TailoringRecord& rec, int id, CaseCode code) {
  return std::find(rec.removed_trivial.begin(), rec.removed_trivial.end(),
                   std::make_pair(id, code)) != rec.removed_trivial.end();
}

std::set<int> kept_ids(const PredicateInstance& inst) {
  std::set<int> ids;
  for (const auto& [pred, id] : inst.predicates) ids.insert(id);
  return ids;
}

}  // namespace

TEST_CASE("not2 case 1: three identical signed literals") {
  std::vector<Predicate> preds{n2({pos(0), pos(0), pos(0)})};
  add_core_not2(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 4, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::N1));
  CHECK(rec.fixed_literals.empty());
  CHECK(kept_ids(tailored) == std::set<int>{1, 2});
  // l1 no longer occurs anywhere; it is unconstrained, not a loner.
  CHECK(rec.loner_rounds.empty());
}

TEST_CASE("not2 case 2a: pair plus opposing third fixes the pair false") {
  std::vector<Predicate> preds{n2({pos(0), pos(0), neg(0)})};
  add_core_not2(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 4, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::N2a));
  CHECK(rec.fixed_literals == std::map<int, int>{{0, 0}});  // exactly one true literal
  CHECK(kept_ids(tailored) == std::set<int>{1, 2});

  // Negated pair: the pair must still be false, so the variable is 1.
  std::vector<Predicate> preds2{n2({neg(0), pos(0), neg(0)})};
  add_core_not2(preds2, 1, 2, 3);
  const auto [t2, rec2] = tailor_not2(make(Kind::Not2, 4, std::move(preds2)));
  CHECK(rec2.fixed_literals == std::map<int, int>{{0, 1}});
}

TEST_CASE("not2 case 2b: bare pair fixes zero true literals") {
  std::vector<Predicate> preds{n2({pos(0), pos(0)})};
  add_core_not2(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 4, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::N2b));
  CHECK(rec.fixed_literals == std::map<int, int>{{0, 0}});
}

TEST_CASE("not2 case 3b: opposing pair forces the third term to zero") {
  std::vector<Predicate> preds{n2({pos(0), neg(0), pos(1)})};
  add_core_not2(preds, 2, 3, 4);
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 5, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::N3b));
  CHECK(rec.fixed_literals == std::map<int, int>{{1, 0}});
  CHECK(rec.loner_rounds.empty());  // l1 no longer occurs anywhere

  // Negated third: its term is zero when the variable is 1.
  std::vector<Predicate> preds2{n2({pos(0), neg(0), neg(1)})};
  add_core_not2(preds2, 2, 3, 4);
  const auto [t2, rec2] = tailor_not2(make(Kind::Not2, 5, std::move(preds2)));
  CHECK(rec2.fixed_literals == std::map<int, int>{{1, 1}});
}

TEST_CASE("not2 case 3d: bare opposing pair is trivially satisfied") {
  std::vector<Predicate> preds{n2({pos(0), neg(0)})};
  add_core_not2(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 4, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::N3d));
  CHECK(rec.fixed_literals.empty());
}

TEST_CASE("not2 cases 3c and 2d: substitution then fixed-third handling") {
  // Predicate 0 fixes x1 = 0 (case 3b). Predicate 1 becomes an opposing
  // pair with fixed third of value 0 and is removed (case 3c). Predicate 2
  // becomes a pair with a fixed third and is kept (case 2d).
  std::vector<Predicate> preds{
      n2({pos(5), neg(5), pos(0)}),  // 3b: fixes x1 = 0
      n2({pos(6), neg(6), pos(0)}),  // after substitution: 3c
      n2({pos(1), pos(1), pos(0)}),  // after substitution: 2d, kept
  };
  add_core_not2(preds, 1, 2, 3);  // keeps l2 occurring enough
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 7, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::N3b));
  CHECK(removed_with(rec, 1, CaseCode::N3c));
  CHECK(rec.fixed_literals == std::map<int, int>{{0, 0}});
  REQUIRE(kept_ids(tailored).contains(2));
  // The kept pair predicate carries the substituted fixed term.
  for (const auto& [pred, id] : tailored.predicates) {
    if (id != 2) continue;
    const auto& slots = std::get<Not2Predicate>(pred).slots;
    REQUIRE(slots.size() == 3);
    CHECK(std::get<FixedTerm>(slots[2]).value == 0);
  }
  bool has_2d = false;
  for (const auto& [id, code] : rec.case_log) has_2d |= (id == 2 && code == CaseCode::N2d);
  CHECK(has_2d);
}

TEST_CASE("not2 loner rounds cascade") {
  std::vector<Predicate> preds;
  add_core_not2(preds, 0, 1, 2);               // ids 0, 1
  preds.push_back(n2({pos(3), pos(0), pos(1)}));  // id 2; l4 appears here and in id 3
  preds.push_back(n2({pos(4), pos(3), pos(0)}));  // id 3; l5 appears only here
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 5, std::move(preds)));

  REQUIRE(rec.loner_rounds.size() == 2);
  CHECK(rec.loner_rounds[0].literals == std::vector<int>{4});
  CHECK(rec.loner_rounds[0].predicate_ids == std::vector<int>{3});
  CHECK(rec.loner_rounds[1].literals == std::vector<int>{3});
  CHECK(rec.loner_rounds[1].predicate_ids == std::vector<int>{2});
  CHECK(kept_ids(tailored) == std::set<int>{0, 1});
  CHECK(check_two_fifths(tailored));
}

TEST_CASE("not2 contradiction on an unsatisfiable pair of predicates") {
  std::vector<Predicate> preds{
      n2({pos(0), pos(0), neg(0)}),
      n2({neg(0), neg(0), pos(0)}),
  };
  add_core_not2(preds, 1, 2, 3);
  CHECK_THROWS_AS(tailor_not2(make(Kind::Not2, 4, std::move(preds))), ContradictionError);
}

TEST_CASE("oxr case 1: identical symmetric literals force the special true") {
  std::vector<Predicate> preds{oxr(pos(0), pos(1), pos(1))};
  add_core_oxr(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_oxr(make(Kind::Oxr, 4, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::Oxr1));
  CHECK(rec.fixed_literals == std::map<int, int>{{0, 1}});
  CHECK(kept_ids(tailored) == std::set<int>{1, 2});

  // Negated special: the special signed literal is true when the variable
  // is 0.
  std::vector<Predicate> preds2{oxr(neg(0), pos(2), pos(2))};
  add_core_oxr(preds2, 1, 2, 3);
  const auto [t2, rec2] = tailor_oxr(make(Kind::Oxr, 4, std::move(preds2)));
  CHECK(rec2.fixed_literals == std::map<int, int>{{0, 0}});
}

TEST_CASE("oxr case 2: opposing symmetric forms are trivially satisfied") {
  std::vector<Predicate> preds{oxr(pos(0), pos(1), neg(1))};
  add_core_oxr(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_oxr(make(Kind::Oxr, 4, std::move(preds)));
  CHECK(removed_with(rec, 0, CaseCode::Oxr2));
  CHECK(rec.fixed_literals.empty());
  CHECK(rec.loner_rounds.empty());
}

TEST_CASE("oxr contradiction via substituted special") {
  std::vector<Predicate> preds{
      oxr(pos(0), pos(1), pos(1)),  // fixes x1 = 1
      oxr(neg(0), pos(2), pos(2)),  // special becomes fixed-false, xor false
  };
  add_core_oxr(preds, 1, 2, 3);
  CHECK_THROWS_AS(tailor_oxr(make(Kind::Oxr, 4, std::move(preds))), ContradictionError);
}

TEST_CASE("reinsertion satisfies loner predicates") {
  SUBCASE("oxr loner in the special position is set true") {
    std::vector<Predicate> preds;
    add_core_oxr(preds, 0, 1, 2);                    // ids 0, 1
    preds.push_back(oxr(pos(4), pos(0), pos(1)));    // id 2: l5 only here
    const auto [tailored, rec] = tailor_oxr(make(Kind::Oxr, 5, std::move(preds)));
    REQUIRE(rec.loner_rounds.size() == 1);

    Assignment partial(5, kUnassigned);
    partial[0] = 1;
    partial[1] = 1;  // xor of id 2 is false, so only the special can save it
    partial[2] = 0;
    const PredicateInstance original = [&] {
      std::vector<Predicate> ps;
      add_core_oxr(ps, 0, 1, 2);
      ps.push_back(oxr(pos(4), pos(0), pos(1)));
      return make(Kind::Oxr, 5, std::move(ps));
    }();
    const Assignment full = reinsert_loners(partial, rec, original);
    CHECK(full[4] == 1);
    CHECK(evaluate_predicate(original.predicates[2].first, full));
  }

  SUBCASE("not2 loner moves a pair total of 2 to an acceptable 3") {
    std::vector<Predicate> preds;
    add_core_not2(preds, 0, 1, 2);                   // ids 0, 1
    preds.push_back(n2({pos(3), pos(0), pos(1)}));   // id 2: l4 only here
    const PredicateInstance original = make(Kind::Not2, 4, preds);
    const auto [tailored, rec] = tailor_not2(original);
    REQUIRE(rec.loner_rounds.size() == 1);

    Assignment partial(4, kUnassigned);
    partial[0] = 1;
    partial[1] = 1;
    partial[2] = 1;
    const Assignment full = reinsert_loners(partial, rec, original);
    CHECK(full[3] == 1);  // value 0 would leave the sum at the forbidden 2
    CHECK(evaluate_predicate(original.predicates[2].first, full));
  }

  SUBCASE("no loner rounds leaves the assignment unchanged apart from fixes") {
    std::vector<Predicate> preds;
    add_core_not2(preds, 0, 1, 2);
    const PredicateInstance original = make(Kind::Not2, 3, preds);
    const auto [tailored, rec] = tailor_not2(original);
    CHECK(rec.loner_rounds.empty());
    Assignment partial{0, 1, 0};
    CHECK(reinsert_loners(partial, rec, original) == partial);
  }
}

TEST_CASE("two-fifths bound arithmetic") {
  // Tight case: 2 predicates, 3 literals, each literal in both predicates.
  std::vector<Predicate> preds;
  add_core_not2(preds, 0, 1, 2);
  CHECK(check_two_fifths(make(Kind::Not2, 3, preds)));

  // One predicate over 3 literals fails 5*1 >= 2*(1+3).
  CHECK_FALSE(check_two_fifths(make(Kind::Not2, 3, {n2({pos(0), pos(1), pos(2)})})));
}

TEST_CASE("tailoring properties over random planted instances") {
  std::mt19937_64 seeds(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const Kind kind = trial % 2 == 0 ? Kind::Not2 : Kind::Oxr;
    const int n = 4 + static_cast<int>(seeds() % 7);  // 4..10 literals
    const int m = n + static_cast<int>(seeds() % (2 * n));
    const auto [inst, planted] = generate_satisfiable(kind, n, m, seeds());
    const auto [tailored, rec] = tailor(inst);

    CHECK(holds_property1(tailored));
    CHECK(holds_property2(tailored));
    CHECK(check_two_fifths(tailored));

    // Case-log completeness: every predicate is kept, removed by a case, or
    // removed in a loner round -- exactly once.
    std::multiset<int> seen;
    for (const auto& [pred, id] : tailored.predicates) seen.insert(id);
    for (const auto& [id, code] : rec.removed_trivial) seen.insert(id);
    for (const LonerRound& round : rec.loner_rounds) {
      for (int id : round.predicate_ids) seen.insert(id);
    }
    CHECK(seen.size() == inst.predicates.size());
    for (const auto& [pred, id] : inst.predicates) CHECK(seen.count(id) == 1);

    // Fixed literals are gone from the tailored instance.
    for (int lit : remaining_literals(tailored)) CHECK(!rec.fixed_literals.contains(lit));

    // Satisfiability is preserved.
    if (!tailored.predicates.empty()) {
      CHECK(brute_max_fraction(tailored).fraction == Rational(1, 1));
    }

    // Idempotence: a second tailoring pass changes nothing.
    const auto [again, rec2] = tailor(tailored);
    CHECK(again.predicates == tailored.predicates);
    CHECK(rec2.fixed_literals.empty());
    CHECK(rec2.removed_trivial.empty());
    CHECK(rec2.loner_rounds.empty());

    // Full recovery: any total assignment on the tailored literals extends
    // to one satisfying every removed predicate.
    const std::set<int> kept = kept_ids(tailored);
    std::mt19937_64 rng(seeds());
    for (int round = 0; round < 5; ++round) {
      Assignment partial(inst.num_literals, kUnassigned);
      for (int lit : remaining_literals(tailored)) partial[lit] = static_cast<std::int8_t>(rng() & 1);
      const Assignment full = reinsert_loners(partial, rec, inst);
      for (const auto& [pred, id] : inst.predicates) {
        if (!kept.contains(id)) CHECK(evaluate_predicate(pred, full));
      }
    }
  }
}

TEST_CASE("tailoring record serializes a readable audit trail") {
  std::vector<Predicate> preds{n2({pos(0), pos(0), neg(0)})};
  add_core_not2(preds, 1, 2, 3);
  const auto [tailored, rec] = tailor_not2(make(Kind::Not2, 4, std::move(preds)));
  const std::string text = rec.to_text();
  CHECK(text.find("id=0 case=2a") != std::string::npos);
  CHECK(text.find("fixed l1=0") != std::string::npos);
}
