#include "fracgb/instance.hpp"

#include <algorithm>
#include <istream>
#include <random>
#include <sstream>

#include "fracgb/errors.hpp"

namespace fracgb {

const char* kind_name(Kind kind) { return kind == Kind::Not2 ? "not2" : "oxr"; }

bool slot_is_fixed(const Slot& slot) { return std::holds_alternative<FixedTerm>(slot); }

bool slot_truth(const Slot& slot, const Assignment& x) {
  if (const auto* fixed = std::get_if<FixedTerm>(&slot)) return fixed->value != 0;
  const auto& sl = std::get<SignedLiteral>(slot);
  if (sl.literal < 0 || sl.literal >= static_cast<int>(x.size()) || x[sl.literal] == kUnassigned)
    throw UnassignedVariableError("literal l" + std::to_string(sl.literal + 1) + " unassigned");
  const bool v = x[sl.literal] != 0;
  return sl.negated ? !v : v;
}

std::vector<Slot> predicate_slots(const Predicate& pred) {
  if (const auto* n2 = std::get_if<Not2Predicate>(&pred)) return n2->slots;
  const auto& oxr = std::get<OxrPredicate>(pred);
  return {oxr.special, oxr.sym1, oxr.sym2};
}

std::vector<int> free_literals(const Predicate& pred) {
  std::vector<int> out;
  for (const Slot& slot : predicate_slots(pred)) {
    if (const auto* sl = std::get_if<SignedLiteral>(&slot)) out.push_back(sl->literal);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool evaluate_predicate(const Predicate& pred, const Assignment& x) {
  if (const auto* n2 = std::get_if<Not2Predicate>(&pred)) {
    int sum = 0;
    for (const Slot& slot : n2->slots) sum += slot_truth(slot, x) ? 1 : 0;
    return sum != 2;
  }
  const auto& oxr = std::get<OxrPredicate>(pred);
  return slot_truth(oxr.special, x) || (slot_truth(oxr.sym1, x) != slot_truth(oxr.sym2, x));
}

long long count_satisfied(const PredicateInstance& inst, const Assignment& x) {
  long long n = 0;
  for (const auto& [pred, id] : inst.predicates) {
    if (evaluate_predicate(pred, x)) ++n;
  }
  return n;
}

Rational satisfied_fraction(const PredicateInstance& inst, const Assignment& x) {
  if (inst.predicates.empty()) throw EmptyInstanceError("instance has no predicates");
  return Rational(count_satisfied(inst, x), static_cast<long long>(inst.predicates.size()));
}

namespace {

SignedLiteral token_to_literal(long long token, int num_literals, int line) {
  if (token == 0) throw ParseError("literal token must be nonzero", line);
  const long long index = token < 0 ? -token : token;
  if (index > num_literals)
    throw ParseError("literal index " + std::to_string(index) + " out of range", line);
  return SignedLiteral{static_cast<int>(index - 1), token < 0};
}

}  // namespace

PredicateInstance parse_instance(std::istream& in) {
  PredicateInstance inst;
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long declared_predicates = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    if (first == "c") continue;

    if (!have_header) {
      if (first != "p") throw ParseError("expected header 'p <not2|oxr> <literals> <predicates>'", line_no);
      std::string kind;
      long long nl = 0, np = 0;
      if (!(ls >> kind >> nl >> np)) throw ParseError("malformed header", line_no);
      std::string extra;
      if (ls >> extra) throw ParseError("trailing tokens in header", line_no);
      if (kind == "not2") {
        inst.kind = Kind::Not2;
      } else if (kind == "oxr") {
        inst.kind = Kind::Oxr;
      } else {
        throw ParseError("unknown kind '" + kind + "'", line_no);
      }
      if (nl < 1 || nl > 1000000) throw ParseError("literal count out of range", line_no);
      if (np < 0) throw ParseError("negative predicate count", line_no);
      inst.num_literals = static_cast<int>(nl);
      declared_predicates = np;
      have_header = true;
      continue;
    }

    std::vector<long long> tokens;
    try {
      std::size_t used = 0;
      tokens.push_back(std::stoll(first, &used));
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::logic_error&) {
      throw ParseError("non-integer token '" + first + "'", line_no);
    }
    long long tok = 0;
    while (ls >> tok) tokens.push_back(tok);
    if (!ls.eof()) throw ParseError("non-integer token", line_no);

    if (inst.kind == Kind::Not2) {
      if (tokens.empty() || tokens.size() > 3)
        throw ParseError("not2 predicate must have 1 to 3 signed literals", line_no);
      Not2Predicate p;
      for (long long t : tokens) p.slots.emplace_back(token_to_literal(t, inst.num_literals, line_no));
      inst.predicates.emplace_back(Predicate{p}, static_cast<int>(inst.predicates.size()));
    } else {
      if (tokens.size() != 3)
        throw ParseError("oxr predicate must have exactly 3 signed literals", line_no);
      OxrPredicate p;
      p.special = token_to_literal(tokens[0], inst.num_literals, line_no);
      p.sym1 = token_to_literal(tokens[1], inst.num_literals, line_no);
      p.sym2 = token_to_literal(tokens[2], inst.num_literals, line_no);
      inst.predicates.emplace_back(Predicate{p}, static_cast<int>(inst.predicates.size()));
    }
  }

  if (!have_header) throw ParseError("missing header", line_no == 0 ? 1 : line_no);
  if (static_cast<long long>(inst.predicates.size()) != declared_predicates)
    throw ParseError("header declares " + std::to_string(declared_predicates) + " predicates, found " +
                         std::to_string(inst.predicates.size()),
                     line_no);
  return inst;
}

PredicateInstance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

namespace {

long long literal_token(const Slot& slot) {
  const auto* sl = std::get_if<SignedLiteral>(&slot);
  if (sl == nullptr) throw InternalError("cannot serialize a predicate with fixed slots");
  const long long token = sl->literal + 1;
  return sl->negated ? -token : token;
}

}  // namespace

std::string serialize_instance(const PredicateInstance& inst) {
  std::ostringstream out;
  out << "p " << kind_name(inst.kind) << " " << inst.num_literals << " " << inst.predicates.size()
      << "\n";
  for (const auto& [pred, id] : inst.predicates) {
    bool first = true;
    for (const Slot& slot : predicate_slots(pred)) {
      if (!first) out << " ";
      first = false;
      out << literal_token(slot);
    }
    out << "\n";
  }
  return out.str();
}

std::pair<PredicateInstance, Assignment> generate_satisfiable(Kind kind, int num_literals,
                                                              int num_predicates, std::uint64_t seed) {
  if (num_literals < 3) throw InputError("generator needs at least 3 literals");
  if (num_predicates < 1) throw InputError("generator needs at least 1 predicate");

  std::mt19937_64 rng(seed);
  Assignment planted(num_literals);
  for (auto& v : planted) v = static_cast<std::int8_t>(rng() & 1);

  std::uniform_int_distribution<int> literal_dist(0, num_literals - 1);
  auto draw_slot = [&]() -> Slot {
    return SignedLiteral{literal_dist(rng), (rng() & 1) != 0};
  };

  // Arity is drawn proportionally to the number of legal shapes of each
  // arity (2n, 4n^2, 8n^3), which makes the draw uniform over all shapes.
  const double n = num_literals;
  const double w1 = 2 * n, w2 = 4 * n * n, w3 = 8 * n * n * n;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto draw_arity = [&]() {
    const double u = unit(rng) * (w1 + w2 + w3);
    if (u < w1) return 1;
    if (u < w1 + w2) return 2;
    return 3;
  };

  PredicateInstance inst;
  inst.kind = kind;
  inst.num_literals = num_literals;
  for (int i = 0; i < num_predicates; ++i) {
    while (true) {
      Predicate pred;
      if (kind == Kind::Not2) {
        Not2Predicate p;
        const int arity = draw_arity();
        for (int s = 0; s < arity; ++s) p.slots.push_back(draw_slot());
        pred = p;
      } else {
        pred = OxrPredicate{draw_slot(), draw_slot(), draw_slot()};
      }
      if (evaluate_predicate(pred, planted)) {
        inst.predicates.emplace_back(std::move(pred), i);
        break;
      }
    }
  }
  return {std::move(inst), std::move(planted)};
}

}  // namespace fracgb
