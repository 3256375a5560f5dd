#include "fracgb/encode.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fracgb/errors.hpp"
#include "fracgb/tailor.hpp"

namespace fracgb {

std::vector<Polynomial> PolynomialSystem::all_polys() const {
  std::vector<Polynomial> out = literal_polys;
  for (const auto& [poly, id] : predicate_polys) out.push_back(poly);
  return out;
}

std::string PolynomialSystem::to_text() const {
  std::ostringstream out;
  out << "c vars=" << num_vars << " p=" << modulus << "\n";
  for (int v = 0; v < num_vars; ++v) out << "c y" << (v + 1) << " = l" << (literal_of_var[v] + 1) << "\n";
  for (const Polynomial& poly : literal_polys) out << poly.to_string() << "\n";
  for (const auto& [poly, id] : predicate_polys) out << poly.to_string() << "\n";
  return out.str();
}

namespace {

PolynomialSystem make_ring(const PredicateInstance& tailored, std::uint32_t modulus) {
  validate_modulus(modulus);
  PolynomialSystem sys;
  sys.modulus = modulus;
  sys.literal_of_var = remaining_literals(tailored);
  sys.num_vars = static_cast<int>(sys.literal_of_var.size());
  for (int v = 0; v < sys.num_vars; ++v) sys.var_of_literal[sys.literal_of_var[v]] = v;
  for (int v = 0; v < sys.num_vars; ++v) {
    // y(1 - y)
    Polynomial lp(sys.num_vars, modulus);
    lp.add_term(Monomial::variable(v), 1);
    lp.add_term(Monomial::variable(v, 2), -1);
    sys.literal_polys.push_back(std::move(lp));
  }
  return sys;
}

/// The slot's contribution to the predicate sum: y for a positive literal,
/// 1-y for a negated one, its value for a fixed term.
Polynomial slot_term(const Slot& slot, const PolynomialSystem& sys) {
  Polynomial out(sys.num_vars, sys.modulus);
  if (const auto* fixed = std::get_if<FixedTerm>(&slot)) {
    out.add_term(Monomial{}, fixed->value);
    return out;
  }
  const auto& sl = std::get<SignedLiteral>(slot);
  const int var = sys.var_of_literal.at(sl.literal);
  if (sl.negated) {
    out.add_term(Monomial{}, 1);
    out.add_term(Monomial::variable(var), -1);
  } else {
    out.add_term(Monomial::variable(var), 1);
  }
  return out;
}

}  // namespace

PolynomialSystem encode_not2(const PredicateInstance& tailored, std::uint32_t modulus) {
  if (tailored.kind != Kind::Not2) throw InputError("encode_not2 requires a not2 instance");
  PolynomialSystem sys = make_ring(tailored, modulus);

  for (const auto& [pred, id] : tailored.predicates) {
    const auto& n2 = std::get<Not2Predicate>(pred);
    Polynomial sum(sys.num_vars, modulus);
    for (const Slot& slot : n2.slots) sum = sum + slot_term(slot, sys);

    // Totals the sum can reach over boolean values of the free literals.
    const std::vector<int> free = free_literals(pred);
    std::set<int> achievable;
    Assignment x(tailored.num_literals, kUnassigned);
    for (std::size_t bits = 0; bits < (std::size_t{1} << free.size()); ++bits) {
      for (std::size_t i = 0; i < free.size(); ++i)
        x[free[i]] = static_cast<std::int8_t>((bits >> i) & 1);
      int total = 0;
      for (const Slot& slot : n2.slots) total += slot_truth(slot, x) ? 1 : 0;
      achievable.insert(total);
    }
    achievable.erase(2);
    if (achievable.empty())
      throw EmptyAcceptableSetError("predicate " + std::to_string(id) + " has no acceptable total");

    Polynomial product = Polynomial::constant(sys.num_vars, modulus, 1);
    for (int total : achievable) {
      product = product * (sum - Polynomial::constant(sys.num_vars, modulus, total));
    }
    sys.predicate_polys.emplace_back(std::move(product), id);
  }
  return sys;
}

PolynomialSystem encode_oxr(const PredicateInstance& tailored, std::uint32_t modulus) {
  if (tailored.kind != Kind::Oxr) throw InputError("encode_oxr requires an oxr instance");
  PolynomialSystem sys = make_ring(tailored, modulus);

  for (const auto& [pred, id] : tailored.predicates) {
    const auto& oxr = std::get<OxrPredicate>(pred);

    // Special term: zero exactly when the special-position literal is true.
    Polynomial special(sys.num_vars, modulus);
    if (const auto* sl = std::get_if<SignedLiteral>(&oxr.special)) {
      const int var = sys.var_of_literal.at(sl->literal);
      special.add_term(Monomial::variable(var), 1);
      if (!sl->negated) special.add_term(Monomial{}, -1);
    } else {
      special.add_term(Monomial{}, 1 - std::get<FixedTerm>(oxr.special).value);
    }

    // Xor term: sum of the symmetric slot contributions minus 1; zero
    // exactly when the xor is true.
    const Polynomial xorterm = slot_term(oxr.sym1, sys) + slot_term(oxr.sym2, sys) -
                               Polynomial::constant(sys.num_vars, modulus, 1);
    sys.predicate_polys.emplace_back(special * xorterm, id);
  }
  return sys;
}

PolynomialSystem encode(const PredicateInstance& tailored, std::uint32_t modulus) {
  return tailored.kind == Kind::Not2 ? encode_not2(tailored, modulus) : encode_oxr(tailored, modulus);
}

bool check_variety_equivalence(const PolynomialSystem& sys, const PredicateInstance& tailored) {
  if (sys.num_vars > 20) throw TooLargeToEnumerateError("variety check limited to 20 variables");
  const std::vector<Polynomial> polys = sys.all_polys();

  Assignment x(tailored.num_literals, kUnassigned);
  std::map<int, std::uint32_t> point;
  for (std::size_t mask = 0; mask < (std::size_t{1} << sys.num_vars); ++mask) {
    for (int v = 0; v < sys.num_vars; ++v) {
      const std::uint32_t bit = (mask >> v) & 1;
      point[v] = bit;
      x[sys.literal_of_var[v]] = static_cast<std::int8_t>(bit);
    }
    bool in_variety = true;
    for (const Polynomial& poly : polys) {
      if (!poly.evaluate(point).is_zero()) {
        in_variety = false;
        break;
      }
    }
    bool satisfies = true;
    for (const auto& [pred, id] : tailored.predicates) {
      if (!evaluate_predicate(pred, x)) {
        satisfies = false;
        break;
      }
    }
    if (in_variety != satisfies) return false;
  }
  return true;
}

}  // namespace fracgb
