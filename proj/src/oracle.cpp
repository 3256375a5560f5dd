#include "fracgb/oracle.hpp"

#include <algorithm>
#include <variant>

#include "fracgb/errors.hpp"

namespace fracgb {

namespace {

// Branch-light forms of predicates and polynomials for the 2^n scans.

struct CompiledSlot {
  std::uint32_t mask = 0;  // zero for fixed slots
  std::uint32_t flip = 0;  // 1 for negated literals and for fixed-true slots
};

CompiledSlot compile_slot(const Slot& slot) {
  if (const auto* fixed = std::get_if<FixedTerm>(&slot))
    return {0, static_cast<std::uint32_t>(fixed->value)};
  const auto& sl = std::get<SignedLiteral>(slot);
  return {std::uint32_t{1} << sl.literal, sl.negated ? 1u : 0u};
}

struct CompiledPredicate {
  bool is_not2 = true;
  std::vector<CompiledSlot> slots;  // oxr order: special, sym1, sym2

  bool satisfied(std::uint32_t point) const {
    if (is_not2) {
      std::uint32_t sum = 0;
      for (const CompiledSlot& s : slots) sum += ((point & s.mask) != 0) ^ s.flip;
      return sum != 2;
    }
    const bool special = (((point & slots[0].mask) != 0) ^ slots[0].flip) != 0;
    const bool s1 = (((point & slots[1].mask) != 0) ^ slots[1].flip) != 0;
    const bool s2 = (((point & slots[2].mask) != 0) ^ slots[2].flip) != 0;
    return special || (s1 != s2);
  }
};

std::vector<CompiledPredicate> compile_instance(const PredicateInstance& inst) {
  std::vector<CompiledPredicate> out;
  out.reserve(inst.predicates.size());
  for (const auto& [pred, id] : inst.predicates) {
    CompiledPredicate cp;
    cp.is_not2 = std::holds_alternative<Not2Predicate>(pred);
    for (const Slot& slot : predicate_slots(pred)) cp.slots.push_back(compile_slot(slot));
    out.push_back(std::move(cp));
  }
  return out;
}

long long satisfied_at(const std::vector<CompiledPredicate>& preds, std::uint32_t point) {
  long long n = 0;
  for (const CompiledPredicate& p : preds) n += p.satisfied(point) ? 1 : 0;
  return n;
}

Assignment mask_to_assignment(std::uint32_t mask, int num_literals) {
  Assignment x(num_literals);
  for (int i = 0; i < num_literals; ++i) x[i] = static_cast<std::int8_t>((mask >> i) & 1);
  return x;
}

void check_enumerable(int num_vars, const char* what) {
  if (num_vars > kMaxEnumerationVars)
    throw TooLargeToEnumerateError(std::string(what) + " limited to " +
                                   std::to_string(kMaxEnumerationVars) + " variables");
}

BruteMaxResult finish_max(const PredicateInstance& inst, long long best, std::uint32_t best_mask) {
  BruteMaxResult res;
  res.best_satisfied = best;
  res.fraction = Rational(best, static_cast<long long>(inst.predicates.size()));
  res.witness = mask_to_assignment(best_mask, inst.num_literals);
  return res;
}

/// A polynomial evaluated at a boolean point is the sum of the coefficients
/// of the terms whose variable support is contained in the point's ones.
struct CompiledPolynomial {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> terms;  // support mask, coefficient
  std::uint32_t modulus = 0;

  bool zero_at(std::uint32_t point) const {
    std::uint64_t sum = 0;
    for (const auto& [mask, coeff] : terms) {
      if ((mask & point) == mask) sum += coeff;
    }
    return sum % modulus == 0;
  }
};

std::vector<CompiledPolynomial> compile_polys(const std::vector<Polynomial>& polys) {
  std::vector<CompiledPolynomial> out;
  out.reserve(polys.size());
  for (const Polynomial& poly : polys) {
    CompiledPolynomial cp;
    cp.modulus = poly.modulus();
    for (const auto& [mono, coeff] : poly.terms()) {
      std::uint32_t mask = 0;
      for (const auto& [v, e] : mono.exponents()) mask |= std::uint32_t{1} << v;
      cp.terms.emplace_back(mask, coeff);
    }
    out.push_back(std::move(cp));
  }
  return out;
}

bool point_in_variety(const std::vector<CompiledPolynomial>& polys, std::uint32_t point) {
  return std::all_of(polys.begin(), polys.end(),
                     [&](const CompiledPolynomial& p) { return p.zero_at(point); });
}

}  // namespace

BruteMaxResult brute_max_fraction_serial(const PredicateInstance& inst) {
  check_enumerable(inst.num_literals, "brute-force maximization");
  if (inst.predicates.empty()) throw EmptyInstanceError("instance has no predicates");
  const auto preds = compile_instance(inst);
  const std::uint64_t total = std::uint64_t{1} << inst.num_literals;

  long long best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const long long n = satisfied_at(preds, static_cast<std::uint32_t>(mask));
    if (n > best) {
      best = n;
      best_mask = static_cast<std::uint32_t>(mask);
    }
  }
  return finish_max(inst, best, best_mask);
}

BruteMaxResult brute_max_fraction(const PredicateInstance& inst) {
  check_enumerable(inst.num_literals, "brute-force maximization");
  if (inst.predicates.empty()) throw EmptyInstanceError("instance has no predicates");
  const auto preds = compile_instance(inst);
  const std::int64_t total = std::int64_t{1} << inst.num_literals;

  long long best = -1;
  std::uint32_t best_mask = 0;
#pragma omp parallel
  {
    long long local_best = -1;
    std::uint32_t local_mask = 0;
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      const long long n = satisfied_at(preds, static_cast<std::uint32_t>(mask));
      if (n > local_best) {
        local_best = n;
        local_mask = static_cast<std::uint32_t>(mask);
      }
    }
#pragma omp critical
    {
      // Same tie-break as the serial scan: highest count, lowest encoding.
      if (local_best > best || (local_best == best && local_mask < best_mask)) {
        best = local_best;
        best_mask = local_mask;
      }
    }
  }
  return finish_max(inst, best, best_mask);
}

bool is_satisfiable(const PredicateInstance& inst) {
  return brute_max_fraction(inst).fraction == Rational(1, 1);
}

std::vector<std::uint32_t> brute_variety_serial(const std::vector<Polynomial>& polys, int num_vars) {
  check_enumerable(num_vars, "variety enumeration");
  const auto compiled = compile_polys(polys);
  const std::uint64_t total = std::uint64_t{1} << num_vars;

  std::vector<std::uint32_t> points;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (point_in_variety(compiled, static_cast<std::uint32_t>(mask)))
      points.push_back(static_cast<std::uint32_t>(mask));
  }
  return points;
}

std::vector<std::uint32_t> brute_variety(const std::vector<Polynomial>& polys, int num_vars) {
  check_enumerable(num_vars, "variety enumeration");
  const auto compiled = compile_polys(polys);
  const std::int64_t total = std::int64_t{1} << num_vars;

  std::vector<std::uint32_t> points;
#pragma omp parallel
  {
    std::vector<std::uint32_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < total; ++mask) {
      if (point_in_variety(compiled, static_cast<std::uint32_t>(mask)))
        local.push_back(static_cast<std::uint32_t>(mask));
    }
#pragma omp critical
    points.insert(points.end(), local.begin(), local.end());
  }
  std::sort(points.begin(), points.end());
  return points;
}

}  // namespace fracgb
