#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fracgb/instance.hpp"
#include "fracgb/polynomial.hpp"

namespace fracgb {

/// The encoded system F: one literal polynomial y(1-y) per remaining
/// literal plus one predicate polynomial per predicate. Ring variables are
/// the remaining literals renamed consecutively.
struct PolynomialSystem {
  int num_vars = 0;
  std::uint32_t modulus = 0;
  std::vector<Polynomial> literal_polys;
  std::vector<std::pair<Polynomial, int>> predicate_polys;  // polynomial, original id
  std::vector<int> literal_of_var;                          // ring variable -> literal
  std::map<int, int> var_of_literal;

  std::size_t size() const { return literal_polys.size() + predicate_polys.size(); }
  /// Literal polynomials first, then predicate polynomials.
  std::vector<Polynomial> all_polys() const;
  std::string to_text() const;
};

/// Builds the Not-2 predicate polynomial as the product of (sum - t) over
/// the acceptable totals t the predicate can still reach; achievable totals
/// are enumerated over the predicate's free literals.
PolynomialSystem encode_not2(const PredicateInstance& tailored, std::uint32_t modulus);

/// OXR predicate polynomial: (special term) * (xor term), degree at most 2.
PolynomialSystem encode_oxr(const PredicateInstance& tailored, std::uint32_t modulus);

PolynomialSystem encode(const PredicateInstance& tailored, std::uint32_t modulus);

/// True when the boolean points zeroing every polynomial of the system are
/// exactly the assignments satisfying every predicate. Enumeration is
/// guarded at 20 variables.
bool check_variety_equivalence(const PolynomialSystem& sys, const PredicateInstance& tailored);

}  // namespace fracgb
