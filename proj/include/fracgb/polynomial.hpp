#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracgb/field.hpp"
#include "fracgb/monomial.hpp"

namespace fracgb {

/// Sparse multivariate polynomial over GF(p) in a ring of num_vars
/// variables. Terms are kept in canonical form: no zero coefficients,
/// ordered descending-lex so iteration matches the printed form.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, std::uint32_t, DescendingLex>;

  Polynomial(int num_vars, std::uint32_t modulus);

  static Polynomial constant(int num_vars, std::uint32_t modulus, long long c);
  static Polynomial variable(int num_vars, std::uint32_t modulus, int var);

  /// Accumulates coeff * mono, dropping the term if it cancels.
  void add_term(const Monomial& mono, long long coeff);

  int num_vars() const { return num_vars_; }
  std::uint32_t modulus() const { return modulus_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;
  std::set<int> support() const;

  std::pair<Monomial, Fp> leading_term(const LexOrder& ord) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;

  Polynomial scaled(const Fp& c) const;
  Polynomial times_term(const Monomial& mono, const Fp& c) const;
  Polynomial monic(const LexOrder& ord) const;

  /// Replaces a variable by a constant value.
  Polynomial substituted(int var, std::uint32_t value) const;

  /// Point must assign every variable in the support. Values taken mod p.
  Fp evaluate(const std::map<int, std::uint32_t>& point) const;

  /// Descending-lex textual form, e.g. "y1^2 + 32002*y1"; "0" when zero.
  std::string to_string() const;
  static Polynomial parse(std::string_view text, int num_vars, std::uint32_t modulus);

  bool operator==(const Polynomial& other) const = default;

 private:
  int num_vars_;
  std::uint32_t modulus_;
  TermMap terms_;
};

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

/// Multivariate division of f by the list G: f = sum(quotients[i]*G[i]) +
/// remainder, and no monomial of the remainder is divisible by any leading
/// monomial of G. Deterministic: always reduces by the first divisor in
/// list order whose leading monomial divides the current leading monomial.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const LexOrder& ord);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const LexOrder& ord);

}  // namespace fracgb
