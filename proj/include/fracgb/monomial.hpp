#pragma once

#include <utility>
#include <vector>

namespace fracgb {

/// Sparse monomial: (variable index, exponent) pairs sorted by ascending
/// variable index, exponents strictly positive. The empty monomial is 1.
class Monomial {
 public:
  using Exponents = std::vector<std::pair<int, int>>;

  Monomial() = default;
  explicit Monomial(Exponents exps);

  static Monomial variable(int var, int exp = 1);

  bool is_unit() const { return exps_.empty(); }
  int total_degree() const;
  int exponent_of(int var) const;
  const Exponents& exponents() const { return exps_; }

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial divided_by(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool coprime_with(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

 private:
  Exponents exps_;
};

/// Lexicographic comparison with the natural variable priority y1 > y2 > ...
/// Returns true when a is strictly smaller than b.
bool lex_less_natural(const Monomial& a, const Monomial& b);

/// Comparator placing lex-larger monomials first; used as the canonical
/// in-memory and printing order for polynomial terms.
struct DescendingLex {
  bool operator()(const Monomial& a, const Monomial& b) const { return lex_less_natural(b, a); }
};

/// A lexicographic term order given by a permutation of the variable
/// indices; the variable listed first is the largest.
class LexOrder {
 public:
  LexOrder() : is_natural_(true) {}  // order of the empty ring
  explicit LexOrder(std::vector<int> priority);
  static LexOrder natural(int num_vars);

  int num_vars() const { return static_cast<int>(priority_.size()); }
  const std::vector<int>& priority() const { return priority_; }

  bool less(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

 private:
  std::vector<int> priority_;
  bool is_natural_ = false;
};

}  // namespace fracgb
