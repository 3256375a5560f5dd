#pragma once

#include <random>
#include <vector>

#include "fracgb/monomial.hpp"
#include "fracgb/polynomial.hpp"

namespace fracgb::test {

inline constexpr std::uint32_t kP = 32003;

inline Polynomial P(std::string_view text, int num_vars = 6, std::uint32_t modulus = kP) {
  return Polynomial::parse(text, num_vars, modulus);
}

inline Monomial random_monomial(std::mt19937_64& rng, int num_vars, int max_exp = 3) {
  Monomial m;
  std::uniform_int_distribution<int> exp_dist(0, max_exp);
  for (int v = 0; v < num_vars; ++v) {
    const int e = exp_dist(rng);
    if (e > 0) m = m * Monomial::variable(v, e);
  }
  return m;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int num_vars, int max_terms = 5,
                                    std::uint32_t modulus = kP) {
  Polynomial f(num_vars, modulus);
  std::uniform_int_distribution<int> terms_dist(0, max_terms);
  std::uniform_int_distribution<long long> coeff_dist(-10, 10);
  const int terms = terms_dist(rng);
  for (int t = 0; t < terms; ++t) f.add_term(random_monomial(rng, num_vars), coeff_dist(rng));
  return f;
}

inline LexOrder random_order(std::mt19937_64& rng, int num_vars) {
  std::vector<int> priority(num_vars);
  for (int v = 0; v < num_vars; ++v) priority[v] = v;
  std::shuffle(priority.begin(), priority.end(), rng);
  return LexOrder(std::move(priority));
}

}  // namespace fracgb::test
