#pragma once

#include <vector>

#include "fracgb/monomial.hpp"
#include "fracgb/polynomial.hpp"

namespace fracgb {

/// Reduced lexicographic Groebner basis: generators are monic, mutually
/// irreducible, and sorted descending by leading monomial.
struct GroebnerBasis {
  std::vector<Polynomial> generators;
  LexOrder order;
};

/// S(f, g) = (lcm/lt(f))*f - (lcm/lt(g))*g for the monomial lcm of the
/// leading monomials; cancels the leading terms of the pair.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const LexOrder& ord);

/// Buchberger's algorithm. Zero members of the input are dropped; the empty
/// input yields the empty basis. Pair selection is the normal strategy
/// (smallest lcm first) and pairs with coprime leading monomials are
/// skipped, so runs are deterministic.
GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const LexOrder& ord);

/// False exactly when the basis contains a nonzero constant. For systems
/// containing all literal polynomials this decides emptiness of the
/// boolean variety.
bool is_consistent(const GroebnerBasis& basis);

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis);

}  // namespace fracgb
