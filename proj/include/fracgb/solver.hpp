#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "fracgb/encode.hpp"
#include "fracgb/groebner.hpp"
#include "fracgb/rational.hpp"

namespace fracgb {

enum class Strategy { Empty, Greedy, Random };

const char* strategy_name(Strategy s);

/// Solution of the q-fractional problem: the ignored variable set Y', the
/// surviving polynomials (those mentioning no ignored variable), their
/// Groebner basis, and the induced partition of the predicate polynomials.
struct FractionalSolution {
  std::set<int> ignored_vars;
  std::vector<Polynomial> surviving;
  std::vector<int> surviving_ids;  // predicate ids in the surviving set (P_R)
  std::vector<int> ignored_ids;    // predicate ids touched by Y' (P_D)
  GroebnerBasis basis;
  Rational q;
  long long total_polys = 0;
  long long ignored_polys = 0;  // |F_{Y'}|
};

/// Picks Y' subject to |F_{Y'}| <= (1-q)|F| (exact rational comparison).
/// Empty always returns {}; Greedy adds the variable with the smallest
/// marginal growth of |F_{Y'}| (ties to the lowest index) while the budget
/// allows; Random adds uniformly among the still-legal variables.
std::set<int> select_ignore_set(const PolynomialSystem& sys, const Rational& q, Strategy strategy,
                                std::uint64_t seed);

FractionalSolution solve_fractional(const PolynomialSystem& sys, const Rational& q, Strategy strategy,
                                    std::uint64_t seed, const LexOrder& ord);

/// Finds a common boolean zero of the surviving system by successive
/// elimination: variables are processed from lex-smallest to lex-largest,
/// trying 0 before 1 and keeping the first value under which the
/// substituted system stays consistent (test: full basis recomputation).
std::map<int, int> extract_point(const FractionalSolution& sol, const LexOrder& ord);

/// |P_R| >= (1/4 + 5/2 eps)|P| for Not-2 and (1/2 + 5/2 eps)|P| for OXR,
/// where eps = q - 7/10 resp. q - 4/5. Negative eps disables the check.
bool budget_inequality_holds(long long surviving_predicates, long long total_predicates,
                             const Rational& q, Kind kind);

bool check_budget_inequality(const FractionalSolution& sol, long long total_predicates, Kind kind);

}  // namespace fracgb
