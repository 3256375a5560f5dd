#include "fracgb/solver.hpp"

#include <algorithm>
#include <random>

#include "fracgb/errors.hpp"

namespace fracgb {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Empty: return "empty";
    case Strategy::Greedy: return "greedy";
    case Strategy::Random: return "random";
  }
  return "?";
}

namespace {

struct Incidence {
  std::vector<std::set<int>> supports;       // per polynomial
  std::vector<std::vector<int>> polys_of;    // per variable
  std::vector<bool> touched;
  long long touched_count = 0;

  explicit Incidence(const PolynomialSystem& sys) : polys_of(sys.num_vars) {
    const auto polys = sys.all_polys();
    supports.reserve(polys.size());
    for (std::size_t i = 0; i < polys.size(); ++i) {
      supports.push_back(polys[i].support());
      for (int v : supports.back()) polys_of[v].push_back(static_cast<int>(i));
    }
    touched.assign(polys.size(), false);
  }

  long long marginal(int var) const {
    long long add = 0;
    for (int i : polys_of[var]) {
      if (!touched[i]) ++add;
    }
    return add;
  }

  void add(int var) {
    for (int i : polys_of[var]) {
      if (!touched[i]) {
        touched[i] = true;
        ++touched_count;
      }
    }
  }
};

bool within_budget(long long touched, const Rational& q, long long total) {
  return Rational(touched, 1) <= (Rational(1, 1) - q) * Rational(total, 1);
}

}  // namespace

std::set<int> select_ignore_set(const PolynomialSystem& sys, const Rational& q, Strategy strategy,
                                std::uint64_t seed) {
  if (q < Rational(0, 1) || q > Rational(1, 1)) throw InputError("q must lie in [0, 1]");
  std::set<int> ignored;
  if (strategy == Strategy::Empty || sys.num_vars == 0) return ignored;

  Incidence inc(sys);
  const long long total = static_cast<long long>(sys.size());
  std::mt19937_64 rng(seed);

  while (static_cast<int>(ignored.size()) < sys.num_vars) {
    std::vector<int> legal;
    long long best_marginal = -1;
    int best_var = -1;
    for (int v = 0; v < sys.num_vars; ++v) {
      if (ignored.contains(v)) continue;
      const long long m = inc.marginal(v);
      if (!within_budget(inc.touched_count + m, q, total)) continue;
      if (strategy == Strategy::Random) {
        legal.push_back(v);
      } else if (best_var < 0 || m < best_marginal) {
        best_marginal = m;
        best_var = v;
      }
    }
    int pick = -1;
    if (strategy == Strategy::Random) {
      if (legal.empty()) break;
      pick = legal[std::uniform_int_distribution<std::size_t>(0, legal.size() - 1)(rng)];
    } else {
      if (best_var < 0) break;
      pick = best_var;
    }
    ignored.insert(pick);
    inc.add(pick);
  }
  return ignored;
}

FractionalSolution solve_fractional(const PolynomialSystem& sys, const Rational& q, Strategy strategy,
                                    std::uint64_t seed, const LexOrder& ord) {
  FractionalSolution sol;
  sol.q = q;
  sol.total_polys = static_cast<long long>(sys.size());
  sol.ignored_vars = select_ignore_set(sys, q, strategy, seed);

  auto touches_ignored = [&](const Polynomial& poly) {
    for (int v : poly.support()) {
      if (sol.ignored_vars.contains(v)) return true;
    }
    return false;
  };

  for (const Polynomial& poly : sys.literal_polys) {
    if (touches_ignored(poly)) {
      ++sol.ignored_polys;
    } else {
      sol.surviving.push_back(poly);
    }
  }
  for (const auto& [poly, id] : sys.predicate_polys) {
    if (touches_ignored(poly)) {
      ++sol.ignored_polys;
      sol.ignored_ids.push_back(id);
    } else {
      sol.surviving.push_back(poly);
      sol.surviving_ids.push_back(id);
    }
  }

  if (!within_budget(sol.ignored_polys, q, sol.total_polys))
    throw InternalError("selected ignore set exceeds the budget");

  sol.basis = buchberger(sol.surviving, ord);
  return sol;
}

std::map<int, int> extract_point(const FractionalSolution& sol, const LexOrder& ord) {
  if (!is_consistent(sol.basis))
    throw InconsistentSystemError("cannot extract a point from an inconsistent system");

  // Lex-smallest variables first: reversed priority order, ignored skipped.
  std::vector<int> vars;
  for (auto it = ord.priority().rbegin(); it != ord.priority().rend(); ++it) {
    if (!sol.ignored_vars.contains(*it)) vars.push_back(*it);
  }

  std::map<int, int> point;
  std::vector<Polynomial> gens = sol.basis.generators;
  for (int var : vars) {
    bool extended = false;
    for (int value = 0; value <= 1 && !extended; ++value) {
      std::vector<Polynomial> substituted;
      substituted.reserve(gens.size());
      for (const Polynomial& g : gens) {
        Polynomial s = g.substituted(var, static_cast<std::uint32_t>(value));
        if (!s.is_zero()) substituted.push_back(std::move(s));
      }
      GroebnerBasis next = buchberger(substituted, ord);
      if (is_consistent(next)) {
        point[var] = value;
        gens = std::move(next.generators);
        extended = true;
      }
    }
    if (!extended)
      throw InconsistentSystemError("no boolean value extends the partial point at y" +
                                    std::to_string(var + 1));
  }
  return point;
}

bool budget_inequality_holds(long long surviving_predicates, long long total_predicates,
                             const Rational& q, Kind kind) {
  const Rational threshold = kind == Kind::Not2 ? Rational(7, 10) : Rational(4, 5);
  const Rational epsilon = q - threshold;
  if (epsilon < Rational(0, 1)) return true;  // guarantee undefined below the threshold
  const Rational base = kind == Kind::Not2 ? Rational(1, 4) : Rational(1, 2);
  const Rational required = (base + Rational(5, 2) * epsilon) * Rational(total_predicates, 1);
  return Rational(surviving_predicates, 1) >= required;
}

bool check_budget_inequality(const FractionalSolution& sol, long long total_predicates, Kind kind) {
  return budget_inequality_holds(static_cast<long long>(sol.surviving_ids.size()), total_predicates,
                                 sol.q, kind);
}

}  // namespace fracgb
