#include "fracgb/groebner.hpp"

#include <algorithm>
#include <set>

#include "fracgb/errors.hpp"

namespace fracgb {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const LexOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomialError("s-polynomial of a zero polynomial");
  const auto [lmf, lcf] = f.leading_term(ord);
  const auto [lmg, lcg] = g.leading_term(ord);
  const Monomial lcm = Monomial::lcm(lmf, lmg);
  return f.times_term(lcm.divided_by(lmf), lcf.inverse()) -
         g.times_term(lcm.divided_by(lmg), lcg.inverse());
}

namespace {

struct Pair {
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

struct PairCmp {
  const LexOrder* ord;
  bool operator()(const Pair& a, const Pair& b) const {
    if (ord->less(a.lcm, b.lcm)) return true;
    if (ord->less(b.lcm, a.lcm)) return false;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> gens, const LexOrder& ord) {
  // Minimalize: drop any generator whose leading monomial is divisible by
  // another's. Processing by ascending leading monomial keeps the smallest
  // representative of duplicate leading monomials.
  std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.less(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  std::vector<Polynomial> minimal;
  for (const auto& g : gens) {
    const Monomial lm = g.leading_term(ord).first;
    bool redundant = false;
    for (const auto& kept : minimal) {
      if (kept.leading_term(ord).first.divides(lm)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) minimal.push_back(g);
  }

  // Reduce every generator against the others until nothing changes.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      others.reserve(minimal.size() - 1);
      for (std::size_t k = 0; k < minimal.size(); ++k) {
        if (k != i) others.push_back(minimal[k]);
      }
      if (others.empty()) continue;
      Polynomial r = normal_form(minimal[i], others, ord);
      if (r == minimal[i]) continue;
      changed = true;
      if (r.is_zero()) {
        minimal.erase(minimal.begin() + static_cast<std::ptrdiff_t>(i));
        --i;
      } else {
        minimal[i] = r.monic(ord);
      }
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.greater(a.leading_term(ord).first, b.leading_term(ord).first);
  });
  return minimal;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& generators, const LexOrder& ord) {
  std::vector<Polynomial> basis;
  for (const auto& f : generators) {
    if (!f.is_zero()) basis.push_back(f);
  }

  std::set<Pair, PairCmp> pairs(PairCmp{&ord});
  auto queue_pairs_with = [&](std::size_t j) {
    const Monomial lmj = basis[j].leading_term(ord).first;
    for (std::size_t i = 0; i < j; ++i) {
      pairs.insert(Pair{Monomial::lcm(basis[i].leading_term(ord).first, lmj), i, j});
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) queue_pairs_with(j);

  while (!pairs.empty()) {
    const Pair pair = *pairs.begin();
    pairs.erase(pairs.begin());
    const Monomial lmi = basis[pair.i].leading_term(ord).first;
    const Monomial lmj = basis[pair.j].leading_term(ord).first;
    if (lmi.coprime_with(lmj)) continue;
    const Polynomial s = s_polynomial(basis[pair.i], basis[pair.j], ord);
    const Polynomial r = normal_form(s, basis, ord);
    if (!r.is_zero()) {
      basis.push_back(r);
      queue_pairs_with(basis.size() - 1);
    }
  }

  for (auto& g : basis) g = g.monic(ord);
  return GroebnerBasis{interreduce(std::move(basis), ord), ord};
}

bool is_consistent(const GroebnerBasis& basis) {
  for (const auto& g : basis.generators) {
    if (g.is_constant() && !g.is_zero()) return false;
  }
  return true;
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& basis) {
  if (f.is_zero()) return true;
  if (basis.generators.empty()) return false;
  return normal_form(f, basis.generators, basis.order).is_zero();
}

}  // namespace fracgb
