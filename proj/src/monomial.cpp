#include "fracgb/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "fracgb/errors.hpp"

namespace fracgb {

Monomial::Monomial(Exponents exps) : exps_(std::move(exps)) {
  std::sort(exps_.begin(), exps_.end());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i].second <= 0) throw InternalError("monomial exponent must be positive");
    if (i > 0 && exps_[i - 1].first == exps_[i].first)
      throw InternalError("duplicate variable in monomial");
    if (exps_[i].first < 0) throw InternalError("negative variable index in monomial");
  }
}

Monomial Monomial::variable(int var, int exp) { return Monomial({{var, exp}}); }

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& [v, e] : exps_) d += e;
  return d;
}

int Monomial::exponent_of(int var) const {
  for (const auto& [v, e] : exps_) {
    if (v == var) return e;
    if (v > var) break;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Exponents out;
  out.reserve(exps_.size() + other.exps_.size());
  auto a = exps_.begin();
  auto b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      out.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  Monomial m;
  m.exps_ = std::move(out);
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  auto b = other.exps_.begin();
  for (const auto& [v, e] : exps_) {
    while (b != other.exps_.end() && b->first < v) ++b;
    if (b == other.exps_.end() || b->first != v || b->second < e) return false;
  }
  return true;
}

Monomial Monomial::divided_by(const Monomial& other) const {
  Exponents out;
  auto b = other.exps_.begin();
  for (const auto& [v, e] : exps_) {
    int sub = 0;
    while (b != other.exps_.end() && b->first < v) ++b;
    if (b != other.exps_.end() && b->first == v) sub = b->second;
    if (sub > e) throw InternalError("monomial division underflow");
    if (e - sub > 0) out.emplace_back(v, e - sub);
  }
  Monomial m;
  m.exps_ = std::move(out);
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Exponents out;
  auto i = a.exps_.begin();
  auto j = b.exps_.begin();
  while (i != a.exps_.end() || j != b.exps_.end()) {
    if (j == b.exps_.end() || (i != a.exps_.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.exps_.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, std::max(i->second, j->second));
      ++i;
      ++j;
    }
  }
  Monomial m;
  m.exps_ = std::move(out);
  return m;
}

bool Monomial::coprime_with(const Monomial& other) const {
  auto b = other.exps_.begin();
  for (const auto& [v, e] : exps_) {
    while (b != other.exps_.end() && b->first < v) ++b;
    if (b != other.exps_.end() && b->first == v) return false;
  }
  return true;
}

bool lex_less_natural(const Monomial& a, const Monomial& b) {
  // The first variable (ascending index) with differing exponent decides;
  // higher exponent there means the lex-larger monomial.
  auto i = a.exponents().begin();
  auto j = b.exponents().begin();
  while (i != a.exponents().end() && j != b.exponents().end()) {
    if (i->first != j->first) {
      // The side owning the smaller variable index has positive exponent
      // where the other has zero, so it is larger.
      return i->first > j->first;
    }
    if (i->second != j->second) return i->second < j->second;
    ++i;
    ++j;
  }
  return i == a.exponents().end() && j != b.exponents().end();
}

LexOrder::LexOrder(std::vector<int> priority) : priority_(std::move(priority)) {
  std::vector<bool> seen(priority_.size(), false);
  for (int v : priority_) {
    if (v < 0 || v >= num_vars() || seen[v]) throw InternalError("lex order priority is not a permutation");
    seen[v] = true;
  }
  is_natural_ = std::is_sorted(priority_.begin(), priority_.end());
}

LexOrder LexOrder::natural(int num_vars) {
  std::vector<int> ids(num_vars);
  std::iota(ids.begin(), ids.end(), 0);
  return LexOrder(std::move(ids));
}

bool LexOrder::less(const Monomial& a, const Monomial& b) const {
  if (is_natural_) return lex_less_natural(a, b);
  for (int v : priority_) {
    const int ea = a.exponent_of(v);
    const int eb = b.exponent_of(v);
    if (ea != eb) return ea < eb;
  }
  return false;
}

}  // namespace fracgb
