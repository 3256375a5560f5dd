#include "fracgb/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "fracgb/errors.hpp"

namespace fracgb {

namespace {

void check_ring(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() != b.num_vars())
    throw ArityError("ring arity mismatch: " + std::to_string(a.num_vars()) + " vs " +
                     std::to_string(b.num_vars()));
  if (a.modulus() != b.modulus())
    throw ArityError("modulus mismatch: " + std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
}

}  // namespace

Polynomial::Polynomial(int num_vars, std::uint32_t modulus) : num_vars_(num_vars), modulus_(modulus) {
  validate_modulus(modulus);
  if (num_vars < 0) throw ArityError("negative ring arity");
}

Polynomial Polynomial::constant(int num_vars, std::uint32_t modulus, long long c) {
  Polynomial p(num_vars, modulus);
  p.add_term(Monomial{}, c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, std::uint32_t modulus, int var) {
  Polynomial p(num_vars, modulus);
  p.add_term(Monomial::variable(var), 1);
  return p;
}

void Polynomial::add_term(const Monomial& mono, long long coeff) {
  if (!mono.is_unit() && mono.exponents().back().first >= num_vars_)
    throw ArityError("variable index out of ring range");
  const Fp c(coeff, modulus_);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mono, c.value);
  if (!inserted) {
    const Fp merged = Fp(it->second, modulus_) + c;
    if (merged.is_zero()) {
      terms_.erase(it);
    } else {
      it->second = merged.value;
    }
  }
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

std::set<int> Polynomial::support() const {
  std::set<int> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.exponents()) vars.insert(v);
  }
  return vars;
}

std::pair<Monomial, Fp> Polynomial::leading_term(const LexOrder& ord) const {
  if (terms_.empty()) throw ZeroPolynomialError("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it) {
    if (ord.greater(it->first, best->first)) best = it;
  }
  return {best->first, Fp(best->second, modulus_)};
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_ring(*this, other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_ring(*this, other);
  Polynomial out = *this;
  for (const auto& [m, c] : other.terms_) out.add_term(m, -static_cast<long long>(c));
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(num_vars_, modulus_);
  for (const auto& [m, c] : terms_) out.add_term(m, -static_cast<long long>(c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_ring(*this, other);
  Polynomial out(num_vars_, modulus_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) {
      out.add_term(ma * mb, static_cast<long long>(std::uint64_t(ca) * cb % modulus_));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(const Fp& c) const {
  Polynomial out(num_vars_, modulus_);
  for (const auto& [m, v] : terms_) {
    out.add_term(m, static_cast<long long>(std::uint64_t(v) * c.value % modulus_));
  }
  return out;
}

Polynomial Polynomial::times_term(const Monomial& mono, const Fp& c) const {
  Polynomial out(num_vars_, modulus_);
  for (const auto& [m, v] : terms_) {
    out.add_term(m * mono, static_cast<long long>(std::uint64_t(v) * c.value % modulus_));
  }
  return out;
}

Polynomial Polynomial::monic(const LexOrder& ord) const {
  const auto [lm, lc] = leading_term(ord);
  return scaled(lc.inverse());
}

Polynomial Polynomial::substituted(int var, std::uint32_t value) const {
  Polynomial out(num_vars_, modulus_);
  const Fp val(value, modulus_);
  for (const auto& [m, c] : terms_) {
    const int e = m.exponent_of(var);
    if (e == 0) {
      out.add_term(m, c);
      continue;
    }
    const Fp scale = val.pow(e);
    if (scale.is_zero()) continue;
    out.add_term(m.divided_by(Monomial::variable(var, e)),
                 static_cast<long long>(std::uint64_t(c) * scale.value % modulus_));
  }
  return out;
}

Fp Polynomial::evaluate(const std::map<int, std::uint32_t>& point) const {
  Fp acc(0, modulus_);
  for (const auto& [m, c] : terms_) {
    Fp term(c, modulus_);
    for (const auto& [v, e] : m.exponents()) {
      auto it = point.find(v);
      if (it == point.end())
        throw UnassignedVariableError("variable y" + std::to_string(v + 1) + " unassigned");
      term = term * Fp(it->second, modulus_).pow(e);
    }
    acc = acc + term;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    if (m.is_unit()) {
      out << c;
      continue;
    }
    if (c != 1) out << c << "*";
    bool first_var = true;
    for (const auto& [v, e] : m.exponents()) {
      if (!first_var) out << "*";
      first_var = false;
      out << "y" << (v + 1);
      if (e > 1) out << "^" << e;
    }
  }
  return out.str();
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw InputError("expected integer in polynomial text");
    try {
      return std::stoll(std::string(text.substr(start, pos - start)));
    } catch (const std::out_of_range&) {
      throw InputError("integer out of range in polynomial text");
    }
  }
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, int num_vars, std::uint32_t modulus) {
  Polynomial out(num_vars, modulus);
  Cursor cur{text};
  if (cur.done()) throw InputError("empty polynomial text");
  bool negative = cur.accept('-');
  while (true) {
    long long coeff = 1;
    Monomial mono;
    bool saw_factor = false;
    while (true) {
      if (!cur.done() && cur.peek() == 'y') {
        cur.accept('y');
        const long long var = cur.integer();
        if (var < 1 || var > num_vars)
          throw InputError("variable y" + std::to_string(var) + " outside ring of " +
                           std::to_string(num_vars) + " variables");
        long long exp = 1;
        if (cur.accept('^')) exp = cur.integer();
        if (exp < 1) throw InputError("exponent must be positive");
        mono = mono * Monomial::variable(static_cast<int>(var - 1), static_cast<int>(exp));
        saw_factor = true;
      } else {
        const long long c = cur.integer();
        coeff = coeff % static_cast<long long>(modulus) * (c % static_cast<long long>(modulus)) %
                static_cast<long long>(modulus);
        saw_factor = true;
      }
      if (!cur.accept('*')) break;
    }
    if (!saw_factor) throw InputError("empty term in polynomial text");
    out.add_term(mono, negative ? -coeff : coeff);
    if (cur.done()) break;
    if (cur.accept('+')) {
      negative = false;
    } else if (cur.accept('-')) {
      negative = true;
    } else {
      throw InputError("unexpected character in polynomial text");
    }
  }
  return out;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors, const LexOrder& ord) {
  for (const auto& g : divisors) {
    check_ring(f, g);
    if (g.is_zero()) throw ZeroPolynomialError("zero divisor in division");
  }
  std::vector<std::pair<Monomial, Fp>> leads;
  leads.reserve(divisors.size());
  for (const auto& g : divisors) leads.push_back(g.leading_term(ord));

  DivisionResult res{std::vector<Polynomial>(divisors.size(), Polynomial(f.num_vars(), f.modulus())),
                     Polynomial(f.num_vars(), f.modulus())};
  Polynomial h = f;
  while (!h.is_zero()) {
    const auto [lm, lc] = h.leading_term(ord);
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!leads[i].first.divides(lm)) continue;
      const Monomial shift = lm.divided_by(leads[i].first);
      const Fp factor = lc / leads[i].second;
      res.quotients[i].add_term(shift, factor.value);
      h = h - divisors[i].times_term(shift, factor);
      reduced = true;
      break;
    }
    if (!reduced) {
      res.remainder.add_term(lm, lc.value);
      h.add_term(lm, -static_cast<long long>(lc.value));
    }
  }
  return res;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& divisors, const LexOrder& ord) {
  return divide(f, divisors, ord).remainder;
}

}  // namespace fracgb
