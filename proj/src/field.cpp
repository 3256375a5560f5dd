#include "fracgb/field.hpp"

#include <string>

#include "fracgb/errors.hpp"

namespace fracgb {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void check_pair(std::uint32_t a, std::uint32_t b) {
  if (a != b) throw ArityError("modulus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

void validate_modulus(std::uint32_t p) {
  thread_local std::uint32_t last_ok = 0;
  if (p == last_ok) return;
  if (p <= 27) throw InputError("modulus must exceed 27, got " + std::to_string(p));
  if (!is_prime(p)) throw InputError("modulus must be prime, got " + std::to_string(p));
  last_ok = p;
}

Fp::Fp(long long v, std::uint32_t modulus) : p(modulus) {
  validate_modulus(modulus);
  long long r = v % static_cast<long long>(modulus);
  if (r < 0) r += modulus;
  value = static_cast<std::uint32_t>(r);
}

Fp Fp::operator+(Fp other) const {
  check_pair(p, other.p);
  std::uint32_t s = value + other.value;
  if (s >= p) s -= p;
  return Fp{std::int64_t(s), p};
}

Fp Fp::operator-(Fp other) const {
  check_pair(p, other.p);
  std::uint32_t s = value + p - other.value;
  if (s >= p) s -= p;
  return Fp{std::int64_t(s), p};
}

Fp Fp::operator-() const { return Fp{-std::int64_t(value), p}; }

Fp Fp::operator*(Fp other) const {
  check_pair(p, other.p);
  return Fp{std::int64_t(std::uint64_t(value) * other.value % p), p};
}

Fp Fp::operator/(Fp other) const { return *this * other.inverse(); }

Fp Fp::inverse() const {
  if (value == 0) throw Error("division by zero in GF(" + std::to_string(p) + ")");
  return pow(p - 2);
}

Fp Fp::pow(std::uint64_t e) const {
  std::uint64_t base = value;
  std::uint64_t acc = 1;
  while (e > 0) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return Fp{std::int64_t(acc), p};
}

}  // namespace fracgb
