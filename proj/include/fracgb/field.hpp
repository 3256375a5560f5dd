#pragma once

#include <cstdint>

namespace fracgb {

/// Checks that p is prime and large enough that integer predicate values in
/// [-27, 27] vanish mod p only when they vanish over the integers.
/// Throws InputError otherwise. Results are memoized per thread.
void validate_modulus(std::uint32_t p);

/// Element of GF(p). Always normalized into [0, p).
struct Fp {
  std::uint32_t value = 0;
  std::uint32_t p = 0;

  Fp() = default;
  Fp(long long v, std::uint32_t modulus);

  bool is_zero() const { return value == 0; }

  Fp operator+(Fp other) const;
  Fp operator-(Fp other) const;
  Fp operator-() const;
  Fp operator*(Fp other) const;
  Fp operator/(Fp other) const;
  Fp inverse() const;
  Fp pow(std::uint64_t e) const;

  bool operator==(const Fp& other) const = default;
};

}  // namespace fracgb
