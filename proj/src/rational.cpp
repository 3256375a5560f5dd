#include "fracgb/rational.hpp"

#include <cstdlib>
#include <stdexcept>

#include "fracgb/errors.hpp"

namespace fracgb {

std::string to_string(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      return Rational(std::stoll(std::string(text)), 1);
    }
    const long long num = std::stoll(std::string(text.substr(0, slash)));
    const long long den = std::stoll(std::string(text.substr(slash + 1)));
    if (den == 0) throw InputError("zero denominator in rational: " + std::string(text));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw InputError("malformed rational: " + std::string(text));
  } catch (const std::out_of_range&) {
    throw InputError("rational out of range: " + std::string(text));
  }
}

}  // namespace fracgb
