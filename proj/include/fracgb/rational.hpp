#pragma once

#include <boost/rational.hpp>
#include <string>
#include <string_view>

namespace fracgb {

/// Exact rational arithmetic for probabilities, fractions and budgets.
/// Denominators at desk scale stay tiny, so a 64-bit backing type is ample.
using Rational = boost::rational<long long>;

/// Renders as "a/b" with b >= 1, e.g. "3/4", "15/1".
std::string to_string(const Rational& r);

/// Accepts "a/b" or a bare integer "a".
Rational parse_rational(std::string_view text);

}  // namespace fracgb
