#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace sto {

/// Exact cost arithmetic. Ledger totals and predicted plan costs are compared
/// bit-exactly, so costs are never stored as floating point.
using Rational = boost::rational<std::int64_t>;

/// Parses "3", "-0.25", "1/20" into an exact rational.
Rational rational_from_string(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace sto
