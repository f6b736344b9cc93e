#pragma once

#include "recurpart/hp.hpp"

#include <string>

namespace testutil {

using recurpart::HPReal;

inline HPReal hp(const char* s) { return recurpart::hp_from_string(s); }

/// |x - expected| <= 10^-digits (absolute)
inline bool near(const HPReal& x, const char* expected, int digits) {
  return boost::multiprecision::abs(x - hp(expected)) <= recurpart::pow10_neg(digits);
}

inline bool near(const HPReal& x, const HPReal& y, int digits) {
  return boost::multiprecision::abs(x - y) <= recurpart::pow10_neg(digits);
}

}  // namespace testutil
