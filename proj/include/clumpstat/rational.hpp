#pragma once

#include <gmpxx.h>

#include <string>

namespace clumpstat {

// All probabilities and generating-function coefficients are exact rationals.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Parses "num/den" or a plain integer. Throws std::invalid_argument on junk.
Rat parse_rational(const std::string& text);

// "num/den", or just "num" when the denominator is 1.
std::string rat_string(const Rat& q);

// Fixed-precision decimal rendering, e.g. 15 significant digits.
std::string rat_decimal(const Rat& q, int digits = 15);

}  // namespace clumpstat
