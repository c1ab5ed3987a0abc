#pragma once

#include <gmpxx.h>

#include <string>

namespace cocond {

// Exact rational number. GMP keeps values canonical (reduced, positive
// denominator) as long as arithmetic goes through mpq_class operators.
using Rat = mpq_class;

// Accepts "p", "p/q" and decimal literals like "0.25" or ".5"; all parsed
// exactly. Throws std::invalid_argument on malformed input or q == 0.
Rat parse_rational(const std::string& text);

// Renders "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& r);

// mpq_class(num, den) does not reduce; GMP arithmetic and equality assume
// canonical operands. Use this instead of the two-argument constructor.
inline Rat frac(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool in_unit_interval(const Rat& r) { return r >= 0 && r <= 1; }

}  // namespace cocond
