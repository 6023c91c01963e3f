#ifndef CIRCPACK_RATIONAL_H_
#define CIRCPACK_RATIONAL_H_

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace circpack {

// Exact scalar type. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// Rational bracketing of pi: kPiLower < pi < kPiUpper.
Rational pi_lower();
Rational pi_upper();

// Parses "p/q", "p", or a finite decimal such as "-0.35" or "1e-3".
// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

// Always "p/q", including integers ("3/1").
std::string to_string(const Rational& value);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);

Rational pow(const Rational& base, unsigned exponent);

// Exact rational square root if one exists.
bool exact_sqrt(const Rational& value, Rational& root);

// Smallest multiple of 2^-bits that is >= value^(1/index) (value >= 0).
// Returns the exact root when value is a perfect index-th power.
Rational root_upper(const Rational& value, unsigned index, unsigned bits = 32);
// Largest multiple of 2^-bits that is <= value^(1/index), or the exact root.
Rational root_lower(const Rational& value, unsigned index, unsigned bits = 32);

inline Rational sqrt_upper(const Rational& value, unsigned bits = 32) {
  return root_upper(value, 2, bits);
}
inline Rational sqrt_lower(const Rational& value, unsigned bits = 32) {
  return root_lower(value, 2, bits);
}

// value rounded to the nearest multiple of step (ties toward +inf).
Rational round_to_step(const Rational& value, const Rational& step);
Rational floor_to_step(const Rational& value, const Rational& step);
Rational ceil_to_step(const Rational& value, const Rational& step);

// Largest power of two 2^-k (k >= 0) with 2^-k <= bound; bound must be > 0.
Rational dyadic_step_below(const Rational& bound);

int sign(const Rational& value);

}  // namespace circpack

#endif  // CIRCPACK_RATIONAL_H_
