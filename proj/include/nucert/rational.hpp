#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nucert {

using Rational = mpq_class;
using BigInt = mpz_class;

// Canonical "p/q" form: lowest terms, q > 0, "/1" kept for integers.
std::string to_fraction_string(const Rational& value);

// Accepts "p/q" or "p" with optional leading sign; throws InputError otherwise
// (including q = 0).
Rational parse_fraction(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) {
  Rational r(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  r.canonicalize();
  return r;
}

// Exact conversion of a finite double.
inline Rational from_double(double value) { return Rational(value); }

inline double to_double(const Rational& value) { return value.get_d(); }

long long floor_div(long long a, long long b);
long long ceil_div(long long a, long long b);

BigInt floor_of(const Rational& value);
BigInt ceil_of(const Rational& value);

}  // namespace nucert
