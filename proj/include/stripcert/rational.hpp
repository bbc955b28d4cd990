#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>
#include <string_view>

namespace stripcert {

// Always canonical (reduced, positive denominator) after every operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational abs(const Rational &q) { return ::abs(q); }

inline int sign(const Rational &q) { return sgn(q); }

inline Integer floor(const Rational &q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Exact value of a finite double (every double is a dyadic rational).
inline Rational from_double(double v) {
  Rational q(v);
  q.canonicalize();
  return q;
}

// Nearest double (get_d truncates toward zero).
inline double to_double(const Rational &q) {
  const double t = q.get_d();
  double best = t;
  Rational err = abs(from_double(t) - q);
  for (double c : {std::nextafter(t, -HUGE_VAL), std::nextafter(t, HUGE_VAL)}) {
    if (!std::isfinite(c))
      continue;
    Rational e = abs(from_double(c) - q);
    if (e < err) {
      err = e;
      best = c;
    }
  }
  return best;
}

Integer binomial(long n, long k);

// "p/q" or "p".
std::string to_string(const Rational &q);

// Accepts integers, "p/q" and decimals with optional exponent ("1.5e-3").
// Throws Error(SyntaxError) on malformed input.
Rational parse_rational(std::string_view text);

} // namespace stripcert
