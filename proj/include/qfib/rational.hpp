#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace qfib {

using Rational = mpq_class;
using Complex = std::complex<double>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline double to_double(const Rational& r) { return r.get_d(); }

inline Complex to_complex(const Rational& r) { return Complex(r.get_d(), 0.0); }

// "3", "-3", "1/2", "-7/4"
inline std::string rational_to_string(const Rational& r) { return r.get_str(); }

std::optional<Rational> rational_from_string(const std::string& s);

// Nearest rational with denominator <= max_den, by continued fractions.
// Used to promote numerically found roots to exact candidates; callers must
// verify the candidate exactly before trusting it.
Rational rational_reconstruct(double x, unsigned long max_den = 1000000UL);

}  // namespace qfib
