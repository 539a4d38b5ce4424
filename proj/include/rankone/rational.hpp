#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rankone {

/// Exact rational scalar. All geometry in this library is done over Q.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

/// Canonical "p/q" form, q > 0, gcd(p, q) = 1. Integers are still written with "/1".
std::string to_string(const Rational& value);

/// Parses "p/q" or "p". Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Short human form: "3", "-1/2". Used by tables and diagrams only.
std::string to_short_string(const Rational& value);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den < 0 ? -den : den));
  if (den < 0) r = -r;
  r.canonicalize();
  return r;
}

RationalVector zeros(std::size_t n);

RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
RationalVector operator-(const RationalVector& v);

bool is_zero(const RationalVector& v);

}  // namespace rankone
