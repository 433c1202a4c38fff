#pragma once

#include <gmpxx.h>

#include <string>

namespace smap {

using Rational = mpq_class;

/* "p/q", or "p" when the denominator is 1 */
std::string to_string(const Rational& x);

/* accepts "p", "-p", "p/q"; throws std::invalid_argument otherwise */
Rational parse_rational(const std::string& s);

Rational binomial(long n, long k);

/* p/q in lowest terms; throws std::invalid_argument when q = 0 */
Rational ratio(long p, long q);

}  // namespace smap
