#pragma once

// Exact arithmetic: arbitrary-precision integers and rationals, Bernoulli
// numbers. Rationals are always in lowest terms with positive denominator
// (cpp_rational canonicalizes on construction), so equality is structural.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace meansq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Nearest double. Out-of-range magnitudes come back as +-inf (never throws),
// underflow as (signed) zero; callers report rather than abort on those.
double to_double(const Rational& x);

// "p/q" in lowest terms, or just "p" when q == 1.
std::string to_fraction_string(const Rational& x);

bool is_integer(const Rational& x);

// Exact integer value; throws std::logic_error if x is not an integer.
// Used by the closed forms that must be integral (a non-integer result
// there is a transcription bug, not a rounding matter).
BigInt to_integer_exact(const Rational& x, const char* what);

BigInt binomial(unsigned n, unsigned r);

// q-th Bernoulli number, B1 = -1/2 convention. Computed by the recurrence
//   sum_{j=0}^{m} C(m+1,j) B_j = 0,  B_0 = 1,
// memoized up to the largest q requested (guarded; safe to call
// concurrently). Returned by value so callers never hold a reference into
// the growing table.
Rational bernoulli(unsigned q);

}  // namespace meansq
