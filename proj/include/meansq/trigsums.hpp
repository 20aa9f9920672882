#pragma once

// Cosecant power sums over reduced residues and their Jordan-totient closed
// forms, the cotangent odd-power cancellation sums, and the principal-
// character L values that anchor the closed-form derivations:
//
//   sum 1/sin^2 = J2/3                     sum 1/sin^6 = 2J6/945 + J4/45 + 8J2/45
//   sum 1/sin^4 = J4/45 + 2J2/9            sum 1/sin^8 = J8/4725 + 8J6/2835
//                                                        + 14J4/675 + 16J2/105
//   (k^s/pi^s) L(s,chi0) = J2/6, J4/90, J6/945   for s = 2, 4, 6

#include "meansq/rational.hpp"

namespace meansq {

// sum over reduced residues m of sin(pi*m/k)^(-2r), r in 1..4.
// Throws std::invalid_argument for k < 3 (k = 1, 2 are degenerate).
double csc_power_sum_numeric(int r, long long k);

// The exact closed form of the same sum.
Rational csc_power_sum_closed(int r, long long k);

// sum over reduced residues of cot^p(pi*m/k) for odd p <= 7; zero by the
// m <-> k-m cancellation. Summed in symmetric pairs so the cancellation is
// exact in floating point as well.
double cot_odd_power_sum(int p, long long k);

// (k^s/pi^s) * L(s, chi0 mod k) as an exact rational, s in {2, 4, 6}.
Rational l_principal_scaled(int s, long long k);

}  // namespace meansq
