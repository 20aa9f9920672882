#pragma once

// Factorization and the multiplicative functions the closed forms are
// written in: Euler phi, Jordan totients J_s, Mobius mu, divisor lists,
// and the phi_4 closed form with its brute-force companion.

#include "meansq/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace meansq {

struct Factorization {
    long long n = 1;
    // (prime, exponent), primes strictly increasing, exponents >= 1.
    // n == 1 has an empty list.
    std::vector<std::pair<long long, int>> factors;
};

// Trial division up to sqrt(n). Throws std::invalid_argument for n < 1.
Factorization factorize(long long n);

long long euler_phi(long long n);
long long euler_phi(const Factorization& f);

// J_s(n) = n^s prod_{p|n} (1 - p^-s) = prod p^{s(a-1)} (p^s - 1).
// J_1 = Euler phi. Grows past 64 bits quickly (J_8(2000) ~ 2.5e26).
BigInt jordan_totient(int s, long long n);
BigInt jordan_totient(int s, const Factorization& f);

// 0 if any square divides n, else (-1)^{#prime factors}.
int mobius(long long n);
int mobius(const Factorization& f);

// All divisors of n, ascending.
std::vector<long long> divisors(long long n);
std::vector<long long> divisors(const Factorization& f);

// prod_{p|n} (1 - p^s), the products appearing in the phi_4 closed form.
BigInt prime_product_one_minus_pow(int s, const Factorization& f);

// phi_4(n) = n^4 phi(n)/5 + (n^3/3) prod_{p|n}(1-p) - (n/30) prod_{p|n}(1-p^3),
// evaluated literally in exact rationals; throws std::logic_error if the
// result fails to be an integer (transcription bug, never rounded over).
BigInt phi4_closed(long long n);

// sum of j^e over 1 <= j <= n with gcd(j, n) = 1, by direct summation.
// The brute-force oracle for phi4_closed (e = 4); e = 0 counts phi(n).
BigInt power_coprime_sum_direct(int e, long long n);

}  // namespace meansq
