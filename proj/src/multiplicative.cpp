#include "meansq/multiplicative.hpp"

#include <algorithm>
#include <stdexcept>

namespace meansq {

Factorization factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    Factorization f;
    f.n = n;
    long long m = n;
    for (long long p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p) continue;
        int a = 0;
        while (m % p == 0) {
            m /= p;
            ++a;
        }
        f.factors.emplace_back(p, a);
    }
    if (m > 1) f.factors.emplace_back(m, 1);
    return f;
}

long long euler_phi(const Factorization& f) {
    long long phi = 1;
    for (auto [p, a] : f.factors) {
        long long pk = 1;
        for (int i = 1; i < a; ++i) pk *= p;
        phi *= pk * (p - 1);
    }
    return phi;
}

long long euler_phi(long long n) { return euler_phi(factorize(n)); }

BigInt jordan_totient(int s, const Factorization& f) {
    if (s < 1) throw std::invalid_argument("jordan_totient: s must be >= 1");
    BigInt j = 1;
    for (auto [p, a] : f.factors) {
        BigInt ps = boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s));
        j *= boost::multiprecision::pow(ps, static_cast<unsigned>(a - 1)) * (ps - 1);
    }
    return j;
}

BigInt jordan_totient(int s, long long n) { return jordan_totient(s, factorize(n)); }

int mobius(const Factorization& f) {
    for (auto [p, a] : f.factors)
        if (a >= 2) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

int mobius(long long n) { return mobius(factorize(n)); }

std::vector<long long> divisors(const Factorization& f) {
    std::vector<long long> divs{1};
    for (auto [p, a] : f.factors) {
        std::size_t old = divs.size();
        long long pk = 1;
        for (int i = 1; i <= a; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < old; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<long long> divisors(long long n) { return divisors(factorize(n)); }

BigInt prime_product_one_minus_pow(int s, const Factorization& f) {
    BigInt prod = 1;
    for (auto [p, a] : f.factors)
        prod *= 1 - boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(s));
    return prod;
}

BigInt phi4_closed(long long n) {
    // The Mobius-inversion behind the formula drops a (1/2) sum mu(n/d)
    // term that vanishes only for n > 1; at n = 1 the displayed form gives
    // 1/2. phi_4(1) = 1 directly.
    if (n == 1) return 1;
    Factorization f = factorize(n);
    BigInt n4 = boost::multiprecision::pow(BigInt(n), 4);
    Rational value = Rational(n4 * euler_phi(f)) / 5;
    value += Rational(BigInt(n) * n * n * prime_product_one_minus_pow(1, f)) / 3;
    value -= Rational(BigInt(n) * prime_product_one_minus_pow(3, f)) / 30;
    return to_integer_exact(value, "phi4_closed");
}

BigInt power_coprime_sum_direct(int e, long long n) {
    if (e < 0) throw std::invalid_argument("power_coprime_sum_direct: e must be >= 0");
    if (n < 1) throw std::invalid_argument("power_coprime_sum_direct: n must be >= 1");
    Factorization f = factorize(n);
    // Mark the non-coprime residues once instead of n gcd calls.
    std::vector<char> blocked(static_cast<std::size_t>(n) + 1, 0);
    for (auto [p, a] : f.factors)
        for (long long j = p; j <= n; j += p) blocked[static_cast<std::size_t>(j)] = 1;

    // Fast path: the whole sum fits in 128 bits whenever (e+1)*log2(n+1) < 127.
    int bits = 64 - __builtin_clzll(static_cast<unsigned long long>(n) + 1);
    if ((e + 1) * bits < 126) {
        unsigned __int128 acc = 0;
        for (long long j = 1; j <= n; ++j) {
            if (blocked[static_cast<std::size_t>(j)]) continue;
            unsigned __int128 t = 1;
            for (int i = 0; i < e; ++i) t *= static_cast<unsigned long long>(j);
            acc += t;
        }
        BigInt out = static_cast<unsigned long long>(acc >> 64);
        out <<= 64;
        out += static_cast<unsigned long long>(acc);
        return out;
    }
    BigInt acc = 0;
    for (long long j = 1; j <= n; ++j) {
        if (blocked[static_cast<std::size_t>(j)]) continue;
        acc += boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(e));
    }
    return acc;
}

}  // namespace meansq
