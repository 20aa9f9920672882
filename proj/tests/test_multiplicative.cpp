#include "meansq/multiplicative.hpp"

#include <doctest.h>

#include <numeric>

using namespace meansq;

namespace {

// brute-force oracles, independent of the library paths they check
long long phi_direct(long long n) {
    long long c = 0;
    for (long long j = 1; j <= n; ++j) c += std::gcd(j, n) == 1 ? 1 : 0;
    return c;
}

bool is_prime_direct(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("factorize examples and reconstruction") {
    CHECK(factorize(1).factors.empty());
    Factorization f12 = factorize(12);
    CHECK(f12.factors == std::vector<std::pair<long long, int>>{{2, 2}, {3, 1}});
    CHECK(is_prime_direct(9973));
    CHECK(factorize(9973).factors == std::vector<std::pair<long long, int>>{{9973, 1}});
    CHECK_THROWS_AS(factorize(0), std::invalid_argument);

    for (long long n = 1; n <= 3000; ++n) {
        long long prod = 1;
        long long last_p = 0;
        for (auto [p, a] : factorize(n).factors) {
            CHECK(p > last_p);
            CHECK(is_prime_direct(p));
            CHECK(a >= 1);
            last_p = p;
            for (int i = 0; i < a; ++i) prod *= p;
        }
        CHECK(prod == n);
    }
}

TEST_CASE("euler_phi examples and direct count") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
    for (long long n = 1; n <= 500; ++n) CHECK(euler_phi(n) == phi_direct(n));
}

TEST_CASE("jordan_totient examples") {
    CHECK(jordan_totient(2, 5) == 24);
    CHECK(jordan_totient(6, 3) == 728);
    for (int s = 1; s <= 8; ++s) CHECK(jordan_totient(s, 1) == 1);
    for (long long n = 1; n <= 300; ++n) CHECK(jordan_totient(1, n) == euler_phi(n));
}

TEST_CASE("mobius examples") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(9973) == -1);
    CHECK(mobius(4) == 0);
}

TEST_CASE("divisors examples") {
    CHECK(divisors(1) == std::vector<long long>{1});
    CHECK(divisors(12) == std::vector<long long>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<long long>{1, 7, 49});
}

TEST_CASE("multiplicativity on coprime pairs with mn <= 10^4") {
    for (long long m = 1; m <= 100; ++m) {
        for (long long n = m; m * n <= 10000; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
            CHECK(mobius(m * n) == mobius(m) * mobius(n));
            for (int s : {2, 4})
                CHECK(jordan_totient(s, m * n) == jordan_totient(s, m) * jordan_totient(s, n));
        }
    }
}

TEST_CASE("power_coprime_sum_direct examples") {
    CHECK(power_coprime_sum_direct(4, 5) == 354);  // 1 + 16 + 81 + 256
    CHECK(power_coprime_sum_direct(0, 12) == 4);
    CHECK(power_coprime_sum_direct(1, 1) == 1);
}

TEST_CASE("phi4_closed examples and oracle sweep") {
    CHECK(phi4_closed(1) == 1);
    CHECK(phi4_closed(5) == 354);
    CHECK(phi4_closed(6) == 626);  // 1^4 + 5^4
    for (long long n = 1; n <= 2000; ++n) CHECK(phi4_closed(n) == power_coprime_sum_direct(4, n));
}

TEST_CASE("divisor-sum identity: sum phi4(d)/d^4 = (1^4+...+n^4)/n^4, n <= 500") {
    for (long long n = 1; n <= 500; ++n) {
        Rational lhs = 0;
        for (long long d : divisors(n))
            lhs += Rational(phi4_closed(d)) / Rational(boost::multiprecision::pow(BigInt(d), 4));
        BigInt top = 0;
        for (long long j = 1; j <= n; ++j) top += boost::multiprecision::pow(BigInt(j), 4);
        Rational rhs = Rational(top) / Rational(boost::multiprecision::pow(BigInt(n), 4));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("mobius divisor identities, n <= 10^4") {
    for (long long n = 1; n <= 10000; ++n) {
        Factorization f = factorize(n);
        BigInt mu_phi = 0, mu_cube = 0;
        for (long long d : divisors(f)) {
            mu_phi += BigInt(d) * mobius(n / d);
            mu_cube += BigInt(d) * d * d * mobius(d);
        }
        CHECK(mu_phi == euler_phi(f));
        CHECK(mu_cube == prime_product_one_minus_pow(3, f));
    }
}
