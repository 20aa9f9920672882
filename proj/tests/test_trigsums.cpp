#include "meansq/trigsums.hpp"

#include "meansq/multiplicative.hpp"

#include <doctest.h>

#include <cmath>

using namespace meansq;

TEST_CASE("csc power sum numeric examples") {
    CHECK(csc_power_sum_numeric(1, 3) == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    CHECK(csc_power_sum_numeric(1, 4) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(csc_power_sum_numeric(2, 3) == doctest::Approx(32.0 / 9.0).epsilon(1e-14));
    CHECK_THROWS_AS(csc_power_sum_numeric(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(csc_power_sum_numeric(5, 10), std::invalid_argument);
}

TEST_CASE("csc closed form examples") {
    CHECK(csc_power_sum_closed(1, 3) == Rational(8, 3));
    CHECK(csc_power_sum_closed(2, 3) == Rational(32, 9));  // 80/45 + 16/9
    CHECK(csc_power_sum_closed(4, 3) == Rational(512, 81));
}

TEST_CASE("csc numeric matches closed form, r = 1..4, k <= 400") {
    for (long long k = 3; k <= 400; ++k) {
        for (int r = 1; r <= 4; ++r) {
            double num = csc_power_sum_numeric(r, k);
            double closed = to_double(csc_power_sum_closed(r, k));
            CHECK(std::fabs(num - closed) <= 1e-10 * std::fabs(closed));
        }
    }
}

TEST_CASE("derivation chain replay in exact rationals") {
    for (long long k = 3; k <= 300; ++k) {
        Factorization f = factorize(k);
        // (1/2) csc(2) - (1/3) csc(1) = J4/90
        CHECK(csc_power_sum_closed(2, k) / 2 - csc_power_sum_closed(1, k) / 3 ==
              Rational(jordan_totient(4, f)) / 90);
        // (1/2) csc(3) - (1/2) csc(2) + (1/15) csc(1) = J6/945
        CHECK(csc_power_sum_closed(3, k) / 2 - csc_power_sum_closed(2, k) / 2 +
                  csc_power_sum_closed(1, k) / 15 ==
              Rational(jordan_totient(6, f)) / 945);
    }
}

TEST_CASE("cotangent odd powers cancel") {
    CHECK(cot_odd_power_sum(1, 5) == 0.0);
    CHECK(cot_odd_power_sum(3, 12) == 0.0);
    CHECK(cot_odd_power_sum(7, 30) == 0.0);
    for (long long k : {3, 4, 7, 36, 100, 720, 1999, 2000}) {
        for (int p = 1; p <= 7; p += 2)
            CHECK(std::fabs(cot_odd_power_sum(p, k)) < 1e-9 * static_cast<double>(k));
    }
    CHECK_THROWS_AS(cot_odd_power_sum(2, 10), std::invalid_argument);
}

TEST_CASE("scaled principal L values") {
    CHECK(l_principal_scaled(4, 3) == Rational(8, 9));  // 80/90
    CHECK(l_principal_scaled(6, 5) == Rational(15624, 945));
    CHECK(l_principal_scaled(2, 1) == Rational(1, 6));  // zeta(2) case
    CHECK_THROWS_AS(l_principal_scaled(3, 5), std::invalid_argument);
    CHECK_THROWS_AS(l_principal_scaled(8, 5), std::invalid_argument);
}

TEST_CASE("principal L values against the zeta product") {
    // L(s, chi0 mod k) = zeta(s) * prod_{p|k} (1 - p^-s); spot-check s = 2
    // against zeta(2) = pi^2/6 via the scaled rational.
    const double pi = 3.14159265358979323846;
    for (long long k : {3, 4, 12, 30}) {
        double lhs = to_double(l_principal_scaled(2, k)) * pi * pi /
                     (static_cast<double>(k) * static_cast<double>(k));
        double zeta2 = pi * pi / 6.0;
        double prod = 1.0;
        for (auto [p, a] : factorize(k).factors)
            prod *= 1.0 - 1.0 / (static_cast<double>(p) * static_cast<double>(p));
        CHECK(lhs == doctest::Approx(zeta2 * prod).epsilon(1e-14));
    }
}
