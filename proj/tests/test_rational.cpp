#include "meansq/rational.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace meansq;

TEST_CASE("bernoulli matches the tabulated values") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == Rational(-1, 2));
    CHECK(bernoulli(2) == Rational(1, 6));
    CHECK(bernoulli(3) == Rational(0));
    CHECK(bernoulli(4) == Rational(-1, 30));
    CHECK(bernoulli(6) == Rational(1, 42));
    CHECK(bernoulli(12) == Rational(-691, 2730));
}

TEST_CASE("odd bernoulli numbers vanish beyond B1") {
    for (unsigned m = 1; m <= 15; ++m) CHECK(bernoulli(2 * m + 1) == Rational(0));
}

TEST_CASE("bernoulli recurrence closes exactly up to m = 20") {
    for (unsigned m = 1; m <= 20; ++m) {
        Rational acc = 0;
        for (unsigned j = 0; j <= m; ++j)
            acc += Rational(binomial(m + 1, j)) * bernoulli(j);
        CHECK(acc == Rational(0));
    }
}

TEST_CASE("rational arithmetic is exact") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng));
        Rational b(num(rng), den(rng));
        CHECK((a + b) - b == a);
        if (a != 0) CHECK(a * (Rational(1) / a) == Rational(1));
        CHECK(denominator(a) > 0);
        BigInt n = numerator(a) < 0 ? BigInt(-numerator(a)) : numerator(a);
        if (n != 0) CHECK(gcd(n, denominator(a)) == 1);
    }
}

TEST_CASE("to_double takes the nearest double") {
    CHECK(to_double(Rational(1, 6)) == doctest::Approx(0.1666666666666667).epsilon(1e-15));
    CHECK(to_double(Rational(0, 1)) == 0.0);
    CHECK(to_double(Rational(-1, 30)) == doctest::Approx(-0.0333333333333333).epsilon(1e-13));
    CHECK(to_double(Rational(1, 3)) == 1.0 / 3.0);
}

TEST_CASE("to_double reports out-of-range magnitudes as infinities") {
    BigInt big = boost::multiprecision::pow(BigInt(10), 400);
    CHECK(std::isinf(to_double(Rational(big, 1))));
    CHECK(to_double(Rational(-big, 1)) < 0);
    CHECK(to_double(Rational(1, big)) == 0.0);
}

TEST_CASE("fraction strings") {
    CHECK(to_fraction_string(Rational(-1, 30)) == "-1/30");
    CHECK(to_fraction_string(Rational(8, 2)) == "4");
    CHECK(to_fraction_string(Rational(0)) == "0");
}

TEST_CASE("to_integer_exact rejects non-integers") {
    CHECK(to_integer_exact(Rational(12, 4), "t") == BigInt(3));
    CHECK_THROWS_AS((void)to_integer_exact(Rational(1, 2), "t"), std::logic_error);
}

TEST_CASE("binomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(40, 20) == BigInt("137846528820"));
}
