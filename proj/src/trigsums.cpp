#include "meansq/trigsums.hpp"

#include "meansq/multiplicative.hpp"
#include "meansq/numeric.hpp"

#include <numeric>
#include <stdexcept>

namespace meansq {

namespace {

void require_k3(long long k, const char* who) {
    if (k < 3) throw std::invalid_argument(std::string(who) + ": k must be >= 3");
}

}  // namespace

double csc_power_sum_numeric(int r, long long k) {
    require_k3(k, "csc_power_sum_numeric");
    if (r < 1 || r > 4) throw std::invalid_argument("csc_power_sum_numeric: r must be in 1..4");
    KahanSum<double> acc;
    // m and k-m share the same sine; sum the pair at once.
    for (long long m = 1; 2 * m < k; ++m) {
        if (std::gcd(m, k) != 1) continue;
        acc.add(2.0 * ipow(1.0 / sin_pi_frac(m, k), 2 * r));
    }
    return acc.value();
}

Rational csc_power_sum_closed(int r, long long k) {
    require_k3(k, "csc_power_sum_closed");
    Factorization f = factorize(k);
    Rational j2(jordan_totient(2, f));
    switch (r) {
        case 1:
            return j2 / 3;
        case 2:
            return Rational(jordan_totient(4, f)) / 45 + j2 * 2 / 9;
        case 3:
            return Rational(jordan_totient(6, f)) * 2 / 945 + Rational(jordan_totient(4, f)) / 45 +
                   j2 * 8 / 45;
        case 4:
            return Rational(jordan_totient(8, f)) / 4725 +
                   Rational(jordan_totient(6, f)) * 8 / 2835 +
                   Rational(jordan_totient(4, f)) * 14 / 675 + j2 * 16 / 105;
        default:
            throw std::invalid_argument("csc_power_sum_closed: r must be in 1..4");
    }
}

double cot_odd_power_sum(int p, long long k) {
    require_k3(k, "cot_odd_power_sum");
    if (p < 1 || p % 2 == 0 || p > 7)
        throw std::invalid_argument("cot_odd_power_sum: p must be odd, 1..7");
    KahanSum<double> acc;
    for (long long m = 1; 2 * m < k; ++m) {
        if (std::gcd(m, k) != 1) continue;
        double c1 = cos_pi_frac(m, k) / sin_pi_frac(m, k);
        double c2 = cos_pi_frac(k - m, k) / sin_pi_frac(k - m, k);  // == -c1 exactly
        acc.add(ipow(c1, p) + ipow(c2, p));
    }
    return acc.value();
}

Rational l_principal_scaled(int s, long long k) {
    if (k < 1) throw std::invalid_argument("l_principal_scaled: k must be >= 1");
    switch (s) {
        case 2:
            return Rational(jordan_totient(2, k)) / 6;
        case 4:
            return Rational(jordan_totient(4, k)) / 90;
        case 6:
            return Rational(jordan_totient(6, k)) / 945;
        default:
            throw std::invalid_argument("l_principal_scaled: s must be one of 2, 4, 6");
    }
}

}  // namespace meansq
