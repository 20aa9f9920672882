#include "meansq/expsums.hpp"

#include "meansq/multiplicative.hpp"
#include "meansq/trigsums.hpp"

#include <numeric>
#include <stdexcept>

namespace meansq {

Complex gauss_sum(long long z, const DirichletCharacter& chi) {
    long long k = chi.modulus();
    if (k == 1) return {1.0, 0.0};
    auto values = chi.value_table();
    auto roots = unit_roots(k);
    long long zr = ((z % k) + k) % k;
    KahanSum<Complex> acc;
    for (long long m = 1; m <= k; ++m)
        acc.add(values[static_cast<std::size_t>(m % k)] *
                roots[static_cast<std::size_t>(m % k * zr % k)]);
    return acc.value();
}

std::vector<Complex> gauss_sum_table(const DirichletCharacter& chi) {
    long long k = chi.modulus();
    auto values = chi.value_table();
    auto roots = unit_roots(std::max<long long>(k, 1));
    std::vector<Complex> table(static_cast<std::size_t>(k), Complex(0.0, 0.0));
    if (k == 1) {
        table.assign(1, Complex(1.0, 0.0));
        return table;
    }
    for (long long j = 1; j <= k; ++j) {
        KahanSum<Complex> acc;
        for (long long m = 1; m <= k; ++m)
            acc.add(values[static_cast<std::size_t>(m % k)] *
                    roots[static_cast<std::size_t>(m % k * (j % k) % k)]);
        table[static_cast<std::size_t>(j - 1)] = acc.value();
    }
    return table;
}

long long ramanujan_sum(long long k, long long z) {
    if (k < 1) throw std::invalid_argument("ramanujan_sum: k must be >= 1");
    long long zr = ((z % k) + k) % k;
    long long d = zr == 0 ? k : std::gcd(zr, k);
    long long q = k / d;
    long long m = mobius(q);
    if (m == 0) return 0;
    return m * (euler_phi(k) / euler_phi(q));
}

Complex ramanujan_sum_numeric(long long k, long long z) {
    if (k < 1) throw std::invalid_argument("ramanujan_sum_numeric: k must be >= 1");
    if (k == 1) return {1.0, 0.0};
    auto roots = unit_roots(k);
    long long zr = ((z % k) + k) % k;
    KahanSum<Complex> acc;
    for (long long m = 1; m <= k; ++m) {
        if (std::gcd(m, k) != 1) continue;
        acc.add(roots[static_cast<std::size_t>(m * zr % k)]);
    }
    return acc.value();
}

Complex s_weighted(int m, long long k, const std::vector<Complex>& gauss_table) {
    if (m < 0) throw std::invalid_argument("s_weighted: m must be >= 0");
    KahanSum<Complex> acc;
    for (long long j = 1; j <= k; ++j) {
        double w = ipow(static_cast<double>(j) / static_cast<double>(k), m);
        acc.add(w * gauss_table[static_cast<std::size_t>(j - 1)]);
    }
    return acc.value();
}

Complex s_weighted(int m, const DirichletCharacter& chi) {
    return s_weighted(m, chi.modulus(), gauss_sum_table(chi));
}

Complex jr_alpha_sum_closed(int r, long long m, long long k, int sign) {
    if (r < 1 || r > 4) throw std::invalid_argument("jr_alpha_sum_closed: r must be in 1..4");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("jr_alpha_sum_closed: sign must be +-1");
    if (k < 2 || m < 1 || m >= k || std::gcd(m, k) != 1)
        throw std::invalid_argument("jr_alpha_sum_closed: need 1 <= m < k with gcd(m,k) = 1");
    double t = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(k);
    Complex a(std::cos(t), std::sin(t));  // alpha = e^{2 pi i m / k}
    Complex u = 1.0 / (a - 1.0);
    double K = static_cast<double>(k);
    Complex u2 = u * u, u3 = u2 * u, u4 = u3 * u;
    switch (r) {
        case 1:
            return sign > 0 ? K * u : -K - K * u;
        case 2:
            return sign > 0 ? K * K * u - 2.0 * K * a * u2 : -K * K - K * K * u - 2.0 * K * a * u2;
        case 3: {
            Complex c2 = 3.0 * K * K * a * u2;
            Complex c3 = 3.0 * K * (a + a * a) * u3;
            double K3 = K * K * K;
            return sign > 0 ? K3 * u - c2 + c3 : -K3 * a * u - c2 - c3;
        }
        case 4: {
            Complex c2 = 4.0 * K * K * K * a * u2;
            Complex c3 = 6.0 * K * K * (a + a * a) * u3;
            Complex c4 = 4.0 * K * (a + 4.0 * a * a + a * a * a) * u4;
            double K4 = K * K * K * K;
            return sign > 0 ? K4 * u - c2 + c3 - c4 : -K4 * a * u - c2 - c3 - c4;
        }
    }
    return {};
}

const std::vector<AlphaIdentity>& alpha_identity_registry() {
    using T = AlphaIdentity::Term;
    constexpr auto Phi = AlphaIdentity::Phi;
    constexpr auto J2 = AlphaIdentity::J2;
    constexpr auto J4 = AlphaIdentity::J4;
    constexpr auto J6 = AlphaIdentity::J6;
    constexpr auto C6 = AlphaIdentity::Csc6;
    constexpr auto C8 = AlphaIdentity::Csc8;
    static const std::vector<AlphaIdentity> registry = {
        // ---- displays from the L(3) mean-square proof ----
        {"1/(a-1)^2", -1, 6, 0, 2, {T{J2, 1, 12, 6}, T{Phi, -1, 2, 6}}},
        {"a/(a-1)^2", -1, 6, 1, 2, {T{J2, 1, 12, 6}}},
        {"a^2/(a-1)^3", 3, 5, 2, 3, {T{J2, -1, 8, 5}}},
        {"a/(a-1)^3", 3, 5, 1, 3, {T{J2, 1, 8, 5}}},
        {"a^3/(a-1)^4", -3, 4, 3, 4, {T{J4, -1, 240, 4}, T{J2, 1, 12, 4}}},
        {"a^2/(a-1)^4", -12, 4, 2, 4, {T{J4, -1, 60, 4}, T{J2, -1, 6, 4}}},
        {"a/(a-1)^4", -9, 4, 1, 4, {T{J4, -1, 80, 4}, T{J2, 1, 4, 4}}},
        {"a^3/(a-1)^5", 18, 3, 3, 5, {T{J4, 1, 80, 3}, T{J2, 1, 8, 3}}},
        {"a^2/(a-1)^5", 18, 3, 2, 5, {T{J4, -1, 80, 3}, T{J2, -1, 8, 3}}},
        {"a^4/(a-1)^6", -18, 2, 4, 6, {T{C6, 9, 32, 2}, T{J4, -1, 80, 2}, T{J2, -1, 8, 2}}},
        {"a^3/(a-1)^6", -36, 2, 3, 6, {T{C6, 9, 16, 2}}},
        {"a^2/(a-1)^6", -18, 2, 2, 6, {T{C6, 9, 32, 2}, T{J4, -1, 80, 2}, T{J2, -1, 8, 2}}},
        {"1/a-1", -1, 4, 0, 1, {T{Phi, 1, 2, 4}}},
        // ---- displays from the L(4) mean-square proof ----
        {"-12k^5 a/(a-1)^5", -12, 5, 1, 5, {T{J4, 1, 40, 5}, T{J2, -1, 4, 5}}},
        {"4k^5 a^4/(a-1)^5", 4, 5, 4, 5, {T{J4, 1, 120, 5}, T{J2, -1, 12, 5}}},
        {"-48k^3 a^2/(a-1)^7",
         -48, 3, 2, 7,
         {T{J6, -1, 420, 3}, T{J4, 1, 120, 3}, T{J2, 2, 15, 3}}},
        {"-240k^3 a^3/(a-1)^7",
         -240, 3, 3, 7,
         {T{J6, -1, 252, 3}, T{J4, -1, 24, 3}, T{J2, -1, 3, 3}}},
        {"-240k^3 a^4/(a-1)^7",
         -240, 3, 4, 7,
         {T{J6, 1, 252, 3}, T{J4, 1, 24, 3}, T{J2, 1, 3, 3}}},
        {"-48k^3 a^5/(a-1)^7",
         -48, 3, 5, 7,
         {T{J6, 1, 420, 3}, T{J4, -1, 120, 3}, T{J2, -2, 15, 3}}},
        {"32k^2 a^2/(a-1)^8",
         32, 2, 2, 8,
         {T{C8, 1, 8, 2}, T{J6, -2, 945, 2}, T{J2, 2, 45, 2}}},
        {"256k^2 a^3/(a-1)^8",
         256, 2, 3, 8,
         {T{C8, 1, 1, 2}, T{J6, -4, 945, 2}, T{J4, -2, 45, 2}, T{J2, -16, 45, 2}}},
        {"576k^2 a^4/(a-1)^8", 576, 2, 4, 8, {T{C8, 9, 4, 2}}},
        {"256k^2 a^5/(a-1)^8",
         256, 2, 5, 8,
         {T{C8, 1, 1, 2}, T{J6, -4, 945, 2}, T{J4, -2, 45, 2}, T{J2, -16, 45, 2}}},
        {"32k^2 a^6/(a-1)^8",
         32, 2, 6, 8,
         {T{C8, 1, 8, 2}, T{J6, -2, 945, 2}, T{J2, 2, 45, 2}}},
    };
    return registry;
}

Rational alpha_identity_rhs(const AlphaIdentity& ident, long long k) {
    Factorization f = factorize(k);
    Rational value = 0;
    for (const auto& term : ident.rhs) {
        Rational base;
        switch (term.basis) {
            case AlphaIdentity::Phi: base = euler_phi(f); break;
            case AlphaIdentity::J2: base = Rational(jordan_totient(2, f)); break;
            case AlphaIdentity::J4: base = Rational(jordan_totient(4, f)); break;
            case AlphaIdentity::J6: base = Rational(jordan_totient(6, f)); break;
            case AlphaIdentity::Csc6: base = csc_power_sum_closed(3, k); break;
            case AlphaIdentity::Csc8: base = csc_power_sum_closed(4, k); break;
        }
        value += base * term.num *
                 Rational(boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(term.kpow))) /
                 term.den;
    }
    return value;
}

Complex alpha_identity_lhs(const AlphaIdentity& ident, long long k) {
    auto roots = unit_roots(k);
    double coef = static_cast<double>(ident.coef) * ipow(static_cast<double>(k), ident.kpow);
    KahanSum<Complex> acc;
    for (long long m = 1; 2 * m < k; ++m) {
        if (std::gcd(m, k) != 1) continue;
        Complex a = roots[static_cast<std::size_t>(m)];
        Complex b = roots[static_cast<std::size_t>(k - m)];  // conj(a) bit-exactly
        Complex ta = ipow(a, ident.t) / ipow(a - 1.0, ident.d);
        Complex tb = ipow(b, ident.t) / ipow(b - 1.0, ident.d);
        acc.add(coef * (ta + tb));
    }
    return acc.value();
}

std::vector<VerificationRecord> alpha_identity_suite(long long k, const Tolerance& tol) {
    if (k < 3) throw std::invalid_argument("alpha_identity_suite: k must be >= 3");
    std::vector<VerificationRecord> records;
    for (const auto& ident : alpha_identity_registry()) {
        Rational rhs = alpha_identity_rhs(ident, k);
        Complex lhs = alpha_identity_lhs(ident, k);
        records.push_back(numeric_record("alpha", ident.id, k, to_fraction_string(rhs),
                                         to_double(rhs), lhs, tol));
    }
    // companion: sum of cot(pi*m/k) over reduced m vanishes
    records.push_back(
        numeric_record("alpha", "cot", k, "0", 0.0, Complex(cot_odd_power_sum(1, k), 0.0), tol));
    return records;
}

namespace {

Rational weighted_ramanujan_rational(int e, long long k) {
    Factorization f = factorize(k);
    BigInt K(k);
    Rational phi(euler_phi(f));
    if (e == 2)
        return -Rational(K * K) * phi / 2 + Rational(K * jordan_totient(2, f)) / 6;
    return -Rational(K * K * K * K) * phi / 2 + Rational(K * K * K * jordan_totient(2, f)) / 3 -
           Rational(K * jordan_totient(4, f)) / 30;
}

}  // namespace

BigInt weighted_ramanujan(int e, long long k) {
    if (e != 2 && e != 4) throw std::invalid_argument("weighted_ramanujan: e must be 2 or 4");
    if (k < 3) throw std::invalid_argument("weighted_ramanujan: k must be >= 3");
    return to_integer_exact(weighted_ramanujan_rational(e, k), "weighted_ramanujan");
}

BigInt weighted_ramanujan_direct(int e, long long k) {
    if (e < 0) throw std::invalid_argument("weighted_ramanujan_direct: e must be >= 0");
    if (k < 1) throw std::invalid_argument("weighted_ramanujan_direct: k must be >= 1");
    // R_k(j) depends only on gcd(k, j); tabulate per divisor.
    std::vector<long long> divs = divisors(k);
    std::vector<long long> r_of_div(divs.size());
    for (std::size_t i = 0; i < divs.size(); ++i) r_of_div[i] = ramanujan_sum(k, divs[i]);
    auto r_for = [&](long long j) {
        long long d = std::gcd(j, k);
        auto it = std::lower_bound(divs.begin(), divs.end(), d);
        return r_of_div[static_cast<std::size_t>(it - divs.begin())];
    };
    BigInt acc = 0;
    __int128 fast = 0;
    // |sum| <= k^{e+1} phi(k) <= k^{e+2}; for e <= 4, k <= 1e6 that is
    // under 2^120 and the accumulator cannot wrap.
    bool use_fast = e <= 4 && k <= 1'000'000;
    for (long long j = 1; j < k; ++j) {
        if (use_fast) {
            __int128 t = 1;
            for (int i = 0; i < e; ++i) t *= j;
            fast += t * r_for(j);
        } else {
            acc += boost::multiprecision::pow(BigInt(j), static_cast<unsigned>(e)) * r_for(j);
        }
    }
    if (use_fast) {
        bool neg = fast < 0;
        unsigned __int128 mag = neg ? static_cast<unsigned __int128>(-fast)
                                    : static_cast<unsigned __int128>(fast);
        acc = static_cast<unsigned long long>(mag >> 64);
        acc <<= 64;
        acc += static_cast<unsigned long long>(mag);
        if (neg) acc = -acc;
    }
    return acc;
}

}  // namespace meansq
