#include "meansq/lfunc.hpp"

#include "meansq/expsums.hpp"
#include "meansq/multiplicative.hpp"
#include "meansq/trigsums.hpp"

#include <algorithm>
#include <stdexcept>

namespace meansq {

namespace {

constexpr double kPi = std::numbers::pi;

// Global sign of the finite form per r, fixed empirically against the
// series on reference characters (see tests); index 1..6.
constexpr int kFiniteFormSign[7] = {0, +1, -1, +1, -1, +1, -1};

void require_nonprincipal(const DirichletCharacter& chi, Parity parity, const char* who) {
    if (chi.modulus() < 3) throw std::invalid_argument(std::string(who) + ": k must be >= 3");
    if (chi.is_principal()) throw std::invalid_argument(std::string(who) + ": principal character rejected");
    if (chi.parity() != parity)
        throw std::invalid_argument(std::string(who) + ": character of wrong parity");
}

double pow_int(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

Complex i_to_the(int r) {
    switch (((r % 4) + 4) % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

}  // namespace

LSeriesConfig LSeriesConfig::for_exponent(int r, long long k) {
    if (r < 2) throw std::invalid_argument("LSeriesConfig: r must be >= 2");
    long long base;
    switch (r) {
        case 2: base = 2'000'000; break;
        case 3: base = 100'000; break;
        default: base = 10'000; break;
    }
    LSeriesConfig cfg;
    cfg.truncation = std::max(base, k * k);
    cfg.tail_bound = pow_int(static_cast<double>(cfg.truncation), 1 - r) / (r - 1);
    return cfg;
}

Complex l_series(int r, const DirichletCharacter& chi, const LSeriesConfig& cfg) {
    if (r < 2) throw std::invalid_argument("l_series: r must be >= 2 for the tail bound to hold");
    long long k = chi.modulus();
    auto values = chi.value_table();
    KahanSum<Complex> acc;
    for (long long n = 1; n <= cfg.truncation; ++n) {
        Complex c = values[static_cast<std::size_t>(n % k)];
        if (c.real() == 0.0 && c.imag() == 0.0) continue;
        acc.add(c / pow_int(static_cast<double>(n), r));
    }
    return acc.value();
}

Complex l3_closed(const DirichletCharacter& chi, const std::vector<Complex>& gauss_table) {
    require_nonprincipal(chi, Parity::Odd, "l3_closed");
    long long k = chi.modulus();
    double K = static_cast<double>(k);
    KahanSum<Complex> cubic, linear;
    for (long long j = 1; j < k; ++j) {
        Complex g = gauss_table[static_cast<std::size_t>(j - 1)];
        double J = static_cast<double>(j);
        cubic.add(J * J * J * g);
        linear.add(J * g);
    }
    Complex bracket = cubic.value() / (K * K) - linear.value();
    return Complex(0.0, -2.0 * pow_int(kPi, 3) / (3.0 * K * K)) * bracket;
}

Complex l3_closed(const DirichletCharacter& chi) {
    return l3_closed(chi, gauss_sum_table(chi));
}

Complex l4_closed(const DirichletCharacter& chi, const std::vector<Complex>& gauss_table) {
    require_nonprincipal(chi, Parity::Even, "l4_closed");
    long long k = chi.modulus();
    double K = static_cast<double>(k);
    KahanSum<Complex> quartic, square;
    for (long long j = 1; j < k; ++j) {
        Complex g = gauss_table[static_cast<std::size_t>(j - 1)];
        double J = static_cast<double>(j);
        quartic.add(J * J * J * J * g);
        square.add(J * J * g);
    }
    Complex bracket = quartic.value() / (K * K) - 2.0 * square.value();
    return (-pow_int(kPi, 4) / (3.0 * K * K * K)) * bracket;
}

Complex l4_closed(const DirichletCharacter& chi) {
    return l4_closed(chi, gauss_sum_table(chi));
}

Complex general_finite_form(int r, const DirichletCharacter& chi,
                            const std::vector<Complex>& gauss_table) {
    if (r < 1 || r > 6) throw std::invalid_argument("general_finite_form: r must be in 1..6");
    Parity wanted = r % 2 == 1 ? Parity::Odd : Parity::Even;
    require_nonprincipal(chi, wanted, "general_finite_form");
    long long k = chi.modulus();
    KahanSum<Complex> acc;
    for (int q = 0; q <= 2 * (r / 2); ++q) {
        Rational bq = bernoulli(static_cast<unsigned>(q));
        if (bq == 0) continue;
        double coeff = binomial(static_cast<unsigned>(r), static_cast<unsigned>(q))
                           .convert_to<double>() *
                       to_double(bq);
        acc.add(coeff * s_weighted(r - q, k, gauss_table));
    }
    double factorial = 1.0;
    for (int i = 2; i <= r; ++i) factorial *= i;
    Complex scale = i_to_the(r) * pow_int(2.0, r - 1) * pow_int(kPi, r) /
                    (static_cast<double>(k) * factorial);
    return static_cast<double>(kFiniteFormSign[r]) * scale * acc.value();
}

Complex general_finite_form(int r, const DirichletCharacter& chi) {
    return general_finite_form(r, chi, gauss_sum_table(chi));
}

MeanSquareClosed mean_square_closed(int r, long long k) {
    if (k < 3) throw std::invalid_argument("mean_square_closed: k must be >= 3");
    Factorization f = factorize(k);
    MeanSquareClosed out;
    if (r == 3) {
        out.pi_power = 6;
        Rational inner = Rational(jordan_totient(6, f)) / 21 - Rational(jordan_totient(2, f));
        out.rational_part = Rational(euler_phi(f)) * inner /
                            Rational(90 * boost::multiprecision::pow(BigInt(k), 6));
    } else if (r == 4) {
        out.pi_power = 8;
        Rational inner = Rational(jordan_totient(8, f)) / 700 +
                         Rational(jordan_totient(4, f)) / 150 +
                         Rational(jordan_totient(2, f)) * 2 / 21;
        out.rational_part = Rational(euler_phi(f)) * inner /
                            Rational(27 * boost::multiprecision::pow(BigInt(k), 8));
    } else {
        throw std::invalid_argument("mean_square_closed: r must be 3 or 4");
    }
    out.value = to_double(out.rational_part) * pow_int(kPi, out.pi_power);
    return out;
}

double mean_square_brute(int r, long long k, BruteOracle oracle) {
    if (r != 3 && r != 4) throw std::invalid_argument("mean_square_brute: r must be 3 or 4");
    if (k < 3) throw std::invalid_argument("mean_square_brute: k must be >= 3");
    Parity wanted = r == 3 ? Parity::Odd : Parity::Even;
    auto chars = characters(k);
    LSeriesConfig cfg = LSeriesConfig::for_exponent(r, k);
    KahanSum<double> acc;
    for (const auto& chi : chars) {
        if (chi.parity() != wanted) continue;
        Complex L;
        if (chi.is_principal()) {
            // only reached for r = 4 (chi0 is even)
            if (oracle == BruteOracle::Series) {
                L = l_series(r, chi, cfg);
            } else {
                L = Complex(to_double(l_principal_scaled(4, k)) * pow_int(kPi, 4) /
                                pow_int(static_cast<double>(k), 4),
                            0.0);
            }
        } else if (oracle == BruteOracle::Series) {
            L = l_series(r, chi, cfg);
        } else {
            auto table = gauss_sum_table(chi);
            L = r == 3 ? l3_closed(chi, table) : l4_closed(chi, table);
        }
        acc.add(std::norm(L));
    }
    return acc.value();
}

double mean_value(int r, long long k) {
    return mean_square_closed(r, k).value * 2.0 / static_cast<double>(euler_phi(k));
}

}  // namespace meansq
