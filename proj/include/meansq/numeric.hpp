#pragma once

// Small numeric helpers shared by the sum kernels: compensated summation,
// unit-root tables with bit-exact conjugate symmetry, and reduced-angle
// trig so that values at m and k-m pair off without rounding slack.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace meansq {

using Complex = std::complex<double>;

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Kahan compensated summation; works for double and complex<double>
// (complex add/sub are componentwise).
template <typename T>
struct KahanSum {
    T sum{};
    T comp{};
    void add(T x) {
        T y = x - comp;
        T t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    T value() const { return sum; }
};

// e^{2*pi*i*j/k} for j = 0..k-1, mirrored so root[k-j] == conj(root[j])
// bit-exactly. Arguments are already-reduced fractions, so no large-angle
// reduction error enters.
inline std::vector<Complex> unit_roots(long long k) {
    std::vector<Complex> r(static_cast<std::size_t>(k));
    r[0] = {1.0, 0.0};
    for (long long j = 1; 2 * j <= k; ++j) {
        double t = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k);
        r[static_cast<std::size_t>(j)] = {std::cos(t), std::sin(t)};
        if (j * 2 != k) r[static_cast<std::size_t>(k - j)] = std::conj(r[static_cast<std::size_t>(j)]);
    }
    return r;
}

// sin(pi*m/k) from the reduced angle min(m, k-m)/k; exact symmetry under
// m <-> k-m and no precision loss near m ~ k.
inline double sin_pi_frac(long long m, long long k) {
    long long mm = m <= k - m ? m : k - m;
    return std::sin(std::numbers::pi * static_cast<double>(mm) / static_cast<double>(k));
}

// cos(pi*m/k), same reduced-angle scheme: cos(pi*(k-m)/k) == -cos(pi*m/k)
// bit-exactly.
inline double cos_pi_frac(long long m, long long k) {
    long long mm = m <= k - m ? m : k - m;
    double c = std::cos(std::numbers::pi * static_cast<double>(mm) / static_cast<double>(k));
    return m <= k - m ? c : -c;
}

// x^n by repeated multiplication; keeps (-x)^n == -(x^n) exact for odd n,
// which std::pow does not guarantee.
inline double ipow(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

inline Complex ipow(Complex x, int n) {
    Complex r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace meansq
