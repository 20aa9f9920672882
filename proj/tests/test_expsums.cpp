#include "meansq/expsums.hpp"

#include "meansq/multiplicative.hpp"
#include "meansq/trigsums.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace meansq;

namespace {

// test-only oracle: sum_{j=1}^{k-1} j^r e^{sign * 2*pi*i*m*j/k} by direct
// compensated summation, independent of the closed forms
Complex jr_alpha_sum_direct(int r, long long m, long long k, int sign) {
    auto roots = unit_roots(k);
    KahanSum<Complex> acc;
    for (long long j = 1; j < k; ++j) {
        long long idx = m * j % k;
        if (sign < 0) idx = (k - idx) % k;
        acc.add(ipow(static_cast<double>(j), r) * roots[static_cast<std::size_t>(idx)]);
    }
    return acc.value();
}

}  // namespace

TEST_CASE("gauss sum examples") {
    auto c3 = characters(3);
    // nontrivial chi mod 3 at z=1: e^{2pi i/3} - e^{4pi i/3} = i sqrt(3)
    Complex g = gauss_sum(1, c3[1]);
    CHECK(std::abs(g - Complex(0.0, std::sqrt(3.0))) < 1e-14);

    for (long long k = 3; k <= 30; ++k) {
        auto chars = characters(k);
        for (const auto& chi : chars) {
            if (chi.is_principal()) {
                CHECK(std::abs(gauss_sum(k, chi) -
                               Complex(static_cast<double>(euler_phi(k)), 0)) < 1e-10);
            } else {
                CHECK(std::abs(gauss_sum(k, chi)) < 1e-10);  // G(k, chi) = sum chi(m) = 0
            }
        }
    }
}

TEST_CASE("ramanujan sum examples and numeric oracle") {
    CHECK(ramanujan_sum(6, 6) == 2);  // phi(6)
    CHECK(ramanujan_sum(5, 1) == -1);
    CHECK(ramanujan_sum(4, 2) == -2);
    CHECK(ramanujan_sum(9, 3) == -3);
    CHECK(ramanujan_sum(1, 0) == 1);
    for (long long k = 1; k <= 120; ++k)
        for (long long z = 1; z <= k; ++z)
            CHECK(std::abs(ramanujan_sum_numeric(k, z) -
                           Complex(static_cast<double>(ramanujan_sum(k, z)), 0)) < 1e-9);
}

TEST_CASE("gauss sum of the principal character is the ramanujan sum, k <= 200") {
    for (long long k = 2; k <= 200; ++k) {
        auto group = std::make_shared<const UnitGroup>(k);
        DirichletCharacter chi0(group, std::vector<long long>(group->components().size(), 0));
        auto values = chi0.value_table();
        auto roots = unit_roots(k);
        for (long long z = 1; z <= k; ++z) {
            KahanSum<Complex> acc;
            for (long long m = 1; m <= k; ++m)
                acc.add(values[static_cast<std::size_t>(m % k)] *
                        roots[static_cast<std::size_t>(m % k * z % k)]);
            CHECK(std::abs(acc.value() -
                           Complex(static_cast<double>(ramanujan_sum(k, z)), 0)) < 1e-9);
        }
    }
}

TEST_CASE("S(m, chi) identities") {
    for (long long k = 3; k <= 40; ++k) {
        for (const auto& chi : characters(k)) {
            if (chi.is_principal()) continue;
            auto table = gauss_sum_table(chi);
            Complex s0 = s_weighted(0, k, table);
            CHECK(std::abs(s0) < 1e-9 * static_cast<double>(k));
            if (chi.parity() == Parity::Even) {
                CHECK(std::abs(s_weighted(1, k, table)) < 1e-9 * static_cast<double>(k));
                // S(3) = 3/2 S(2)
                Complex s3 = s_weighted(3, k, table);
                Complex s2 = s_weighted(2, k, table);
                CHECK(std::abs(s3 - 1.5 * s2) < 1e-9 * static_cast<double>(k));
            } else {
                // S(2) = S(1)
                Complex s2 = s_weighted(2, k, table);
                Complex s1 = s_weighted(1, k, table);
                CHECK(std::abs(s2 - s1) < 1e-9 * static_cast<double>(k));
            }
        }
    }
}

TEST_CASE("opposite-parity vanishing, r <= 4, k <= 40") {
    for (long long k = 3; k <= 40; ++k) {
        for (const auto& chi : characters(k)) {
            if (chi.is_principal()) continue;
            auto table = gauss_sum_table(chi);
            bool chi_odd = chi.parity() == Parity::Odd;
            for (int r = 1; r <= 4; ++r) {
                if ((r % 2 == 1) == chi_odd) continue;
                KahanSum<Complex> acc;
                for (int q = 0; q <= 2 * (r / 2); ++q) {
                    Rational bq = bernoulli(static_cast<unsigned>(q));
                    if (bq == 0) continue;
                    double c = binomial(static_cast<unsigned>(r), static_cast<unsigned>(q))
                                   .convert_to<double>() *
                               to_double(bq);
                    acc.add(c * s_weighted(r - q, k, table));
                }
                CHECK(std::abs(acc.value()) < 1e-8 * static_cast<double>(k));
            }
        }
    }
}

TEST_CASE("jr_alpha_sum_closed r=1 form") {
    // sum s e^{2 pi i m s/k} = k/(alpha - 1)
    long long k = 7, m = 2;
    double t = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(k);
    Complex alpha(std::cos(t), std::sin(t));
    CHECK(std::abs(jr_alpha_sum_closed(1, m, k, +1) - 7.0 / (alpha - 1.0)) < 1e-12);
}

TEST_CASE("jr_alpha_sum_closed spot examples against direct sums") {
    CHECK(std::abs(jr_alpha_sum_closed(3, 1, 3, +1) - jr_alpha_sum_direct(3, 1, 3, +1)) < 1e-12);
    CHECK(std::abs(jr_alpha_sum_closed(4, 1, 5, -1) - jr_alpha_sum_direct(4, 1, 5, -1)) < 1e-12);
    CHECK_THROWS_AS(jr_alpha_sum_closed(3, 2, 4, 1), std::invalid_argument);  // gcd(2,4) != 1
    CHECK_THROWS_AS(jr_alpha_sum_closed(5, 1, 4, 1), std::invalid_argument);
}

TEST_CASE("jr_alpha_sum_closed matches direct sums, all r, both signs, k <= 100") {
    for (long long k = 3; k <= 100; ++k) {
        for (long long m = 1; m < k; ++m) {
            if (std::gcd(m, k) != 1) continue;
            for (int r = 1; r <= 4; ++r) {
                for (int sign : {+1, -1}) {
                    Complex closed = jr_alpha_sum_closed(r, m, k, sign);
                    Complex direct = jr_alpha_sum_direct(r, m, k, sign);
                    double err = std::abs(closed - direct);
                    CHECK(err < 1e-8 + 1e-10 * std::abs(direct));
                }
            }
        }
    }
}

TEST_CASE("alpha identity registry covers the proofs' displays") {
    const auto& reg = alpha_identity_registry();
    CHECK(reg.size() == 24);  // 13 from the L(3) proof, 11 from the L(4) proof
    // spot: (1/a-1) at k=5 -> sum 1/(alpha-1) = -phi(5)/2 = -2, so the
    // display's LHS -k^4 * sum equals +k^4 phi/2 = 1250
    for (const auto& ident : reg) {
        if (std::string(ident.id) != "1/a-1") continue;
        CHECK(to_double(alpha_identity_rhs(ident, 5)) == doctest::Approx(1250.0));
        CHECK(std::abs(alpha_identity_lhs(ident, 5) - Complex(1250.0, 0)) < 1e-9);
    }
}

TEST_CASE("alpha identity suite passes, k <= 150") {
    Tolerance tol;  // defaults: atol 1e-8*k, rtol 1e-9
    for (long long k = 3; k <= 150; ++k) {
        for (const auto& rec : alpha_identity_suite(k, tol)) {
            INFO(rec.identity << " at k=" << rec.k << " abs_err=" << rec.abs_err);
            CHECK(rec.pass);
        }
    }
}

TEST_CASE("weighted ramanujan examples") {
    CHECK(weighted_ramanujan(2, 3) == -5);   // 1*(-1) + 4*(-1)
    CHECK(weighted_ramanujan(4, 3) == -17);  // -1 - 16
    CHECK(weighted_ramanujan(4, 4) == weighted_ramanujan_direct(4, 4));
    CHECK_THROWS_AS(weighted_ramanujan(3, 10), std::invalid_argument);
}

TEST_CASE("weighted ramanujan closed = direct, k <= 600") {
    for (long long k = 3; k <= 600; ++k) {
        CHECK(weighted_ramanujan(2, k) == weighted_ramanujan_direct(2, k));
        CHECK(weighted_ramanujan(4, k) == weighted_ramanujan_direct(4, k));
    }
}
