#include "meansq/characters.hpp"

#include "meansq/multiplicative.hpp"
#include "meansq/numeric.hpp"

#include <doctest.h>

#include <numeric>

using namespace meansq;

TEST_CASE("unit group structure examples") {
    UnitGroup g5(5);
    REQUIRE(g5.components().size() == 1);
    CHECK(g5.components()[0].order == 4);
    CHECK(g5.components()[0].generator == 2);  // smallest primitive root mod 5
    CHECK(g5.phi() == 4);
    CHECK(g5.exponent() == 4);

    UnitGroup g8(8);
    REQUIRE(g8.components().size() == 2);
    CHECK(g8.components()[0].order == 2);  // class of -1
    CHECK(g8.components()[1].order == 2);  // class of 5
    CHECK(g8.components()[0].generator == 7);
    CHECK(g8.components()[1].generator == 5);

    UnitGroup g1(1);
    CHECK(g1.components().empty());
    CHECK(g1.phi() == 1);

    UnitGroup g16(16);
    REQUIRE(g16.components().size() == 2);
    CHECK(g16.components()[0].order == 2);
    CHECK(g16.components()[1].order == 4);
}

TEST_CASE("component product of orders equals phi, residues covered") {
    for (long long k = 1; k <= 200; ++k) {
        UnitGroup g(k);
        long long prod = 1;
        for (const auto& c : g.components()) prod *= c.order;
        CHECK(prod == euler_phi(k));
        CHECK(static_cast<long long>(g.reduced_residues().size()) == euler_phi(k));
        for (long long m : g.reduced_residues()) {
            auto vec = g.dlog(m);
            // generators reproduce the residue
            long long x = 1 % std::max<long long>(k, 1);
            for (std::size_t i = 0; i < vec.size(); ++i) {
                for (long long e = 0; e < vec[i]; ++e)
                    x = static_cast<long long>(
                        static_cast<__int128>(x) * g.components()[i].generator % k);
            }
            if (k > 1) CHECK(x == m % k);
        }
    }
}

TEST_CASE("character counts and parity split") {
    auto c3 = characters(3);
    REQUIRE(c3.size() == 2);
    CHECK(c3[0].is_principal());
    CHECK(c3[0].parity() == Parity::Even);
    CHECK(c3[1].parity() == Parity::Odd);

    auto c5 = characters(5);
    REQUIRE(c5.size() == 4);
    int odd5 = 0;
    for (const auto& chi : c5) odd5 += chi.parity() == Parity::Odd;
    CHECK(odd5 == 2);

    auto c4 = characters(4);
    REQUIRE(c4.size() == 2);
    int odd4 = 0;
    for (const auto& chi : c4) odd4 += chi.parity() == Parity::Odd;
    CHECK(odd4 == 1);

    for (long long k = 3; k <= 100; ++k) {
        auto chars = characters(k);
        long long phi = euler_phi(k);
        CHECK(static_cast<long long>(chars.size()) == phi);
        long long odd = 0;
        for (const auto& chi : chars) odd += chi.parity() == Parity::Odd;
        CHECK(odd * 2 == phi);
    }
}

TEST_CASE("eval examples") {
    auto c6 = characters(6);
    CHECK(c6[0].eval(1).is_one());
    CHECK(c6[0].eval(4).zero);  // gcd(4,6) = 2
    auto c3 = characters(3);
    CHECK(c3[1].eval(2).is_minus_one());
    for (const auto& chi : characters(45)) CHECK(chi.eval(1).is_one());
}

TEST_CASE("conjugate character") {
    auto c5 = characters(5);
    for (const auto& chi : c5) {
        if (chi.order() <= 2) CHECK(chi.conjugate().index_vector() == chi.index_vector());
    }
    // an order-4 character mod 5 maps the generator to +-i; conjugation flips it
    UnitGroup g5(5);
    long long gen = g5.components()[0].generator;
    bool found_i = false;
    for (const auto& chi : c5) {
        RootOfUnity v = chi.eval(gen);
        if (chi.order() == 4) {
            RootOfUnity cv = chi.conjugate().eval(gen);
            CHECK(cv == v.conj());
            if (v.num * 4 == v.order) found_i = true;  // value i
        }
    }
    CHECK(found_i);
    CHECK(c5[0].conjugate().is_principal());
}

TEST_CASE("eval is multiplicative on reduced residues, k <= 60") {
    for (long long k = 2; k <= 60; ++k) {
        auto group = std::make_shared<const UnitGroup>(k);
        for (const auto& chi : characters(group)) {
            for (long long m : group->reduced_residues())
                for (long long n : group->reduced_residues())
                    CHECK(chi.eval(m * n % k) == chi.eval(m) * chi.eval(n));
        }
    }
}

TEST_CASE("full orthogonality, exact exponents then numeric, k <= 60") {
    for (long long k = 2; k <= 60; ++k) {
        auto group = std::make_shared<const UnitGroup>(k);
        auto chars = characters(group);
        for (std::size_t a = 0; a < chars.size(); ++a) {
            for (std::size_t b = 0; b < chars.size(); ++b) {
                auto eta = chars[a] * chars[b].conjugate();
                long long expected = a == b ? group->phi() : 0;
                auto exact = exact_residue_sum(eta);
                REQUIRE(exact.has_value());
                CHECK(*exact == expected);
                KahanSum<Complex> num;
                for (long long m = 1; m <= k; ++m) num.add(eta.eval(m).to_complex());
                CHECK(std::abs(num.value() - Complex(static_cast<double>(expected), 0)) < 1e-10);
            }
        }
    }
}

TEST_CASE("parity-restricted orthogonality, all reduced pairs, k <= 40") {
    for (long long k = 3; k <= 40; ++k) {
        auto group = std::make_shared<const UnitGroup>(k);
        auto chars = characters(group);
        long long e = group->exponent();
        long long phi = group->phi();
        for (long long m : group->reduced_residues()) {
            for (long long n : group->reduced_residues()) {
                for (Parity parity : {Parity::Odd, Parity::Even}) {
                    std::vector<std::pair<long long, long long>> counts;
                    for (const auto& chi : chars) {
                        if (chi.parity() != parity) continue;
                        counts.emplace_back(chi.eval(m).num - chi.eval(n).num, 1);
                    }
                    long long expected = 0;
                    if (m == n)
                        expected = phi / 2;
                    else if ((m + n) % k == 0)
                        expected = parity == Parity::Odd ? -phi / 2 : phi / 2;
                    auto exact = exact_root_multiset_sum(counts, e);
                    REQUIRE(exact.has_value());
                    CHECK(*exact == expected);
                }
            }
        }
    }
}

TEST_CASE("root of unity bookkeeping") {
    RootOfUnity a{1, 6, false}, b{5, 6, false};
    CHECK((a * b).is_one());
    CHECK(a.conj() == b);
    CHECK(RootOfUnity{3, 6, false}.is_minus_one());
    CHECK(RootOfUnity::zero_value(6).to_complex() == Complex(0, 0));
    CHECK(std::abs(a.to_complex() - Complex(0.5, std::sqrt(3.0) / 2)) < 1e-15);
    CHECK(a.to_string() == "1/6");
}

TEST_CASE("k = 1 and k = 2 degenerate groups") {
    auto c1 = characters(1);
    REQUIRE(c1.size() == 1);
    CHECK(c1[0].is_principal());
    CHECK(c1[0].parity() == Parity::Even);
    CHECK(c1[0].eval(7).is_one());

    auto c2 = characters(2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].eval(1).is_one());
    CHECK(c2[0].eval(2).zero);
    CHECK(c2[0].parity() == Parity::Even);
}

TEST_CASE("character enumeration is deterministic and lexicographic") {
    auto a = characters(24);
    auto b = characters(24);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].index_vector() == b[i].index_vector());
    CHECK(a[0].is_principal());
    // lexicographic: the last component cycles fastest
    auto g = std::make_shared<const UnitGroup>(24);
    long long rank_prev = -1;
    for (const auto& chi : a) {
        long long rank = 0;
        for (std::size_t i = 0; i < chi.index_vector().size(); ++i)
            rank = rank * g->components()[i].order + chi.index_vector()[i];
        CHECK(rank == rank_prev + 1);
        rank_prev = rank;
    }
}
