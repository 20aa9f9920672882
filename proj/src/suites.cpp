#include "meansq/suites.hpp"

#include "meansq/characters.hpp"
#include "meansq/expsums.hpp"
#include "meansq/lfunc.hpp"
#include "meansq/multiplicative.hpp"
#include "meansq/trigsums.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace meansq {

namespace {

constexpr double kPi = std::numbers::pi;

std::string chi_tag(long long i) { return " chi" + std::to_string(i); }

// ---- theorem3 / theorem4 ---------------------------------------------------

std::vector<VerificationRecord> suite_theorem(int r, long long k, const Tolerance& tol) {
    const char* suite = r == 3 ? "theorem3" : "theorem4";
    MeanSquareClosed closed = mean_square_closed(r, k);
    // exact rational of (90 k^6 / pi^6) * sum  (resp. (27 k^8 / pi^8) *)
    Rational scaled = closed.rational_part *
                      Rational((r == 3 ? 90 : 27) *
                               boost::multiprecision::pow(BigInt(k), r == 3 ? 6 : 8));
    std::string exact = to_fraction_string(scaled);
    std::string label = r == 3 ? "sum |L(3,chi)|^2 odd" : "sum |L(4,chi)|^2 even";
    std::vector<VerificationRecord> out;
    out.push_back(numeric_record(suite, label + " [series]", k, exact, closed.value,
                                 Complex(mean_square_brute(r, k, BruteOracle::Series), 0.0), tol));
    out.push_back(numeric_record(suite, label + " [finite]", k, exact, closed.value,
                                 Complex(mean_square_brute(r, k, BruteOracle::FiniteForm), 0.0),
                                 tol));
    return out;
}

// ---- trig -------------------------------------------------------------------

std::vector<VerificationRecord> suite_trig(long long k, const Tolerance& tol) {
    std::vector<VerificationRecord> out;
    for (int r = 1; r <= 4; ++r) {
        Rational closed = csc_power_sum_closed(r, k);
        std::string id = "1/sin^" + std::to_string(2 * r);
        out.push_back(numeric_record("trig", id, k, to_fraction_string(closed), to_double(closed),
                                     Complex(csc_power_sum_numeric(r, k), 0.0), tol));
    }
    for (int p = 1; p <= 7; p += 2) {
        std::string id = "cot^" + std::to_string(p);
        out.push_back(numeric_record("trig", id, k, "0", 0.0,
                                     Complex(cot_odd_power_sum(p, k), 0.0), tol));
    }
    return out;
}

// ---- charproperties ---------------------------------------------------------

std::vector<VerificationRecord> suite_charproperties(long long k, const Tolerance& tol) {
    auto group = std::make_shared<const UnitGroup>(k);
    auto chars = characters(group);
    long long phi = group->phi();
    std::vector<VerificationRecord> out;

    long long odd = 0;
    for (const auto& chi : chars) odd += chi.parity() == Parity::Odd ? 1 : 0;
    bool counts_ok = static_cast<long long>(chars.size()) == phi &&
                     (k < 3 || (odd * 2 == phi));
    out.push_back(property_record("charproperties", "parity counts", k,
                                  static_cast<double>(phi) / 2.0, static_cast<double>(odd),
                                  counts_ok));

    // full orthogonality over residues: sum_m chi(m) conj(psi(m))
    bool orth_exact_ok = true;
    double orth_numeric_dev = 0.0;
    for (std::size_t a = 0; a < chars.size(); ++a) {
        for (std::size_t b = 0; b < chars.size(); ++b) {
            auto eta = chars[a] * chars[b].conjugate();
            long long expected = a == b ? phi : 0;
            auto exact = exact_residue_sum(eta);
            if (!exact || *exact != expected) orth_exact_ok = false;
            KahanSum<Complex> num;
            for (long long m : group->reduced_residues()) num.add(eta.eval(m).to_complex());
            orth_numeric_dev = std::max(
                orth_numeric_dev,
                std::abs(num.value() - Complex(static_cast<double>(expected), 0.0)));
        }
    }
    out.push_back(property_record("charproperties", "orthogonality exact", k, 1.0,
                                  orth_exact_ok ? 1.0 : 0.0, orth_exact_ok));
    out.push_back(property_record("charproperties", "orthogonality numeric dev", k, 0.0,
                                  orth_numeric_dev, orth_numeric_dev < 1e-10));

    // parity-restricted orthogonality over characters, all reduced pairs
    bool parity_ok = true;
    if (k >= 3) {
        long long e = group->exponent();
        for (long long m : group->reduced_residues()) {
            for (long long n : group->reduced_residues()) {
                for (Parity parity : {Parity::Odd, Parity::Even}) {
                    std::vector<std::pair<long long, long long>> counts;
                    for (const auto& chi : chars) {
                        if (chi.parity() != parity) continue;
                        counts.emplace_back(chi.eval(m).num - chi.eval(n).num, 1);
                    }
                    auto exact = exact_root_multiset_sum(counts, e);
                    long long expected = 0;
                    if (m == n)
                        expected = phi / 2;
                    else if ((m + n) % k == 0)
                        expected = parity == Parity::Odd ? -phi / 2 : phi / 2;
                    if (!exact || *exact != expected) parity_ok = false;
                }
            }
        }
    }
    out.push_back(property_record("charproperties", "parity orthogonality exact", k, 1.0,
                                  parity_ok ? 1.0 : 0.0, parity_ok));

    // multiplicativity and conjugation on exact exponents
    bool mult_ok = true;
    for (const auto& chi : chars) {
        auto conj_chi = chi.conjugate();
        for (long long m : group->reduced_residues()) {
            if (conj_chi.eval(m) != chi.eval(m).conj()) mult_ok = false;
            for (long long n : group->reduced_residues())
                if (chi.eval(m * n % k) != chi.eval(m) * chi.eval(n)) mult_ok = false;
        }
    }
    out.push_back(property_record("charproperties", "eval multiplicative+conj", k, 1.0,
                                  mult_ok ? 1.0 : 0.0, mult_ok));
    (void)tol;
    return out;
}

// ---- phi4 -------------------------------------------------------------------

std::vector<VerificationRecord> suite_phi4(long long n, const Tolerance&) {
    std::vector<VerificationRecord> out;
    out.push_back(exact_record("phi4", "phi4 closed = direct", n, phi4_closed(n),
                               power_coprime_sum_direct(4, n)));

    // sum_{d|n} phi4(d)/d^4 = (1^4 + ... + n^4)/n^4  (Faulhaber on the right)
    Rational lhs = 0;
    for (long long d : divisors(n))
        lhs += Rational(phi4_closed(d)) /
               Rational(boost::multiprecision::pow(BigInt(d), 4));
    BigInt N(n);
    Rational rhs = Rational(N * (N + 1) * (2 * N + 1) * (3 * N * N + 3 * N - 1)) /
                   Rational(30 * boost::multiprecision::pow(N, 4));
    out.push_back(exact_record("phi4", "sum phi4(d)/d^4 = faulhaber", n, lhs, rhs));

    Factorization f = factorize(n);
    BigInt mu_phi = 0, mu_cube = 0;
    for (long long d : divisors(f)) {
        mu_phi += BigInt(d) * mobius(n / d);
        mu_cube += BigInt(d) * d * d * mobius(d);
    }
    out.push_back(exact_record("phi4", "sum d mu(n/d) = phi", n, BigInt(euler_phi(f)), mu_phi));
    out.push_back(exact_record("phi4", "sum d^3 mu(d) = prod(1-p^3)", n,
                               prime_product_one_minus_pow(3, f), mu_cube));
    return out;
}

// ---- ramanujan --------------------------------------------------------------

std::vector<VerificationRecord> suite_ramanujan(long long k, const Tolerance& tol) {
    std::vector<VerificationRecord> out;
    out.push_back(exact_record("ramanujan", "sum j^2 R_k(j)", k, weighted_ramanujan(2, k),
                               weighted_ramanujan_direct(2, k)));
    out.push_back(exact_record("ramanujan", "sum j^4 R_k(j)", k, weighted_ramanujan(4, k),
                               weighted_ramanujan_direct(4, k)));

    // G(z, chi0) against the exact R_k(z); full z-sweep for k <= 200 (the
    // invariant's range), a fixed sample beyond that to keep sweeps O(k).
    auto group = std::make_shared<const UnitGroup>(k);
    DirichletCharacter chi0(group, std::vector<long long>(group->components().size(), 0));
    auto values = chi0.value_table();
    auto roots = unit_roots(k);
    std::vector<long long> zs;
    if (k <= 200) {
        zs.resize(static_cast<std::size_t>(k));
        std::iota(zs.begin(), zs.end(), 1);
    } else {
        for (long long z = 1; z <= 32; ++z) zs.push_back(z);
        for (long long z = k - 32; z <= k; ++z) zs.push_back(z);
    }
    double max_dev = 0.0;
    for (long long z : zs) {
        KahanSum<Complex> acc;
        for (long long m = 1; m <= k; ++m)
            acc.add(values[static_cast<std::size_t>(m % k)] *
                    roots[static_cast<std::size_t>(m % k * (z % k) % k)]);
        double exact = static_cast<double>(ramanujan_sum(k, z));
        max_dev = std::max(max_dev, std::abs(acc.value() - Complex(exact, 0.0)));
    }
    out.push_back(numeric_record("ramanujan", "G(z,chi0) = R_k(z) max dev", k, "0", 0.0,
                                 Complex(max_dev, 0.0), tol));
    return out;
}

// ---- finiteform -------------------------------------------------------------

std::vector<VerificationRecord> suite_finiteform(long long k, const Tolerance& tol) {
    std::vector<VerificationRecord> out;
    auto chars = characters(k);
    LSeriesConfig cfg3 = LSeriesConfig::for_exponent(3, k);
    LSeriesConfig cfg4 = LSeriesConfig::for_exponent(4, k);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        if (chi.is_principal()) continue;
        auto table = gauss_sum_table(chi);
        bool odd = chi.parity() == Parity::Odd;

        if (odd) {
            Complex closed = l3_closed(chi, table);
            Complex series = l_series(3, chi, cfg3);
            out.push_back(numeric_record("finiteform", "|L3 closed| = |L3 series|" + chi_tag(i), k,
                                         "", std::abs(closed), Complex(std::abs(series), 0.0),
                                         tol));
            Complex ff = general_finite_form(3, chi, table);
            out.push_back(numeric_record("finiteform", "finite(3) = L3 closed" + chi_tag(i), k, "",
                                         std::abs(closed), Complex(std::abs(ff), 0.0), tol));
            // S(2,chi) = S(1,chi) for odd chi
            Complex s2 = s_weighted(2, k, table), s1 = s_weighted(1, k, table);
            out.push_back(
                numeric_record("finiteform", "S(2) = S(1)" + chi_tag(i), k, "", 0.0, s2 - s1, tol));
        } else {
            Complex closed = l4_closed(chi, table);
            Complex series = l_series(4, chi, cfg4);
            out.push_back(numeric_record("finiteform", "|L4 closed| = |L4 series|" + chi_tag(i), k,
                                         "", std::abs(closed), Complex(std::abs(series), 0.0),
                                         tol));
            Complex ff = general_finite_form(4, chi, table);
            out.push_back(numeric_record("finiteform", "finite(4) = L4 closed" + chi_tag(i), k, "",
                                         std::abs(closed), Complex(std::abs(ff), 0.0), tol));
            // S(3,chi) = 3/2 S(2,chi) for even chi
            Complex s3 = s_weighted(3, k, table), s2 = s_weighted(2, k, table);
            out.push_back(numeric_record("finiteform", "S(3) = 3/2 S(2)" + chi_tag(i), k, "", 0.0,
                                         s3 - 1.5 * s2, tol));
        }

        // opposite-parity vanishing: sum_q C(r,q) B_q S(r-q, chi) = 0 when
        // chi and r have opposite parity
        for (int r = 1; r <= 4; ++r) {
            bool r_odd = r % 2 == 1;
            if (r_odd == odd) continue;
            KahanSum<Complex> acc;
            for (int q = 0; q <= 2 * (r / 2); ++q) {
                Rational bq = bernoulli(static_cast<unsigned>(q));
                if (bq == 0) continue;
                double coeff = binomial(static_cast<unsigned>(r), static_cast<unsigned>(q))
                                   .convert_to<double>() *
                               to_double(bq);
                acc.add(coeff * s_weighted(r - q, k, table));
            }
            out.push_back(numeric_record("finiteform",
                                         "vanish r=" + std::to_string(r) + chi_tag(i), k, "", 0.0,
                                         acc.value(), tol));
        }
    }
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"theorem3", "theorem4",       "trig",
                                                   "alpha",    "charproperties", "phi4",
                                                   "ramanujan", "finiteform"};
    return names;
}

bool is_suite_name(const std::string& name) {
    const auto& names = suite_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<VerificationRecord> run_suite_for_k(const std::string& suite, long long k,
                                                const Tolerance& tol) {
    if (suite == "theorem3") return suite_theorem(3, k, tol);
    if (suite == "theorem4") return suite_theorem(4, k, tol);
    if (suite == "trig") return suite_trig(k, tol);
    if (suite == "alpha") return alpha_identity_suite(k, tol);
    if (suite == "charproperties") return suite_charproperties(k, tol);
    if (suite == "phi4") return suite_phi4(k, tol);
    if (suite == "ramanujan") return suite_ramanujan(k, tol);
    if (suite == "finiteform") return suite_finiteform(k, tol);
    throw std::invalid_argument("unknown suite: " + suite);
}

Report run_verify_suite(const std::string& suite, long long k_min, long long k_max,
                        const Tolerance& tol, int workers) {
    if (!is_suite_name(suite)) throw std::invalid_argument("unknown suite: " + suite);
    if (k_min < 3 || k_min > k_max)
        throw std::invalid_argument("verify requires 3 <= k_min <= k_max");
    workers = std::max(1, workers);

    std::size_t count = static_cast<std::size_t>(k_max - k_min + 1);
    std::vector<std::vector<VerificationRecord>> per_k(count);
    std::atomic<long long> next{k_min};
    std::atomic<bool> failed{false};
    std::string error;
    std::mutex error_mutex;

    auto work = [&]() {
        for (;;) {
            long long k = next.fetch_add(1);
            if (k > k_max || failed.load()) return;
            try {
                per_k[static_cast<std::size_t>(k - k_min)] = run_suite_for_k(suite, k, tol);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                error = e.what();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failed.load()) throw std::runtime_error("suite " + suite + " failed: " + error);

    Report report;
    report.tool = "meansq 0.1.0";
    report.suite = suite;
    report.k_min = k_min;
    report.k_max = k_max;
    report.tolerance = tol;
    report.workers = workers;
    report.timestamp = utc_timestamp();
    for (auto& recs : per_k)
        for (auto& r : recs) report.records.push_back(std::move(r));
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const VerificationRecord& a, const VerificationRecord& b) {
                         if (a.suite != b.suite) return a.suite < b.suite;
                         if (a.k != b.k) return a.k < b.k;
                         return a.identity < b.identity;
                     });
    return report;
}

int default_workers() {
    if (const char* env = std::getenv("NT_WORKERS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

}  // namespace meansq
