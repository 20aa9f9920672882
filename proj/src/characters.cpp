#include "meansq/characters.hpp"

#include "meansq/multiplicative.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace meansq {

namespace {

long long mulmod(long long a, long long b, long long k) {
    return static_cast<long long>(static_cast<__int128>(a) * b % k);
}

long long powmod(long long g, long long e, long long k) {
    long long r = 1 % k;
    g %= k;
    while (e > 0) {
        if (e & 1) r = mulmod(r, g, k);
        g = mulmod(g, g, k);
        e >>= 1;
    }
    return r;
}

// Smallest primitive root modulo an odd prime power q (deterministic search,
// so character indexing is reproducible across runs).
long long smallest_primitive_root(long long q) {
    long long phi = euler_phi(q);
    std::vector<long long> prime_factors;
    for (auto [p, a] : factorize(phi).factors) prime_factors.push_back(p);
    for (long long g = 2; g < q; ++g) {
        if (std::gcd(g, q) != 1) continue;
        bool primitive = true;
        for (long long p : prime_factors)
            if (powmod(g, phi / p, q) == 1) {
                primitive = false;
                break;
            }
        if (primitive) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found (modulus not an odd prime power?)");
}

// Lift x in (Z/q)* to the residue mod k that is x mod q and 1 mod k/q.
long long crt_lift(long long x, long long q, long long k) {
    long long m = k / q;  // coprime to q
    // y = 1 + (x - 1) * m * (m^{-1} mod q)
    long long minv = powmod(m % q, euler_phi(q) - 1, q);
    long long t = mulmod(((x - 1) % q + q) % q, mulmod(m % k, minv % k, k), k);
    return (1 + t) % k;
}

}  // namespace

RootOfUnity RootOfUnity::conj() const {
    if (zero) return *this;
    return {num == 0 ? 0 : order - num, order, false};
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
    if (zero || o.zero) return zero_value(order);
    return {(num + o.num) % order, order, false};
}

std::complex<double> RootOfUnity::to_complex() const {
    if (zero) return {0.0, 0.0};
    double t = 2.0 * std::numbers::pi * static_cast<double>(num) / static_cast<double>(order);
    return {std::cos(t), std::sin(t)};
}

std::string RootOfUnity::to_string() const {
    if (zero) return "0";
    return std::to_string(num) + "/" + std::to_string(order);
}

UnitGroup::UnitGroup(long long k) : k_(k) {
    if (k < 1) throw std::invalid_argument("UnitGroup: k must be >= 1");
    Factorization f = factorize(k);
    phi_ = euler_phi(f);

    // prime powers in ascending order (factorize yields ascending primes;
    // re-sort by p^a value so 3 precedes 4, etc.)
    std::vector<long long> prime_powers;
    for (auto [p, a] : f.factors) {
        long long q = 1;
        for (int i = 0; i < a; ++i) q *= p;
        prime_powers.push_back(q);
    }
    std::sort(prime_powers.begin(), prime_powers.end());

    for (long long q : prime_powers) {
        if (q % 2 != 0) {
            components_.push_back({q, crt_lift(smallest_primitive_root(q), q, k), euler_phi(q)});
        } else if (q == 2) {
            // trivial group, no component
        } else if (q == 4) {
            components_.push_back({q, crt_lift(3, 4, k), 2});
        } else {
            components_.push_back({q, crt_lift(q - 1, q, k), 2});
            components_.push_back({q, crt_lift(5, q, k), q / 4});
        }
    }

    exponent_ = 1;
    for (const auto& c : components_) exponent_ = std::lcm(exponent_, c.order);

    // discrete logs by direct enumeration of the generator lattice
    std::size_t t = components_.size();
    residue_index_.assign(static_cast<std::size_t>(k), -1);
    residues_.reserve(static_cast<std::size_t>(phi_));
    dlog_flat_.assign(static_cast<std::size_t>(phi_) * std::max<std::size_t>(t, 1), 0);

    std::vector<std::vector<long long>> powers(t);
    for (std::size_t i = 0; i < t; ++i) {
        powers[i].resize(static_cast<std::size_t>(components_[i].order));
        powers[i][0] = 1 % k;
        for (long long e = 1; e < components_[i].order; ++e)
            powers[i][static_cast<std::size_t>(e)] =
                mulmod(powers[i][static_cast<std::size_t>(e - 1)], components_[i].generator, k);
    }
    std::vector<long long> vec(t, 0);
    for (long long idx = 0; idx < phi_; ++idx) {
        long long m = 1 % k;
        for (std::size_t i = 0; i < t; ++i)
            m = mulmod(m, powers[i][static_cast<std::size_t>(vec[i])], k);
        if (residue_index_[static_cast<std::size_t>(m)] != -1)
            throw std::logic_error("UnitGroup: generator lattice hit a residue twice");
        residue_index_[static_cast<std::size_t>(m)] = static_cast<int32_t>(idx);
        for (std::size_t i = 0; i < t; ++i)
            dlog_flat_[static_cast<std::size_t>(idx) * t + i] = static_cast<int32_t>(vec[i]);
        residues_.push_back(m);
        // odometer, last component fastest
        for (std::size_t i = t; i-- > 0;) {
            if (++vec[i] < components_[i].order) break;
            vec[i] = 0;
        }
    }
    std::sort(residues_.begin(), residues_.end());
    if (k == 1) residues_ = {1};
}

long long UnitGroup::reduce(long long m) const {
    long long r = m % k_;
    return r < 0 ? r + k_ : r;
}

bool UnitGroup::is_reduced(long long m) const {
    if (k_ == 1) return true;
    return residue_index_[static_cast<std::size_t>(reduce(m))] >= 0;
}

std::vector<long long> UnitGroup::dlog(long long m) const {
    if (!is_reduced(m)) throw std::invalid_argument("dlog: residue not coprime to modulus");
    std::size_t t = components_.size();
    std::vector<long long> out(t);
    if (k_ == 1) return out;
    auto row = static_cast<std::size_t>(residue_index_[static_cast<std::size_t>(reduce(m))]);
    for (std::size_t i = 0; i < t; ++i) out[i] = dlog_flat_[row * t + i];
    return out;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group,
                                       std::vector<long long> index)
    : group_(std::move(group)), index_(std::move(index)) {
    const auto& comps = group_->components();
    if (index_.size() != comps.size())
        throw std::invalid_argument("DirichletCharacter: index vector size mismatch");
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (index_[i] < 0 || index_[i] >= comps[i].order)
            throw std::invalid_argument("DirichletCharacter: index out of range");
}

RootOfUnity DirichletCharacter::eval(long long m) const {
    long long e = group_->exponent();
    if (!group_->is_reduced(m)) return RootOfUnity::zero_value(e);
    if (group_->modulus() == 1) return RootOfUnity::one(e);
    std::size_t t = index_.size();
    auto row = static_cast<std::size_t>(
        group_->residue_index_[static_cast<std::size_t>(group_->reduce(m))]);
    long long acc = 0;
    for (std::size_t i = 0; i < t; ++i) {
        long long ord = group_->components()[i].order;
        long long d = group_->dlog_flat_[row * t + i];
        acc = (acc + index_[i] * d % e * (e / ord)) % e;
    }
    return {acc, e, false};
}

bool DirichletCharacter::is_principal() const {
    return std::all_of(index_.begin(), index_.end(), [](long long c) { return c == 0; });
}

Parity DirichletCharacter::parity() const {
    return eval(group_->modulus() - 1).is_minus_one() ? Parity::Odd : Parity::Even;
}

long long DirichletCharacter::order() const {
    long long ord = 1;
    for (std::size_t i = 0; i < index_.size(); ++i) {
        long long n = group_->components()[i].order;
        ord = std::lcm(ord, n / std::gcd(n, index_[i]));
    }
    return ord;
}

DirichletCharacter DirichletCharacter::conjugate() const {
    std::vector<long long> neg(index_.size());
    for (std::size_t i = 0; i < index_.size(); ++i) {
        long long n = group_->components()[i].order;
        neg[i] = index_[i] == 0 ? 0 : n - index_[i];
    }
    return {group_, std::move(neg)};
}

DirichletCharacter DirichletCharacter::operator*(const DirichletCharacter& o) const {
    if (group_->modulus() != o.group_->modulus())
        throw std::invalid_argument("DirichletCharacter: product across moduli");
    std::vector<long long> sum(index_.size());
    for (std::size_t i = 0; i < index_.size(); ++i)
        sum[i] = (index_[i] + o.index_[i]) % group_->components()[i].order;
    return {group_, std::move(sum)};
}

std::vector<std::complex<double>> DirichletCharacter::value_table() const {
    long long k = group_->modulus();
    std::vector<std::complex<double>> tbl(static_cast<std::size_t>(std::max<long long>(k, 1)));
    for (long long m = 0; m < k; ++m) tbl[static_cast<std::size_t>(m)] = eval(m).to_complex();
    if (k == 1) tbl[0] = {1.0, 0.0};
    return tbl;
}

std::vector<DirichletCharacter> characters(std::shared_ptr<const UnitGroup> group) {
    const auto& comps = group->components();
    std::size_t t = comps.size();
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(group->phi()));
    std::vector<long long> vec(t, 0);
    for (long long n = 0; n < group->phi(); ++n) {
        out.emplace_back(group, vec);
        for (std::size_t i = t; i-- > 0;) {
            if (++vec[i] < comps[i].order) break;
            vec[i] = 0;
        }
    }
    return out;
}

std::vector<DirichletCharacter> characters(long long k) {
    return characters(std::make_shared<const UnitGroup>(k));
}

std::optional<long long> exact_root_multiset_sum(
    const std::vector<std::pair<long long, long long>>& exponent_counts, long long e) {
    std::map<long long, long long> cnt;
    for (auto [a, c] : exponent_counts)
        if (c != 0) cnt[((a % e) + e) % e] += c;
    if (cnt.empty()) return 0;
    if (cnt.size() == 1) {
        auto [a, c] = *cnt.begin();
        if (a == 0) return c;
        if (2 * a == e) return -c;
        return std::nullopt;
    }
    // uniform over a coset a0 + (e/d) Z of a cyclic subgroup, d > 1: sum is 0
    long long d = static_cast<long long>(cnt.size());
    if (e % d != 0) return std::nullopt;
    long long step = e / d;
    long long a0 = cnt.begin()->first;
    long long mult = cnt.begin()->second;
    long long j = 0;
    for (auto [a, c] : cnt) {
        if (a != a0 + j * step || c != mult) return std::nullopt;
        ++j;
    }
    return 0;
}

std::optional<long long> exact_residue_sum(const DirichletCharacter& chi) {
    const UnitGroup& g = chi.group();
    std::vector<std::pair<long long, long long>> counts;
    for (long long m : g.reduced_residues()) counts.emplace_back(chi.eval(m).num, 1);
    return exact_root_multiset_sum(counts, g.exponent());
}

std::optional<long long> exact_parity_character_sum(
    const std::vector<DirichletCharacter>& all_chars, Parity parity, long long u) {
    if (all_chars.empty()) return std::nullopt;
    long long e = all_chars.front().group().exponent();
    std::vector<std::pair<long long, long long>> counts;
    for (const auto& chi : all_chars) {
        if (chi.parity() != parity) continue;
        RootOfUnity v = chi.eval(u);
        if (v.zero) return std::nullopt;  // u not reduced: sum is over zeros
        counts.emplace_back(v.num, 1);
    }
    return exact_root_multiset_sum(counts, e);
}

}  // namespace meansq
