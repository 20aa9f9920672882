#pragma once

// The full Dirichlet character group mod k with exact root-of-unity values.
//
// (Z/k)* is decomposed over prime powers by CRT: odd p^a contributes one
// cyclic component on its smallest primitive root; 2 contributes nothing,
// 4 a component of order 2, and 2^a (a >= 3) two components of orders 2 and
// 2^{a-2} generated by the classes of -1 and 5. Components are ordered by
// ascending prime power (and within 2^a the order-2 component first), which
// together with lexicographic index-vector enumeration fixes stable
// character IDs across runs.
//
// Character values are carried as exact exponents a over the group exponent
// e, denoting e^{2*pi*i*a/e} in the canonical fixed-e form 0 <= a < e (NOT
// reduced to lowest terms); they convert to complex only inside numeric
// sums, so conjugation, multiplicativity and orthogonality can be checked
// without floating error.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace meansq {

struct RootOfUnity {
    long long num = 0;    // exponent a, 0 <= a < order
    long long order = 1;  // e
    bool zero = false;    // the distinguished zero value (chi(m) with gcd(m,k)>1)

    static RootOfUnity zero_value(long long e) { return {0, e, true}; }
    static RootOfUnity one(long long e) { return {0, e, false}; }

    RootOfUnity conj() const;
    RootOfUnity operator*(const RootOfUnity& o) const;  // adds exponents mod e
    bool operator==(const RootOfUnity& o) const = default;

    bool is_one() const { return !zero && num == 0; }
    bool is_minus_one() const { return !zero && order % 2 == 0 && num * 2 == order; }
    std::complex<double> to_complex() const;
    std::string to_string() const;  // "a/e", or "0" for the zero value
};

struct UnitGroupComponent {
    long long prime_power;  // the p^a this component comes from
    long long generator;    // lifted to mod k (== 1 mod k/p^a)
    long long order;
};

class UnitGroup {
  public:
    explicit UnitGroup(long long k);

    long long modulus() const { return k_; }
    long long phi() const { return phi_; }
    long long exponent() const { return exponent_; }
    const std::vector<UnitGroupComponent>& components() const { return components_; }

    bool is_reduced(long long m) const;  // gcd(m, k) == 1, m taken mod k
    // Exponent vector of m on the component generators; m must be reduced.
    std::vector<long long> dlog(long long m) const;
    // Ascending list of the reduced residues in 1..k (k == 1 yields {1}).
    const std::vector<long long>& reduced_residues() const { return residues_; }

  private:
    friend class DirichletCharacter;
    long long reduce(long long m) const;
    long long k_;
    long long phi_;
    long long exponent_;
    std::vector<UnitGroupComponent> components_;
    std::vector<long long> residues_;
    std::vector<int32_t> residue_index_;  // residue -> dense index, -1 if not reduced
    std::vector<int32_t> dlog_flat_;      // [index * ncomp + i]
};

enum class Parity { Even, Odd };

class DirichletCharacter {
  public:
    DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<long long> index);

    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }
    long long modulus() const { return group_->modulus(); }
    const std::vector<long long>& index_vector() const { return index_; }

    // chi(m): zero when gcd(m,k) > 1, else the root of unity with exponent
    // sum_i c_i * dlog_i(m) * (e / order_i) mod e.
    RootOfUnity eval(long long m) const;

    bool is_principal() const;
    Parity parity() const;  // odd iff eval(k-1) == -1
    long long order() const;
    DirichletCharacter conjugate() const;  // index negated componentwise
    // pointwise product (same modulus): index vectors added mod orders
    DirichletCharacter operator*(const DirichletCharacter& o) const;

    // chi(m) for m = 0..k-1 as complex values; the workhorse of all the
    // numeric sums (Gauss sums, L-series).
    std::vector<std::complex<double>> value_table() const;

    bool operator==(const DirichletCharacter& o) const {
        return group_->modulus() == o.group_->modulus() && index_ == o.index_;
    }

  private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<long long> index_;  // 0 <= c_i < order_i
};

// All phi(k) characters mod k, principal first, lexicographic over index
// vectors (last component cycling fastest).
std::vector<DirichletCharacter> characters(std::shared_ptr<const UnitGroup> group);
std::vector<DirichletCharacter> characters(long long k);

// Exact sum of a multiset of roots of unity given as exponent -> count over
// a common order e. Recognizes the two shapes the character identities
// produce: a single repeated exponent (sum = count * zeta^a, an integer for
// a in {0, e/2}), and counts uniform over a coset of a nontrivial cyclic
// subgroup of Z_e (sum exactly 0). Returns nullopt for anything else.
std::optional<long long> exact_root_multiset_sum(
    const std::vector<std::pair<long long, long long>>& exponent_counts, long long e);

// sum over reduced residues m of chi(m), exactly (nullopt if the multiset is
// not of a recognized exact shape, which for genuine characters never happens).
std::optional<long long> exact_residue_sum(const DirichletCharacter& chi);

// sum over characters of the given parity of chi(u), exactly.
std::optional<long long> exact_parity_character_sum(
    const std::vector<DirichletCharacter>& all_chars, Parity parity, long long u);

}  // namespace meansq
