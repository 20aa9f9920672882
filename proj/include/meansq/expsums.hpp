#pragma once

// Gauss sums, Ramanujan sums, the (j/k)^m-weighted sums S(m,chi), the
// closed forms for sum_{j<k} j^r e^{+-2*pi*i*m*j/k}, the alpha-ratio
// identity suite from the two mean-square proofs, and the weighted
// Ramanujan sums sum j^e R_k(j).

#include "meansq/characters.hpp"
#include "meansq/numeric.hpp"
#include "meansq/rational.hpp"
#include "meansq/record.hpp"

#include <vector>

namespace meansq {

// G(z, chi) = sum_{m=1}^{k} chi(m) e^{2*pi*i*m*z/k}, direct compensated
// summation.
Complex gauss_sum(long long z, const DirichletCharacter& chi);

// G(j, chi) for j = 1..k in one pass (index j-1). O(k^2) once per
// character; every finite L form reads from this.
std::vector<Complex> gauss_sum_table(const DirichletCharacter& chi);

// R_k(z) as an exact integer via R_k(z) = phi(k) mu(k/(k,z)) / phi(k/(k,z)).
long long ramanujan_sum(long long k, long long z);

// The numeric oracle variant: sum of e^{2*pi*i*m*z/k} over reduced m.
Complex ramanujan_sum_numeric(long long k, long long z);

// S(m, chi) = sum_{j=1}^{k} (j/k)^m G(j, chi).
Complex s_weighted(int m, const DirichletCharacter& chi);
Complex s_weighted(int m, long long k, const std::vector<Complex>& gauss_table);

// Closed form of sum_{j=1}^{k-1} j^r e^{sign * 2*pi*i*m*j/k} as a rational
// function of alpha = e^{2*pi*i*m/k}; r in 1..4, sign in {+1,-1}, m reduced.
// Rejects gcd(m,k) != 1 (alpha = 1 is a pole of every term).
Complex jr_alpha_sum_closed(int r, long long m, long long k, int sign);

// One alpha-ratio identity: sum over reduced m of coef * k^kpow * alpha^t /
// (alpha-1)^d equals a rational combination of phi(k), Jordan totients and
// the closed cosecant sums. Coefficients are the paper's displays verbatim.
struct AlphaIdentity {
    const char* id;
    long long coef;
    int kpow;
    int t;  // power of alpha in the numerator
    int d;  // power of (alpha - 1) in the denominator
    // RHS = sum of num/den * k^kpow * basis(k) over these terms
    enum Basis { Phi, J2, J4, J6, Csc6, Csc8 };
    struct Term {
        Basis basis;
        long long num;
        long long den;
        int kpow;
    };
    std::vector<Term> rhs;
};

const std::vector<AlphaIdentity>& alpha_identity_registry();

// Exact RHS value of one identity at a concrete k.
Rational alpha_identity_rhs(const AlphaIdentity& ident, long long k);

// Direct compensated summation of the LHS over reduced residues (m paired
// with k-m, so the imaginary part cancels bit-exactly).
Complex alpha_identity_lhs(const AlphaIdentity& ident, long long k);

// Every registry identity at modulus k, plus the cotangent-vanishing
// companion sum cot(pi*m/k) = 0. Failures are recorded, not thrown.
std::vector<VerificationRecord> alpha_identity_suite(long long k, const Tolerance& tol);

// sum_{j=1}^{k-1} j^e R_k(j) in closed form, e in {2, 4}:
//   e=2: -k^2 phi(k)/2 + k J2(k)/6
//   e=4: -k^4 phi(k)/2 + k^3 J2(k)/3 - k J4(k)/30
// computed in exact rationals with integrality asserted.
BigInt weighted_ramanujan(int e, long long k);

// The exact brute-force companion, summing j^e R_k(j) term by term.
BigInt weighted_ramanujan_direct(int e, long long k);

}  // namespace meansq
