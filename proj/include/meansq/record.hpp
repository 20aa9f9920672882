#pragma once

// Verification records and reports: one record per identity check, with the
// closed-form value, the oracle value, errors and a pass flag. Pass rule
// for numeric checks: abs_err < atol + rtol * |closed_value| with
// atol = atol_coeff * k (cancellation grows with k). Exact integer checks
// set pass by exact equality, never through doubles.

#include "meansq/numeric.hpp"
#include "meansq/rational.hpp"

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

namespace meansq {

struct Tolerance {
    double atol_coeff = 1e-8;  // effective atol is atol_coeff * k
    double rtol = 1e-9;
    double atol(long long k) const { return atol_coeff * static_cast<double>(k); }
};

struct VerificationRecord {
    std::string suite;
    std::string identity;  // paper label of the identity being checked
    long long k = 0;
    std::string closed_exact;  // exact rational part as a string, "" when none
    double closed_value = 0.0;
    double oracle_value = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / |closed_value|; 0 when closed_value == 0
    bool pass = false;
};

// Numeric comparison record. The oracle may be complex (its imaginary part
// is spurious for every identity in scope and is folded into abs_err).
VerificationRecord numeric_record(std::string suite, std::string identity, long long k,
                                  std::string closed_exact, double closed, Complex oracle,
                                  const Tolerance& tol);

// Exact integer comparison record.
VerificationRecord exact_record(std::string suite, std::string identity, long long k,
                                const BigInt& closed, const BigInt& oracle);

// Exact rational comparison record.
VerificationRecord exact_record(std::string suite, std::string identity, long long k,
                                const Rational& closed, const Rational& oracle);

// Boolean property record (character-theory checks): pass iff ok, with the
// expected/actual pair recorded for the report.
VerificationRecord property_record(std::string suite, std::string identity, long long k,
                                   double expected, double actual, bool ok);

struct Report {
    int schema = 1;
    std::string tool;
    std::string suite;
    long long k_min = 0;
    long long k_max = 0;
    Tolerance tolerance;
    int workers = 1;
    std::string timestamp;  // ISO-8601 UTC; the only non-deterministic field
    std::vector<VerificationRecord> records;

    bool all_pass() const;
    std::size_t failure_count() const;
};

// Shortest round-trip decimal form of a double (to_chars), the only float
// formatting used in reports so re-runs are byte-identical.
std::string format_double(double x);

void emit_csv(std::ostream& os, const Report& report);
void emit_json(std::ostream& os, const Report& report);

}  // namespace meansq
