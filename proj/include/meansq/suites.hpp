#pragma once

// The verification suites behind `verify <suite>`: each maps a modulus to
// the records for the identities it checks, and the runner sweeps a k-range
// in parallel with a deterministic merge.

#include "meansq/record.hpp"

#include <string>
#include <vector>

namespace meansq {

// Suite names accepted by run_verify_suite, in display order.
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// Records for a single modulus (n for the phi4 suite).
std::vector<VerificationRecord> run_suite_for_k(const std::string& suite, long long k,
                                                const Tolerance& tol);

// Sweeps k_min..k_max across `workers` threads; records come back sorted by
// (suite, k, identity), so identical invocations emit identical reports.
Report run_verify_suite(const std::string& suite, long long k_min, long long k_max,
                        const Tolerance& tol, int workers);

// Workers default: NT_WORKERS env var if set, else hardware concurrency.
int default_workers();

// ISO-8601 UTC now; the one non-deterministic report field.
std::string utc_timestamp();

}  // namespace meansq
