#include "meansq/record.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <ostream>

namespace meansq {

namespace {

double rel_of(double abs_err, double closed) {
    return closed == 0.0 ? 0.0 : abs_err / std::fabs(closed);
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
    std::string out;
    out.reserve(s.size() + 2);
    out.push_back('"');
    for (char c : s) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

VerificationRecord numeric_record(std::string suite, std::string identity, long long k,
                                  std::string closed_exact, double closed, Complex oracle,
                                  const Tolerance& tol) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.identity = std::move(identity);
    r.k = k;
    r.closed_exact = std::move(closed_exact);
    r.closed_value = closed;
    r.oracle_value = oracle.real();
    r.abs_err = std::abs(oracle - Complex(closed, 0.0));
    r.rel_err = rel_of(r.abs_err, closed);
    r.pass = finite(oracle) && std::isfinite(closed) &&
             r.abs_err < tol.atol(k) + tol.rtol * std::fabs(closed);
    return r;
}

VerificationRecord exact_record(std::string suite, std::string identity, long long k,
                                const BigInt& closed, const BigInt& oracle) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.identity = std::move(identity);
    r.k = k;
    r.closed_exact = closed.str();
    r.closed_value = closed.convert_to<double>();
    r.oracle_value = oracle.convert_to<double>();
    r.abs_err = BigInt(abs(closed - oracle)).convert_to<double>();
    r.rel_err = rel_of(r.abs_err, r.closed_value);
    r.pass = closed == oracle;
    return r;
}

VerificationRecord exact_record(std::string suite, std::string identity, long long k,
                                const Rational& closed, const Rational& oracle) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.identity = std::move(identity);
    r.k = k;
    r.closed_exact = to_fraction_string(closed);
    r.closed_value = to_double(closed);
    r.oracle_value = to_double(oracle);
    r.abs_err = to_double(Rational(abs(closed - oracle)));
    r.rel_err = rel_of(r.abs_err, r.closed_value);
    r.pass = closed == oracle;
    return r;
}

VerificationRecord property_record(std::string suite, std::string identity, long long k,
                                   double expected, double actual, bool ok) {
    VerificationRecord r;
    r.suite = std::move(suite);
    r.identity = std::move(identity);
    r.k = k;
    r.closed_value = expected;
    r.oracle_value = actual;
    r.abs_err = std::fabs(expected - actual);
    r.rel_err = rel_of(r.abs_err, expected);
    r.pass = ok;
    return r;
}

bool Report::all_pass() const {
    return std::all_of(records.begin(), records.end(),
                       [](const VerificationRecord& r) { return r.pass; });
}

std::size_t Report::failure_count() const {
    return static_cast<std::size_t>(std::count_if(
        records.begin(), records.end(), [](const VerificationRecord& r) { return !r.pass; }));
}

void emit_csv(std::ostream& os, const Report& report) {
    os << "suite,identity,k,closed_exact,closed_value,oracle_value,abs_err,rel_err,pass\n";
    for (const auto& r : report.records) {
        os << csv_escape(r.suite) << ',' << csv_escape(r.identity) << ',' << r.k << ','
           << csv_escape(r.closed_exact) << ',' << format_double(r.closed_value) << ','
           << format_double(r.oracle_value) << ',' << format_double(r.abs_err) << ','
           << format_double(r.rel_err) << ',' << (r.pass ? "true" : "false") << "\n";
    }
}

void emit_json(std::ostream& os, const Report& report) {
    nlohmann::ordered_json j;
    j["schema"] = report.schema;
    j["metadata"] = {{"tool", report.tool},
                     {"suite", report.suite},
                     {"k_min", report.k_min},
                     {"k_max", report.k_max},
                     {"atol_coeff", report.tolerance.atol_coeff},
                     {"rtol", report.tolerance.rtol},
                     {"workers", report.workers},
                     {"timestamp", report.timestamp}};
    nlohmann::ordered_json recs = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        recs.push_back({{"suite", r.suite},
                        {"identity", r.identity},
                        {"k", r.k},
                        {"closed_exact", r.closed_exact},
                        {"closed_value", r.closed_value},
                        {"oracle_value", r.oracle_value},
                        {"abs_err", r.abs_err},
                        {"rel_err", r.rel_err},
                        {"pass", r.pass}});
    }
    j["records"] = std::move(recs);
    os << j.dump(2) << "\n";
}

}  // namespace meansq
