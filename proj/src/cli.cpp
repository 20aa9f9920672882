#include "meansq/cli.hpp"

#include "meansq/characters.hpp"
#include "meansq/lfunc.hpp"
#include "meansq/multiplicative.hpp"
#include "meansq/record.hpp"
#include "meansq/suites.hpp"
#include "meansq/trigsums.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace meansq::cli {

namespace {

constexpr const char* kVersion = "meansq 0.1.0";

struct KRange {
    long long min = 0;
    long long max = 0;
};

// "--k 3..60" style range
std::optional<KRange> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) return std::nullopt;
    try {
        std::size_t used = 0;
        long long lo = std::stoll(s.substr(0, pos), &used);
        if (used != pos) return std::nullopt;
        std::string rest = s.substr(pos + 2);
        long long hi = std::stoll(rest, &used);
        if (used != rest.size()) return std::nullopt;
        return KRange{lo, hi};
    } catch (...) {
        return std::nullopt;
    }
}

// Writes to --out or stdout; returns false when the file cannot be opened.
bool with_output(const std::string& out_path, const std::function<void(std::ostream&)>& fn) {
    if (out_path.empty()) {
        fn(std::cout);
        return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file: " << out_path << "\n";
        return false;
    }
    fn(f);
    return f.good();
}

// ---- table command ----------------------------------------------------------

struct TableCell {
    std::string text;   // exact strings ("p/q") and labels
    bool is_number = false;
    double number = 0.0;
    bool is_int = false;
    long long integer = 0;
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<TableCell>> rows;
};

TableCell cell(std::string s) { return {std::move(s), false, 0.0, false, 0}; }
TableCell cell(double x) { return {format_double(x), true, x, false, 0}; }
TableCell cell(long long n) { return {std::to_string(n), false, 0.0, true, n}; }

Table make_table(const std::string& quantity, long long k_min, long long k_max, int s_param) {
    Table t;
    if (quantity == "jordan") {
        t.columns = {"k", "s", "jordan"};
        for (long long k = k_min; k <= k_max; ++k)
            t.rows.push_back({cell(k), cell(static_cast<long long>(s_param)),
                              cell(jordan_totient(s_param, k).str())});
    } else if (quantity == "csc") {
        t.columns = {"k", "r", "closed_exact", "value"};
        for (long long k = k_min; k <= k_max; ++k) {
            Rational c = csc_power_sum_closed(s_param, k);
            t.rows.push_back({cell(k), cell(static_cast<long long>(s_param)),
                              cell(to_fraction_string(c)), cell(to_double(c))});
        }
    } else if (quantity == "meansq3" || quantity == "meansq4") {
        int r = quantity == "meansq3" ? 3 : 4;
        t.columns = {"k", "scaled_exact", "value"};
        for (long long k = k_min; k <= k_max; ++k) {
            MeanSquareClosed ms = mean_square_closed(r, k);
            Rational scaled = ms.rational_part *
                              Rational((r == 3 ? 90 : 27) *
                                       boost::multiprecision::pow(BigInt(k), r == 3 ? 6 : 8));
            t.rows.push_back({cell(k), cell(to_fraction_string(scaled)), cell(ms.value)});
        }
    } else if (quantity == "charcount") {
        t.columns = {"k", "phi", "odd", "even"};
        for (long long k = k_min; k <= k_max; ++k) {
            auto chars = characters(k);
            long long odd = 0;
            for (const auto& chi : chars) odd += chi.parity() == Parity::Odd ? 1 : 0;
            t.rows.push_back({cell(k), cell(static_cast<long long>(chars.size())), cell(odd),
                              cell(static_cast<long long>(chars.size()) - odd)});
        }
    } else {
        throw CLI::ValidationError("table", "unknown quantity: " + quantity);
    }
    return t;
}

void emit_table_csv(std::ostream& os, const Table& t) {
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << t.columns[i] << (i + 1 < t.columns.size() ? "," : "\n");
    for (const auto& row : t.rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i].text << (i + 1 < row.size() ? "," : "\n");
}

void emit_table_json(std::ostream& os, const std::string& quantity, const Table& t) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["quantity"] = quantity;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (row[i].is_number)
                obj[t.columns[i]] = row[i].number;
            else if (row[i].is_int)
                obj[t.columns[i]] = row[i].integer;
            else
                obj[t.columns[i]] = row[i].text;
        }
        rows.push_back(std::move(obj));
    }
    j["rows"] = std::move(rows);
    os << j.dump(2) << "\n";
}

// ---- chartable command -------------------------------------------------------

void emit_chartable_csv(std::ostream& os, long long k) {
    auto group = std::make_shared<const UnitGroup>(k);
    auto chars = characters(group);
    os << "chi,index_vector,parity,order,values\n";
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        std::string idx;
        for (std::size_t c = 0; c < chi.index_vector().size(); ++c)
            idx += (c ? ";" : "") + std::to_string(chi.index_vector()[c]);
        std::string values;
        for (long long m = 1; m <= k; ++m) {
            RootOfUnity v = chi.eval(m);
            values += (m > 1 ? ";" : "") + (v.zero ? std::string("-") : v.to_string());
        }
        os << i << "," << idx << "," << (chi.parity() == Parity::Odd ? "odd" : "even") << ","
           << chi.order() << "," << values << "\n";
    }
}

void emit_chartable_json(std::ostream& os, long long k) {
    auto group = std::make_shared<const UnitGroup>(k);
    auto chars = characters(group);
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["k"] = k;
    j["phi"] = group->phi();
    j["exponent"] = group->exponent();
    nlohmann::ordered_json comps = nlohmann::ordered_json::array();
    for (const auto& c : group->components())
        comps.push_back({{"prime_power", c.prime_power},
                         {"generator", c.generator},
                         {"order", c.order}});
    j["components"] = std::move(comps);
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        nlohmann::ordered_json values = nlohmann::ordered_json::array();
        for (long long m = 1; m <= k; ++m) {
            RootOfUnity v = chi.eval(m);
            values.push_back(v.zero ? "-" : v.to_string());
        }
        list.push_back({{"chi", i},
                        {"index_vector", chi.index_vector()},
                        {"parity", chi.parity() == Parity::Odd ? "odd" : "even"},
                        {"order", chi.order()},
                        {"values", std::move(values)}});
    }
    j["characters"] = std::move(list);
    os << j.dump(2) << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"Closed-form identity checker for Dirichlet L-function mean squares"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // verify
    std::string suite, v_range, v_format = "json", v_out;
    double atol = 1e-8, rtol = 1e-9;
    int workers = default_workers();
    auto* verify = app.add_subcommand("verify", "Run an identity suite over a modulus range");
    verify->add_option("suite", suite, "One of: theorem3 theorem4 trig alpha charproperties phi4 ramanujan finiteform")
        ->required();
    verify->add_option("--k", v_range, "Modulus range min..max (k_min >= 3)")->required();
    verify->add_option("--atol", atol, "Absolute tolerance coefficient; effective atol = coeff * k");
    verify->add_option("--rtol", rtol, "Relative tolerance");
    verify->add_option("--workers", workers, "Worker threads (default: NT_WORKERS or all cores)");
    verify->add_option("--format", v_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    verify->add_option("--out", v_out, "Output path (default: stdout)");

    // table
    std::string quantity, t_range, t_format = "csv", t_out;
    int s_param = 1;
    auto* table = app.add_subcommand("table", "Emit a table of computed quantities");
    table->add_option("quantity", quantity, "One of: jordan csc meansq3 meansq4 charcount")
        ->required()
        ->check(CLI::IsMember({"jordan", "csc", "meansq3", "meansq4", "charcount"}));
    table->add_option("--k", t_range, "Modulus range min..max")->required();
    table->add_option("--s", s_param, "Order parameter (jordan: s, csc: r)");
    table->add_option("--format", t_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    table->add_option("--out", t_out, "Output path (default: stdout)");

    // chartable
    long long ct_k = 0;
    std::string ct_format = "csv", ct_out;
    auto* chartable = app.add_subcommand("chartable", "Character table for one modulus");
    chartable->add_option("k", ct_k, "Modulus (k >= 1)")->required();
    chartable->add_option("--format", ct_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    chartable->add_option("--out", ct_out, "Output path (default: stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (!is_suite_name(suite)) {
                std::cerr << "usage error: unknown suite: " << suite << "\n";
                return 2;
            }
            auto range = parse_range(v_range);
            if (!range || range->min < 3 || range->min > range->max) {
                std::cerr << "usage error: --k requires min..max with 3 <= min <= max\n";
                return 2;
            }
            if (workers < 1) {
                std::cerr << "usage error: --workers must be >= 1\n";
                return 2;
            }
            Tolerance tol{atol, rtol};
            Report report = run_verify_suite(suite, range->min, range->max, tol, workers);
            bool wrote = with_output(v_out, [&](std::ostream& os) {
                if (v_format == "csv")
                    emit_csv(os, report);
                else
                    emit_json(os, report);
            });
            if (!wrote) return 1;
            std::cerr << "suite " << suite << ": " << report.records.size() << " records, "
                      << report.failure_count() << " failures\n";
            return report.all_pass() ? 0 : 1;
        }
        if (table->parsed()) {
            auto range = parse_range(t_range);
            if (!range || range->min < 1 || range->min > range->max) {
                std::cerr << "usage error: --k requires min..max with 1 <= min <= max\n";
                return 2;
            }
            if ((quantity == "csc" || quantity == "meansq3" || quantity == "meansq4") &&
                range->min < 3) {
                std::cerr << "usage error: " << quantity << " requires k >= 3\n";
                return 2;
            }
            if (quantity == "jordan" && (s_param < 1 || s_param > 16)) {
                std::cerr << "usage error: jordan requires 1 <= s <= 16\n";
                return 2;
            }
            if (quantity == "csc" && (s_param < 1 || s_param > 4)) {
                std::cerr << "usage error: csc requires 1 <= r <= 4 (via --s)\n";
                return 2;
            }
            Table t = make_table(quantity, range->min, range->max, s_param);
            bool wrote = with_output(t_out, [&](std::ostream& os) {
                if (t_format == "csv")
                    emit_table_csv(os, t);
                else
                    emit_table_json(os, quantity, t);
            });
            return wrote ? 0 : 1;
        }
        if (chartable->parsed()) {
            if (ct_k < 1) {
                std::cerr << "usage error: chartable requires k >= 1\n";
                return 2;
            }
            bool wrote = with_output(ct_out, [&](std::ostream& os) {
                if (ct_format == "csv")
                    emit_chartable_csv(os, ct_k);
                else
                    emit_chartable_json(os, ct_k);
            });
            return wrote ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

}  // namespace meansq::cli
