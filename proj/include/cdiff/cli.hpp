#pragma once

// Command implementations behind the `cdiff` executable. Each command
// writes to the given streams and returns the process exit status:
//   0 success, 1 verification/consistency failure, 2 usage error, 3 I/O error.

#include "cdiff/central_factorials.hpp"
#include "cdiff/euler_numbers.hpp"
#include "cdiff/gcoeff_stern.hpp"
#include "cdiff/gen_euler.hpp"
#include "cdiff/identities.hpp"
#include "cdiff/table_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstddef>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cdiff::cli {

enum ExitCode : int { ok = 0, failure = 1, usage = 2, io_error = 3 };

/// Raised for invalid flag combinations; maps to exit code 2.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline const std::vector<std::string>& table_families() {
    static const std::vector<std::string> f{"euler", "gen-euler", "cfn-first", "cfn-second",
                                            "gcoeff", "stern", "stirling2"};
    return f;
}

struct TableRequest {
    std::string family;
    std::size_t max = 10;
    std::optional<std::string> method;
    long order = 1;  // r, gen-euler only
    std::string format = "csv";
    std::optional<std::string> out_path;
};

namespace detail {

template <typename T>
ExactTable triangle_table(const std::string& family, std::map<std::string, std::string> params,
                          const Triangle<T>& tri) {
    ExactTable table{family, std::move(params), true, {}};
    for (std::size_t n = 0; n < tri.rows(); ++n) {
        for (std::size_t k = 0; k <= n; ++k) table.rows.push_back({n, k, Rational(tri(n, k))});
    }
    return table;
}

inline void reject_method(const TableRequest& req) {
    if (req.method) throw UsageError("family '" + req.family + "' takes no --method");
}

}  // namespace detail

/// Builds the exact table a request describes; throws UsageError on an
/// invalid family/method combination.
inline ExactTable build_table(const TableRequest& req) {
    std::map<std::string, std::string> params{{"max", std::to_string(req.max)}};
    if (req.family == "euler") {
        EulerMethod method = EulerMethod::kb;
        if (req.method) {
            try {
                method = parse_euler_method(*req.method);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        params["method"] = std::string(method_name(method));
        ExactTable table{req.family, params, false, {}};
        for (const auto& v : euler_sequence(method, req.max - req.max % 2)) {
            table.rows.push_back({v.index, std::nullopt, Rational(v.signed_value)});
        }
        return table;
    }
    if (req.family == "gen-euler") {
        if (req.order < 1) throw UsageError("--order must be >= 1");
        GenEulerMethod method = GenEulerMethod::shov3;
        if (req.method) {
            try {
                method = parse_gen_euler_method(*req.method);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
        }
        if (method == GenEulerMethod::reln && req.order % 2 == 0) {
            throw UsageError("method 'reln' needs an odd --order, got " + std::to_string(req.order));
        }
        params["method"] = std::string(method_name(method));
        params["order"] = std::to_string(req.order);
        ExactTable table{req.family, params, false, {}};
        for (const auto& v : gen_euler_sequence(method, req.order, req.max - req.max % 2)) {
            table.rows.push_back({v.index, std::nullopt, Rational(v.value)});
        }
        return table;
    }
    detail::reject_method(req);
    if (req.family == "cfn-first") return detail::triangle_table(req.family, params, t_table(req.max));
    if (req.family == "cfn-second") return detail::triangle_table(req.family, params, T_table(req.max));
    if (req.family == "gcoeff") return detail::triangle_table(req.family, params, g_table(req.max));
    if (req.family == "stern") return detail::triangle_table(req.family, params, stern_table(req.max));
    if (req.family == "stirling2") return detail::triangle_table(req.family, params, stirling2_table(req.max));
    throw UsageError("unknown table family '" + req.family + "'");
}

inline std::string render_table(const ExactTable& table, const std::string& format) {
    if (format == "csv") return to_csv(table);
    if (format == "json") return to_json(table).dump(2) + "\n";
    throw UsageError("unknown --format '" + format + "' (expected csv or json)");
}

/// Writes to the requested path, or to `out` when no path is given.
inline int emit(const std::string& text, const std::optional<std::string>& path, std::ostream& out,
                std::ostream& err) {
    if (!path) {
        out << text;
        return ok;
    }
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open '" << *path << "' for writing\n";
        return io_error;
    }
    file << text;
    file.close();
    if (!file) {
        err << "error: write to '" << *path << "' failed\n";
        return io_error;
    }
    return ok;
}

inline int cmd_table(const TableRequest& req, std::ostream& out, std::ostream& err) {
    std::string text;
    try {
        text = render_table(build_table(req), req.format);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    return emit(text, req.out_path, out, err);
}

struct VerifyRequest {
    std::vector<std::string> suites{"all"};
    std::size_t max = 20;
    std::string format = "text";
    std::optional<std::string> out_path;
};

inline nlohmann::json report_json(const VerificationReport& r) {
    nlohmann::json j{{"id", r.identity_id()}, {"range", r.param_range()}, {"passed", r.passed()}};
    if (const auto& c = r.counterexample()) {
        j["counterexample"] = {{"parameters", c->parameters}, {"lhs", c->lhs}, {"rhs", c->rhs}};
    } else {
        j["counterexample"] = nullptr;
    }
    return j;
}

inline int cmd_verify(const VerifyRequest& req, std::ostream& out, std::ostream& err) {
    if (req.format != "text" && req.format != "json") {
        err << "error: unknown --format '" << req.format << "' (expected text or json)\n";
        return usage;
    }
    std::vector<const SuiteInfo*> selected;
    for (const auto& id : req.suites) {
        if (id == "all") {
            for (const auto& s : identity_suites()) selected.push_back(&s);
            continue;
        }
        try {
            selected.push_back(&find_suite(id));
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return usage;
        }
    }

    std::vector<VerificationReport> reports;
    reports.reserve(selected.size());
    bool all_passed = true;
    for (const auto* suite : selected) {
        reports.push_back(suite->run(req.max));
        all_passed = all_passed && reports.back().passed();
    }

    std::string text;
    if (req.format == "json") {
        nlohmann::json j{{"max", req.max}, {"passed", all_passed}, {"reports", nlohmann::json::array()}};
        for (const auto& r : reports) j["reports"].push_back(report_json(r));
        text = j.dump(2) + "\n";
    } else {
        for (const auto& r : reports) {
            text += std::string(r.passed() ? "PASS " : "FAIL ") + r.identity_id() + "  [" + r.param_range() + "]\n";
            if (const auto& c = r.counterexample()) {
                text += "     counterexample " + c->parameters + ": lhs = " + c->lhs + ", rhs = " + c->rhs + "\n";
            }
        }
        text += all_passed ? "all identities hold\n" : "some identities FAILED\n";
    }
    int rc = emit(text, req.out_path, out, err);
    if (rc != ok) return rc;
    return all_passed ? ok : failure;
}

struct BenchResult {
    std::string method;
    std::size_t n_max = 0;
    double seconds = 0;
    std::size_t peak_bits = 0;
};

struct BenchRequest {
    std::size_t max = 200;
    std::vector<std::string> methods{"kb"};
    std::string format = "text";
};

/// Times each Euler route up to index `max`; all routes must agree before
/// anything is reported.
inline int cmd_bench(const BenchRequest& req, std::ostream& out, std::ostream& err,
                     std::vector<BenchResult>* results_out = nullptr) {
    if (req.max < 2) {
        err << "error: --max must be >= 2\n";
        return usage;
    }
    if (req.format != "text" && req.format != "csv") {
        err << "error: unknown --format '" << req.format << "' (expected text or csv)\n";
        return usage;
    }
    std::vector<EulerMethod> methods;
    try {
        for (const auto& m : req.methods) methods.push_back(parse_euler_method(m));
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }
    if (methods.empty()) {
        err << "error: no methods given\n";
        return usage;
    }

    const std::size_t max_index = req.max - req.max % 2;
    std::vector<BenchResult> results;
    std::vector<EulerValue> reference;
    for (auto method : methods) {
        const auto start = std::chrono::steady_clock::now();
        auto values = euler_sequence(method, max_index);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        std::size_t bits = 0;
        for (const auto& v : values) bits = std::max(bits, mpz_sizeinbase(v.unsigned_value.get_mpz_t(), 2));
        if (reference.empty()) {
            reference = std::move(values);
        } else {
            for (std::size_t i = 0; i < reference.size(); ++i) {
                if (values[i].signed_value != reference[i].signed_value) {
                    err << "error: " << method_name(method) << " disagrees with " << method_name(methods.front())
                        << " at index " << reference[i].index << "\n";
                    return failure;
                }
            }
        }
        results.push_back({std::string(method_name(method)), max_index, elapsed.count(), bits});
    }

    if (req.format == "csv") {
        out << "method,n_max,seconds,peak_bits\n";
        for (const auto& r : results) out << r.method << "," << r.n_max << "," << r.seconds << "," << r.peak_bits << "\n";
    } else {
        out << "method     n_max     seconds   peak_bits\n";
        for (const auto& r : results) {
            char line[128];
            std::snprintf(line, sizeof line, "%-9s %6zu %11.4f %11zu\n", r.method.c_str(), r.n_max, r.seconds,
                          r.peak_bits);
            out << line;
        }
        out << "all " << results.size() << " method(s) agree on E_0..E_" << max_index << "\n";
    }
    if (results_out) *results_out = std::move(results);
    return ok;
}

}  // namespace cdiff::cli
