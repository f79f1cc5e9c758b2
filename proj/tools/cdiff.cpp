// cdiff: exact tables of Euler and central factorial numbers, identity
// verification, and Euler-number benchmarks.

#include "cdiff/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
    using namespace cdiff::cli;

    CLI::App app{"Exact Euler, generalized Euler and central factorial numbers"};
    app.require_subcommand(1);

    TableRequest table_req;
    auto* table = app.add_subcommand("table", "Emit an exact table");
    table->add_option("family", table_req.family, "euler | gen-euler | cfn-first | cfn-second | gcoeff | stern | stirling2")
        ->required();
    auto* max_opt = table->add_option("--max", table_req.max, "Largest index (sequences) or row (triangles)");
    table->add_option("--rows", table_req.max, "Alias of --max")->excludes(max_opt);
    table->add_option("--method", table_req.method, "euler: kb|shov|shov2|herschel|oracle; gen-euler: shov3|shov4|reln|oracle");
    table->add_option("--order", table_req.order, "Order r of the generalized Euler numbers");
    table->add_option("--format", table_req.format, "csv | json");
    table->add_option("--out", table_req.out_path, "Output path (default: standard output)");

    VerifyRequest verify_req;
    std::string suites = "all";
    auto* verify = app.add_subcommand("verify", "Verify identities exactly over finite ranges");
    verify->add_option("--suite", suites, "Comma-separated suite ids, or 'all'");
    verify->add_option("--max", verify_req.max, "Size parameter passed to every suite");
    verify->add_option("--format", verify_req.format, "text | json");
    verify->add_option("--out", verify_req.out_path, "Output path (default: standard output)");
    verify->add_flag_callback("--list", [] {
        for (const auto& s : cdiff::identity_suites()) std::cout << s.id << "\t" << s.description << "\n";
        std::exit(0);
    }, "List suite ids and exit");

    BenchRequest bench_req;
    std::string methods = "kb";
    auto* bench = app.add_subcommand("bench", "Time Euler-number routes up to an index");
    bench->add_option("--max", bench_req.max, "Largest index");
    bench->add_option("--methods", methods, "Comma-separated: kb,shov,shov2,herschel,oracle");
    bench->add_option("--format", bench_req.format, "text | csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::string cur;
        for (char c : s) {
            if (c == ',') {
                if (!cur.empty()) out.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) out.push_back(cur);
        return out;
    };

    try {
        if (table->parsed()) return cmd_table(table_req, std::cout, std::cerr);
        if (verify->parsed()) {
            verify_req.suites = split(suites);
            return cmd_verify(verify_req, std::cout, std::cerr);
        }
        if (bench->parsed()) {
            bench_req.methods = split(methods);
            return cmd_bench(bench_req, std::cout, std::cerr);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return failure;
    }
    return usage;
}
