// Command-line front end: single solves, exhaustive enumeration, and the
// built-in benchmark suites. Machine-readable results go to stdout, all
// diagnostics to stderr. Exit codes: 0 solved / oracle found solutions /
// suite passed, 1 unsolvable / mismatch / suite failure, 2 invalid input,
// 3 expansion budget exhausted.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dioclimb/bench.hpp"
#include "dioclimb/equation.hpp"
#include "dioclimb/errors.hpp"
#include "dioclimb/oracle.hpp"
#include "dioclimb/search.hpp"

namespace {

using namespace dioclimb;

Equation load_equation(const std::string& text, const std::string& file) {
    if (text.empty() == file.empty())
        throw Error("provide exactly one equation source: inline text or --file");
    if (!text.empty()) return parse_equation(text);
    std::ifstream in(file);
    if (!in) throw Error("cannot read equation file: " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_equation(buf.str());
}

int run_solve(const std::string& text, const std::string& file,
              std::uint64_t max_expansions, const std::string& trace_path,
              bool check) {
    Equation eq = load_equation(text, file);
    std::cerr << "equation: " << render_equation(eq) << "\n";

    SearchConfig config;
    config.max_expansions = max_expansions;
    config.trace_enabled = !trace_path.empty();
    SearchOutcome outcome = climb(eq, config);

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw Error("cannot write trace file: " + trace_path);
        write_trace_csv(outcome.trace, out);
    }
    std::cerr << "expansions=" << outcome.expansions
              << " nodes_generated=" << outcome.nodes_generated
              << " backtracks=" << outcome.backtracks << "\n";

    int code = 0;
    switch (outcome.status) {
        case SearchStatus::Solved:
            std::cout << "SOLVED x=" << render_assignment(*outcome.solution)
                      << "\n";
            code = 0;
            break;
        case SearchStatus::Unsolvable:
            std::cout << "UNSOLVABLE\n";
            code = 1;
            break;
        case SearchStatus::BudgetExceeded:
            std::cout << "BUDGET\n";
            code = 3;
            break;
    }

    if (check) {
        CertificationReport cert = certify(eq, outcome);
        std::cerr << "oracle: " << to_string(cert.verdict);
        if (!cert.detail.empty()) std::cerr << " (" << cert.detail << ")";
        std::cerr << "\n";
        if (cert.verdict == CertVerdict::ClimberMissedSolution ||
            cert.verdict == CertVerdict::ClimberFalsePositive)
            code = 1;
    }
    return code;
}

int run_oracle(const std::string& text, const std::string& file) {
    Equation eq = load_equation(text, file);
    std::cerr << "equation: " << render_equation(eq) << "\n";

    SolutionSet set = enumerate_solutions(eq);
    std::cerr << "bounds: " << render_assignment(set.search_bounds)
              << "\nsolutions: " << set.solutions.size() << "\n";
    write_solutions_csv(set, std::cout);
    return set.solutions.empty() ? 1 : 0;
}

int run_bench(const std::string& suite_name, std::uint64_t max_expansions,
              const std::string& out_dir) {
    std::vector<BenchCase> cases =
        suite_by_name(builtin_suites(), suite_name);

    SearchConfig config;
    config.max_expansions = max_expansions;
    config.trace_enabled = true;
    BenchReport report = run_suite(cases, config);

    write_report_text(report, std::cout, /*include_timing=*/true);

    if (!out_dir.empty()) {
        const std::filesystem::path dir(out_dir);
        std::filesystem::create_directories(dir);
        std::ofstream csv(dir / "report.csv");
        if (!csv) throw Error("cannot write report.csv under " + out_dir);
        write_report_csv(report, csv);
        // Timing is omitted so the file is identical across runs.
        std::ofstream txt(dir / "report.txt");
        if (!txt) throw Error("cannot write report.txt under " + out_dir);
        write_report_text(report, txt, /*include_timing=*/false);
        write_case_traces(report, dir / "traces");
        std::cerr << "report written to " << dir.string() << "\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Finds positive integer solutions of power Diophantine equations\n"
        "(a1*x1^p1 + ... + an*xn^pn = N) by steepest-ascent hill climbing\n"
        "with backtracking, plus an exhaustive enumeration oracle."};
    app.require_subcommand(1);

    std::string text, file, trace_path, out_dir, suite_name;
    std::uint64_t max_expansions = 1'000'000;
    bool check = false;

    CLI::App* solve =
        app.add_subcommand("solve", "climb to a solution of one equation");
    solve->add_option("equation", text,
                      "equation text, e.g. \"x1^2 + x2^2 = 100\"");
    solve->add_option("--file", file, "read the equation from this file");
    solve->add_option("--max-expansions", max_expansions,
                      "stop after this many node expansions")
        ->capture_default_str();
    solve->add_option("--trace", trace_path, "write the search trace CSV here");
    solve->add_flag("--check", check,
                    "cross-check the verdict against exhaustive enumeration");

    CLI::App* oracle = app.add_subcommand(
        "oracle", "enumerate every solution inside the feasible box");
    oracle->add_option("equation", text,
                       "equation text, e.g. \"x1^2 + x2^2 = 100\"");
    oracle->add_option("--file", file, "read the equation from this file");

    CLI::App* bench = app.add_subcommand(
        "bench", "run a built-in benchmark suite and print the report");
    bench
        ->add_option("suite", suite_name,
                     "one of: table1, table2, example100, all")
        ->required();
    bench
        ->add_option("--max-expansions", max_expansions,
                     "per-case expansion budget")
        ->capture_default_str();
    bench->add_option(
        "--out", out_dir,
        "directory for report.csv, report.txt and per-case traces");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (solve->parsed())
            return run_solve(text, file, max_expansions, trace_path, check);
        if (oracle->parsed()) return run_oracle(text, file);
        return run_bench(suite_name, max_expansions, out_dir);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
