#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioclimb/equation.hpp"
#include "dioclimb/search.hpp"

namespace dioclimb {

struct BenchCase {
    std::string label;
    Equation equation;
    // Known solution for this instance, used as a transcription check
    // (it must satisfy the equation exactly) — the climber is never
    // required to find this particular tuple.
    std::optional<Assignment> expected_solution;
    // Iteration count previously reported for this instance; informational
    // only, since it depends on tie-breaking choices.
    std::optional<std::uint64_t> reference_iterations;
};

struct BenchSuites {
    std::vector<BenchCase> table1;     // two-variable equations, degrees 2..10
    std::vector<BenchCase> table2;     // sums of squares, 2..10 variables
    std::vector<BenchCase> example100; // x1^2 + x2^2 = 100
};

// The built-in benchmark instances. Every expected solution is validated
// against its equation on construction.
BenchSuites builtin_suites();

// Flattens a suite selection: "table1", "table2", "example100" or "all".
// Throws Error on an unknown name.
std::vector<BenchCase> suite_by_name(const BenchSuites& suites,
                                     std::string_view name);

struct BenchRow {
    std::string label;
    std::string status;  // solved | unsolvable | budget | error
    std::optional<Assignment> solution;
    bool solution_valid = false;  // re-checked by direct evaluation
    std::uint64_t expansions = 0;
    std::uint64_t nodes_generated = 0;
    std::uint64_t backtracks = 0;
    // agree | missed_solution | false_positive | inconclusive |
    // valid | invalid | unchecked  ("valid"/"invalid": the oracle could
    // not enumerate this instance, only the returned solution was checked)
    std::string oracle_verdict;
    std::optional<std::uint64_t> reference_iterations;
    double wall_ms = 0.0;  // never serialized to files
    SearchTrace trace;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::uint64_t solved = 0;
    std::uint64_t unsolved = 0;
    std::uint64_t budget_exceeded = 0;
    std::uint64_t errors = 0;
    std::uint64_t verified = 0;  // rows whose solution passed re-evaluation

    bool all_passed() const {
        return errors == 0 && unsolved == 0 && budget_exceeded == 0 &&
               verified == solved && solved == rows.size();
    }
};

// Runs the climb on every case, re-checks any returned solution by exact
// evaluation, and cross-checks with the oracle where the instance is
// small enough to enumerate. A failing case is recorded in its row; the
// suite never aborts. Deterministic for a fixed config.
BenchReport run_suite(const std::vector<BenchCase>& cases,
                      const SearchConfig& config);

// One row per case:
// case,status,solution,expansions,nodes_generated,backtracks,oracle,reference_iterations
void write_report_csv(const BenchReport& report, std::ostream& os);

// Human-readable table. Timing is included only when requested so that
// report files stay byte-identical across runs.
void write_report_text(const BenchReport& report, std::ostream& os,
                       bool include_timing);

// Writes <dir>/<label>_trace.csv for every row (requires the suite to
// have been run with tracing enabled).
void write_case_traces(const BenchReport& report,
                       const std::filesystem::path& dir);

}  // namespace dioclimb
