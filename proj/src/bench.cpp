#include "dioclimb/bench.hpp"

#include <chrono>
#include <fstream>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <utility>

#include "dioclimb/errors.hpp"
#include "dioclimb/oracle.hpp"

namespace dioclimb {

namespace {

// All built-in instances are single-power sums a_i = 1, so a small helper
// keeps the table below readable.
BenchCase make_case(std::string label, std::size_t n, std::uint32_t power,
                    long long target, std::initializer_list<long long> expected,
                    std::optional<std::uint64_t> reference_iterations) {
    Equation eq{std::vector<BigInt>(n, BigInt(1)),
                std::vector<std::uint32_t>(n, power), BigInt(target)};
    Assignment sol;
    sol.reserve(expected.size());
    for (long long v : expected) sol.emplace_back(v);
    if (!is_solution(eq, sol))
        throw Error("benchmark case " + label +
                    ": expected solution does not satisfy the equation");
    return BenchCase{std::move(label), std::move(eq), std::move(sol),
                     reference_iterations};
}

}  // namespace

BenchSuites builtin_suites() {
    BenchSuites s;
    s.table1 = {
        make_case("table1_1", 2, 2, 625, {24, 7}, 29),
        make_case("table1_2", 2, 3, 1008, {10, 2}, 10),
        make_case("table1_3", 2, 4, 1921, {6, 5}, 9),
        make_case("table1_4", 2, 5, 19932, {7, 5}, 10),
        make_case("table1_5", 2, 6, 47385, {6, 3}, 7),
        make_case("table1_6", 2, 7, 4799353, {9, 4}, 11),
        make_case("table1_7", 2, 8, 16777472, {8, 2}, 8),
        make_case("table1_8", 2, 9, 1000019683, {10, 3}, 11),
        make_case("table1_9", 2, 10, 1356217073, {8, 7}, 13),
    };
    s.table2 = {
        make_case("table2_1", 2, 2, 149, {10, 7}, 34),
        make_case("table2_2", 3, 2, 230, {15, 2, 1}, 15),
        make_case("table2_3", 4, 2, 295, {17, 2, 1, 1}, 17),
        make_case("table2_4", 5, 2, 325, {17, 1, 1, 3, 5}, 22),
        make_case("table2_5", 6, 2, 420, {20, 1, 1, 1, 1, 4}, 22),
        make_case("table2_6", 7, 2, 450, {21, 2, 1, 1, 1, 1, 1}, 21),
        make_case("table2_7", 8, 2, 590, {23, 2, 1, 1, 1, 1, 2, 7}, 86),
        make_case("table2_8", 9, 2, 720, {26, 2, 1, 1, 1, 2, 2, 2, 5}, 42),
        make_case("table2_9", 10, 2, 956, {30, 2, 1, 1, 1, 1, 2, 2, 2, 6}, 48),
    };
    s.example100 = {
        make_case("example100", 2, 2, 100, {8, 6}, std::nullopt),
    };
    return s;
}

std::vector<BenchCase> suite_by_name(const BenchSuites& suites,
                                     std::string_view name) {
    if (name == "table1") return suites.table1;
    if (name == "table2") return suites.table2;
    if (name == "example100") return suites.example100;
    if (name == "all") {
        std::vector<BenchCase> all = suites.table1;
        all.insert(all.end(), suites.table2.begin(), suites.table2.end());
        all.insert(all.end(), suites.example100.begin(),
                   suites.example100.end());
        return all;
    }
    throw Error("unknown benchmark suite: " + std::string(name) +
                " (expected table1, table2, example100 or all)");
}

BenchReport run_suite(const std::vector<BenchCase>& cases,
                      const SearchConfig& config) {
    if (cases.empty()) throw Error("empty benchmark suite");
    BenchReport report;
    report.rows.reserve(cases.size());

    for (const BenchCase& c : cases) {
        BenchRow row;
        row.label = c.label;
        row.reference_iterations = c.reference_iterations;
        row.oracle_verdict = "unchecked";

        const auto start = std::chrono::steady_clock::now();
        try {
            SearchOutcome out = climb(c.equation, config);
            row.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            row.status = std::string(to_string(out.status));
            row.expansions = out.expansions;
            row.nodes_generated = out.nodes_generated;
            row.backtracks = out.backtracks;
            if (out.solution) {
                row.solution = *out.solution;
                row.solution_valid = is_solution(c.equation, *out.solution);
            }
            row.trace = std::move(out.trace);

            try {
                CertificationReport cert = certify(c.equation, out);
                row.oracle_verdict = std::string(to_string(cert.verdict));
            } catch (const BoundsTooLarge&) {
                // Instance too large to enumerate; fall back to the direct
                // check of the returned solution.
                if (row.solution)
                    row.oracle_verdict =
                        row.solution_valid ? "valid" : "invalid";
            }
        } catch (const std::exception&) {
            row.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
            row.status = "error";
        }
        report.rows.push_back(std::move(row));
    }

    for (const BenchRow& row : report.rows) {
        if (row.status == "solved") {
            ++report.solved;
            if (row.solution_valid) ++report.verified;
        } else if (row.status == "unsolvable") {
            ++report.unsolved;
        } else if (row.status == "budget") {
            ++report.budget_exceeded;
        } else {
            ++report.errors;
        }
    }
    return report;
}

namespace {

std::string solution_text(const BenchRow& row) {
    return row.solution ? render_assignment(*row.solution) : std::string("-");
}

std::string reference_text(const BenchRow& row) {
    return row.reference_iterations ? std::to_string(*row.reference_iterations)
                                    : std::string("-");
}

void write_padded_row(std::ostream& os, const std::vector<std::string>& cells,
                      const std::vector<std::size_t>& widths) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) os << "  ";
        os << cells[i];
        if (i + 1 < cells.size())
            os << std::string(widths[i] - cells[i].size(), ' ');
    }
    os << "\n";
}

}  // namespace

void write_report_csv(const BenchReport& report, std::ostream& os) {
    os << "case,status,solution,expansions,nodes_generated,backtracks,"
          "oracle,reference_iterations\n";
    for (const BenchRow& r : report.rows) {
        os << r.label << "," << r.status << ",\"";
        if (r.solution) os << render_assignment(*r.solution);
        os << "\"," << r.expansions << "," << r.nodes_generated << ","
           << r.backtracks << "," << r.oracle_verdict << ",";
        if (r.reference_iterations) os << *r.reference_iterations;
        os << "\n";
    }
}

void write_report_text(const BenchReport& report, std::ostream& os,
                       bool include_timing) {
    std::vector<std::vector<std::string>> table;
    std::vector<std::string> header = {"case",       "status",    "solution",
                                       "expansions", "generated", "backtracks",
                                       "oracle",     "ref_iters"};
    if (include_timing) header.push_back("ms");
    table.push_back(std::move(header));

    for (const BenchRow& r : report.rows) {
        std::vector<std::string> cells = {
            r.label,
            r.status,
            solution_text(r),
            std::to_string(r.expansions),
            std::to_string(r.nodes_generated),
            std::to_string(r.backtracks),
            r.oracle_verdict,
            reference_text(r),
        };
        if (include_timing) {
            std::ostringstream ms;
            ms.setf(std::ios::fixed);
            ms.precision(3);
            ms << r.wall_ms;
            cells.push_back(ms.str());
        }
        table.push_back(std::move(cells));
    }

    std::vector<std::size_t> widths(table.front().size(), 0);
    for (const auto& cells : table)
        for (std::size_t i = 0; i < cells.size(); ++i)
            widths[i] = std::max(widths[i], cells[i].size());
    for (const auto& cells : table) write_padded_row(os, cells, widths);

    os << "\nsolved " << report.solved << "/" << report.rows.size()
       << ", verified " << report.verified << ", unsolvable "
       << report.unsolved << ", budget " << report.budget_exceeded
       << ", errors " << report.errors << "\n";
}

void write_case_traces(const BenchReport& report,
                       const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (const BenchRow& row : report.rows) {
        std::ofstream out(dir / (row.label + "_trace.csv"));
        if (!out)
            throw Error("cannot write trace file for case " + row.label);
        write_trace_csv(row.trace, out);
    }
}

}  // namespace dioclimb
