#pragma once

// Shared helpers for the test binaries: running the CLI with captured
// streams, auditing traces, and drawing random small instances.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "dioclimb/equation.hpp"
#include "dioclimb/errors.hpp"
#include "dioclimb/search.hpp"

namespace testsupport {

using namespace dioclimb;
namespace fs = std::filesystem;

inline std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// A scratch directory unique to this process, removed on demand by tests.
inline fs::path scratch_dir() {
    fs::path dir = fs::temp_directory_path() /
                   ("dioclimb_test_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    return dir;
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Runs the built CLI through the shell, capturing both streams.
inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path dir = scratch_dir();
    const std::string tag = std::to_string(++counter);
    const fs::path out_file = dir / ("cli_out_" + tag);
    const fs::path err_file = dir / ("cli_err_" + tag);

    const std::string cmd = std::string(DIOCLIMB_CLI_PATH) + " " + args +
                            " > " + out_file.string() + " 2> " +
                            err_file.string();
    const int raw = std::system(cmd.c_str());

    CliResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out_file);
    result.err = slurp(err_file);
    fs::remove(out_file);
    fs::remove(err_file);
    return result;
}

// Checks that h strictly decreases across consecutive expand events that
// are not separated by a backtrack. Returns an explanation on failure.
inline std::optional<std::string> descent_violation(const SearchTrace& trace) {
    std::optional<BigInt> last_h;
    for (const TraceEvent& e : trace.events) {
        if (e.action == TraceAction::Backtrack) {
            last_h.reset();
        } else if (e.action == TraceAction::Expand) {
            if (last_h && !(e.h < *last_h)) {
                std::ostringstream why;
                why << "step " << e.step << ": expand h=" << e.h
                    << " after expand h=" << *last_h;
                return why.str();
            }
            last_h = e.h;
        }
    }
    return std::nullopt;
}

// Draws a random instance with n <= 3, powers <= 3, coefficients <= 5 and
// target <= 500, redrawing until the feasible box holds at most
// `volume_cap` points so that exhaustive enumeration stays cheap.
inline Equation random_small_instance(std::mt19937& rng,
                                      std::uint64_t volume_cap = 50'000) {
    std::uniform_int_distribution<int> n_dist(1, 3);
    std::uniform_int_distribution<int> coeff_dist(1, 5);
    std::uniform_int_distribution<int> power_dist(1, 3);
    std::uniform_int_distribution<int> target_dist(1, 500);

    for (int attempt = 0; attempt < 1000; ++attempt) {
        const int n = n_dist(rng);
        std::vector<BigInt> coeffs;
        std::vector<std::uint32_t> powers;
        for (int i = 0; i < n; ++i) {
            coeffs.emplace_back(coeff_dist(rng));
            powers.push_back(static_cast<std::uint32_t>(power_dist(rng)));
        }
        Equation eq{std::move(coeffs), std::move(powers),
                    BigInt(target_dist(rng))};

        BigInt volume = 1;
        for (std::size_t i = 1; i <= eq.var_count(); ++i) {
            volume *= *variable_upper_bound(eq, i);
            if (volume == 0) break;
        }
        if (volume <= volume_cap) return eq;
    }
    throw Error("no instance within the volume cap after 1000 draws");
}

}  // namespace testsupport
