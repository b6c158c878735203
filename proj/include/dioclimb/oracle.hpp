#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dioclimb/equation.hpp"
#include "dioclimb/search.hpp"

namespace dioclimb {

// Default ceiling on the bounding-box lattice volume the enumerator will
// accept (points, not bytes). Keeps an accidental huge instance from
// turning into a multi-hour run.
inline const std::uint64_t kDefaultVolumeCeiling = 1'000'000'000;

// Every solution of an equation inside the per-variable bounds, in
// lexicographic order, duplicate-free.
struct SolutionSet {
    Equation equation;
    std::vector<Assignment> solutions;
    std::vector<BigInt> search_bounds;  // per-variable bounds used
};

// Exhaustive enumeration over x_i in [1, variable_upper_bound(eq, i)],
// depth-first in lexicographic order, cutting a branch as soon as the
// partial sum plus the minimum contribution of the remaining variables
// exceeds the target. The enumerator stays deliberately dumb — no
// number-theoretic shortcuts — so it can serve as ground truth.
//
// cap, when given, stops after that many solutions (the lexicographically
// first ones). Throws NonPositiveCoefficient or BoundsTooLarge.
SolutionSet enumerate_solutions(
    const Equation& eq, std::optional<std::uint64_t> cap = std::nullopt,
    const BigInt& volume_ceiling = BigInt(kDefaultVolumeCeiling));

// One assignment per row, space-separated coordinates.
void write_solutions_csv(const SolutionSet& set, std::ostream& os);

enum class CertVerdict {
    Agree,                  // Solved with a solution the oracle also found,
                            // or Unsolvable with an empty oracle set
    ClimberMissedSolution,  // Unsolvable but the oracle found solutions
    ClimberFalsePositive,   // Solved with a vector that is no solution
    Inconclusive            // BudgetExceeded; nothing to certify
};

std::string_view to_string(CertVerdict verdict);

struct CertificationReport {
    CertVerdict verdict = CertVerdict::Inconclusive;
    std::uint64_t oracle_solution_count = 0;
    std::string detail;
};

// Cross-checks a search outcome against the exhaustive enumeration.
// Propagates BoundsTooLarge when the instance is not oracle-feasible,
// except for BudgetExceeded outcomes, which are Inconclusive without
// consulting the oracle.
CertificationReport certify(
    const Equation& eq, const SearchOutcome& outcome,
    const BigInt& volume_ceiling = BigInt(kDefaultVolumeCeiling));

}  // namespace dioclimb
