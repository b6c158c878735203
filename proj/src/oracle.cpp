#include "dioclimb/oracle.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <utility>

#include "dioclimb/errors.hpp"

namespace dioclimb {

namespace {

// Depth-first lexicographic scan over the box [1, bound_1] x ... x [1, bound_n].
// `suffix_min[i]` is the least value the terms i..n-1 can contribute (all
// variables at 1), used to cut branches whose remainder is already too small.
// Returns false once `cap` solutions have been collected, unwinding the scan.
bool scan(const Equation& eq, const std::vector<BigInt>& bounds,
          const std::vector<BigInt>& suffix_min, std::size_t i,
          const BigInt& remainder, std::optional<std::uint64_t> cap,
          Assignment& partial, std::vector<Assignment>& out) {
    const std::size_t n = eq.var_count();
    if (i == n) {
        if (remainder == 0) out.push_back(partial);
        return !cap || out.size() < *cap;
    }
    const BigInt& a = eq.coeffs()[i];
    const std::uint32_t p = eq.powers()[i];
    const BigInt tail_min = (i + 1 < n) ? suffix_min[i + 1] : BigInt(0);
    for (BigInt v = 1; v <= bounds[i]; ++v) {
        BigInt term = a * ipow(v, p);
        if (term + tail_min > remainder) break;  // terms grow with v
        partial.push_back(v);
        const bool keep_going = scan(eq, bounds, suffix_min, i + 1,
                                     remainder - term, cap, partial, out);
        partial.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

SolutionSet enumerate_solutions(const Equation& eq,
                                std::optional<std::uint64_t> cap,
                                const BigInt& volume_ceiling) {
    eq.require_positive_coeffs();
    if (cap && *cap < 1) throw Error("solution cap must be at least 1");
    const std::size_t n = eq.var_count();

    std::vector<BigInt> bounds;
    bounds.reserve(n);
    BigInt volume = 1;
    for (std::size_t i = 1; i <= n; ++i) {
        BigInt b = *variable_upper_bound(eq, i);
        if (b == 0) {
            // Some variable has no feasible value, so no solutions exist.
            return SolutionSet{eq, {}, std::move(bounds)};
        }
        volume *= b;
        bounds.push_back(std::move(b));
    }
    if (volume > volume_ceiling) {
        std::ostringstream msg;
        msg << "search box holds " << volume
            << " points, above the ceiling of " << volume_ceiling;
        throw BoundsTooLarge(msg.str());
    }

    // suffix_min[i] = sum of a_j for j >= i: each term's value at x_j = 1.
    std::vector<BigInt> suffix_min(n, BigInt(0));
    for (std::size_t i = n; i-- > 0;) {
        suffix_min[i] = eq.coeffs()[i];
        if (i + 1 < n) suffix_min[i] += suffix_min[i + 1];
    }

    std::vector<Assignment> found;
    Assignment partial;
    partial.reserve(n);
    scan(eq, bounds, suffix_min, 0, eq.target(), cap, partial, found);
    return SolutionSet{eq, std::move(found), std::move(bounds)};
}

void write_solutions_csv(const SolutionSet& set, std::ostream& os) {
    for (const Assignment& x : set.solutions)
        os << render_assignment(x) << "\n";
}

std::string_view to_string(CertVerdict verdict) {
    switch (verdict) {
        case CertVerdict::Agree: return "agree";
        case CertVerdict::ClimberMissedSolution: return "missed_solution";
        case CertVerdict::ClimberFalsePositive: return "false_positive";
        case CertVerdict::Inconclusive: return "inconclusive";
    }
    return "?";
}

CertificationReport certify(const Equation& eq, const SearchOutcome& outcome,
                            const BigInt& volume_ceiling) {
    if (outcome.status == SearchStatus::BudgetExceeded)
        // Budget exhaustion makes no solvability claim, so there is
        // nothing the oracle could confirm or refute.
        return CertificationReport{CertVerdict::Inconclusive, 0,
                                   "search stopped at the expansion budget"};

    SolutionSet truth = enumerate_solutions(eq, std::nullopt, volume_ceiling);
    const std::uint64_t count =
        static_cast<std::uint64_t>(truth.solutions.size());

    if (outcome.status == SearchStatus::Solved) {
        // Membership in the enumerated set, not re-evaluation: the check
        // must not share code paths with the climber's own goal test.
        const bool found =
            outcome.solution &&
            std::find(truth.solutions.begin(), truth.solutions.end(),
                      *outcome.solution) != truth.solutions.end();
        if (!found)
            return CertificationReport{
                CertVerdict::ClimberFalsePositive, count,
                "reported assignment is not in the enumerated solution set"};
        return CertificationReport{CertVerdict::Agree, count, ""};
    }
    if (count > 0)
        return CertificationReport{
            CertVerdict::ClimberMissedSolution, count,
            "climber reported unsolvable but solutions exist"};
    return CertificationReport{CertVerdict::Agree, count, ""};
}

}  // namespace dioclimb
