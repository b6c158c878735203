#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <queue>
#include <string_view>
#include <vector>

#include "dioclimb/equation.hpp"

namespace dioclimb {

// A generated candidate. h caches heuristic(eq, x); id is the creation
// sequence number within one search (1 = initial node) and breaks ties
// deterministically everywhere a comparison is needed.
struct Node {
    Assignment x;
    BigInt h;
    std::uint64_t id = 0;
    std::optional<std::uint64_t> parent;
};

// Generated-but-unexpanded nodes, popped best-first: minimum h, ties by
// smallest id (earliest generated). The climb keeps it duplicate-free by
// checking its visited set before pushing.
class Frontier {
public:
    void push(Node node);
    // Removes and returns the min-(h, id) node; nullopt when exhausted.
    std::optional<Node> pop();
    bool empty() const { return heap_.empty(); }
    std::size_t size() const { return heap_.size(); }

private:
    struct PopsLater {
        bool operator()(const Node& a, const Node& b) const {
            if (a.h != b.h) return a.h > b.h;
            return a.id > b.id;
        }
    };
    std::priority_queue<Node, std::vector<Node>, PopsLater> heap_;
};

enum class TraceAction { Expand, Prune, Backtrack, Goal, Exhausted, Budget };

std::string_view to_string(TraceAction action);

struct TraceEvent {
    std::uint64_t step = 0;  // consecutive from 1
    TraceAction action = TraceAction::Expand;
    Assignment x;
    BigInt h;
    std::uint64_t nodes_generated = 0;  // successors created so far
};

// Ordered log of one search: every expansion, prune and backtrack, ending
// in exactly one terminal event (goal, exhausted or budget).
struct SearchTrace {
    std::vector<TraceEvent> events;
};

// CSV with header "step,action,x,h,nodes_generated"; x is one quoted
// field of space-separated coordinates.
void write_trace_csv(const SearchTrace& trace, std::ostream& os);

enum class SearchStatus { Solved, Unsolvable, BudgetExceeded };

std::string_view to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::Unsolvable;
    std::optional<Assignment> solution;
    std::uint64_t expansions = 0;
    std::uint64_t nodes_generated = 0;
    std::uint64_t backtracks = 0;
    SearchTrace trace;  // populated only when SearchConfig::trace_enabled
};

struct SearchConfig {
    std::uint64_t max_expansions = 1'000'000;
    bool trace_enabled = false;
};

// Successor discard rule. NegativeHeuristic is the algorithm proper:
// successors that overshoot the target (h < 0) are pruned. BoundsOnly is
// an audit mode that keeps overshooting successors expandable and relies
// on the per-variable upper bounds alone for termination; it must reach
// the same Solved/Unsolvable verdict on any instance (no solution has a
// coordinate above its bound), which is how the prune is shown sound.
enum class PruningPolicy { NegativeHeuristic, BoundsOnly };

// The root node (1, 1, ..., 1) with id 1 and its exact heuristic value.
// Requires every coefficient >= 1.
Node initial_node(const Equation& eq);

// The n successors of a node, the i-th identical except coordinate i is
// incremented by 1, generated in coordinate order with consecutive ids
// first_id, first_id + 1, ... (coordinate order is what makes equal-h
// tie-breaking deterministic).
std::vector<Node> successors(const Equation& eq, const Node& node,
                             std::uint64_t first_id);

// Steepest-ascent climb from the all-ones node. Repeatedly expands the
// current node; moves to the best surviving successor when it is strictly
// better, otherwise falls back to the best frontier node; prunes
// overshooting successors; discards successors whose vector was already
// seen; stops at a zero-heuristic node (Solved), an empty frontier
// (Unsolvable — the pruned lattice is finite) or the expansion budget.
SearchOutcome climb(const Equation& eq, const SearchConfig& config = {},
                    PruningPolicy policy = PruningPolicy::NegativeHeuristic);

}  // namespace dioclimb
