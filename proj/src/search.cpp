#include "dioclimb/search.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <utility>

#include "dioclimb/errors.hpp"

namespace dioclimb {

void Frontier::push(Node node) { heap_.push(std::move(node)); }

std::optional<Node> Frontier::pop() {
    if (heap_.empty()) return std::nullopt;
    // priority_queue::top is const; the copy is unavoidable but nodes are
    // small next to the heap itself.
    Node best = heap_.top();
    heap_.pop();
    return best;
}

std::string_view to_string(TraceAction action) {
    switch (action) {
        case TraceAction::Expand: return "expand";
        case TraceAction::Prune: return "prune";
        case TraceAction::Backtrack: return "backtrack";
        case TraceAction::Goal: return "goal";
        case TraceAction::Exhausted: return "exhausted";
        case TraceAction::Budget: return "budget";
    }
    return "?";
}

std::string_view to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Solved: return "solved";
        case SearchStatus::Unsolvable: return "unsolvable";
        case SearchStatus::BudgetExceeded: return "budget";
    }
    return "?";
}

void write_trace_csv(const SearchTrace& trace, std::ostream& os) {
    os << "step,action,x,h,nodes_generated\n";
    for (const TraceEvent& e : trace.events)
        os << e.step << "," << to_string(e.action) << ",\""
           << render_assignment(e.x) << "\"," << e.h << ","
           << e.nodes_generated << "\n";
}

Node initial_node(const Equation& eq) {
    eq.require_positive_coeffs();
    Assignment ones(eq.var_count(), BigInt(1));
    BigInt h = heuristic(eq, ones);
    return Node{std::move(ones), std::move(h), 1, std::nullopt};
}

std::vector<Node> successors(const Equation& eq, const Node& node,
                             std::uint64_t first_id) {
    std::vector<Node> out;
    out.reserve(eq.var_count());
    for (std::size_t i = 0; i < eq.var_count(); ++i) {
        Assignment x = node.x;
        x[i] += 1;
        BigInt h = heuristic(eq, x);
        out.push_back(Node{std::move(x), std::move(h), first_id + i, node.id});
    }
    return out;
}

namespace {

// Event log plus the statistics that are kept even when tracing is off.
struct Recorder {
    bool enabled;
    std::vector<TraceEvent> events;
    std::uint64_t step = 0;

    void record(TraceAction action, const Node& node,
                std::uint64_t generated) {
        if (!enabled) return;
        events.push_back(TraceEvent{++step, action, node.x, node.h, generated});
    }
};

}  // namespace

SearchOutcome climb(const Equation& eq, const SearchConfig& config,
                    PruningPolicy policy) {
    eq.require_positive_coeffs();
    if (config.max_expansions < 1) throw NonPositiveBudget();

    const std::size_t n = eq.var_count();

    // BoundsOnly keeps overshooting nodes alive, so termination rests on
    // these caps instead of the h < 0 prune. No solution can have a
    // coordinate above its bound.
    std::vector<BigInt> caps;
    if (policy == PruningPolicy::BoundsOnly) {
        caps.reserve(n);
        for (std::size_t i = 1; i <= n; ++i)
            caps.push_back(*variable_upper_bound(eq, i));
    }

    Recorder rec{config.trace_enabled, {}, 0};
    std::uint64_t generated = 0;    // successor-creation events
    std::uint64_t expansions = 0;
    std::uint64_t backtracks = 0;
    std::uint64_t next_id = 1;

    auto finish = [&](SearchStatus status, std::optional<Assignment> solution) {
        return SearchOutcome{status,     std::move(solution),
                             expansions, generated,
                             backtracks, SearchTrace{std::move(rec.events)}};
    };

    Node current = initial_node(eq);
    next_id = 2;

    // Every vector ever made current or pushed to the frontier. Pruned
    // vectors are deliberately absent: they are never expandable, and each
    // of their parents is expanded at most once.
    std::set<Assignment> seen;
    seen.insert(current.x);
    Frontier frontier;

    for (;;) {
        if (current.h == 0) {
            rec.record(TraceAction::Goal, current, generated);
            return finish(SearchStatus::Solved, current.x);
        }

        const bool expandable =
            policy == PruningPolicy::BoundsOnly || current.h > 0;

        std::vector<Node> survivors;
        if (expandable) {
            if (expansions >= config.max_expansions) {
                rec.record(TraceAction::Budget, current, generated);
                return finish(SearchStatus::BudgetExceeded, std::nullopt);
            }
            ++expansions;

            std::vector<Node> children = successors(eq, current, next_id);
            next_id += n;
            generated += n;
            rec.record(TraceAction::Expand, current, generated);

            for (Node& child : children) {
                if (child.h == 0) {
                    rec.record(TraceAction::Goal, child, generated);
                    return finish(SearchStatus::Solved, std::move(child.x));
                }
                if (policy == PruningPolicy::NegativeHeuristic) {
                    if (child.h < 0) {
                        rec.record(TraceAction::Prune, child, generated);
                        continue;
                    }
                } else {
                    // Which coordinate grew is the child's position in the
                    // generation order.
                    const std::size_t i = static_cast<std::size_t>(
                        child.id - (next_id - n));
                    if (child.x[i] > caps[i]) {
                        rec.record(TraceAction::Prune, child, generated);
                        continue;
                    }
                }
                if (seen.count(child.x)) continue;  // discarded, not logged
                survivors.push_back(std::move(child));
            }
        } else {
            // Root with h < 0: never expanded, only logged. Everything
            // above it overshoots as well.
            rec.record(TraceAction::Prune, current, generated);
        }

        // Steepest ascent: move only to a strictly better successor.
        // Survivors sit in id order, so the first minimum wins ties.
        std::size_t best = survivors.size();
        for (std::size_t k = 0; k < survivors.size(); ++k)
            if (best == survivors.size() || survivors[k].h < survivors[best].h)
                best = k;

        if (best < survivors.size() && survivors[best].h < current.h) {
            for (std::size_t k = 0; k < survivors.size(); ++k) {
                seen.insert(survivors[k].x);
                if (k != best) frontier.push(std::move(survivors[k]));
            }
            current = std::move(survivors[best]);
            continue;
        }

        for (Node& s : survivors) {
            seen.insert(s.x);
            frontier.push(std::move(s));
        }
        std::optional<Node> popped = frontier.pop();
        if (!popped) {
            rec.record(TraceAction::Exhausted, current, generated);
            return finish(SearchStatus::Unsolvable, std::nullopt);
        }
        ++backtracks;
        current = std::move(*popped);
        rec.record(TraceAction::Backtrack, current, generated);
    }
}

}  // namespace dioclimb
