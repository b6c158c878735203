#include "dioclimb/search.hpp"

#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "dioclimb/errors.hpp"
#include "support.hpp"

using namespace dioclimb;

namespace {

Equation squares(long long target) {
    return Equation{{BigInt(1), BigInt(1)}, {2, 2}, BigInt(target)};
}

Assignment vec(std::initializer_list<long long> values) {
    Assignment x;
    for (long long v : values) x.emplace_back(v);
    return x;
}

std::vector<Assignment> expanded_vectors(const SearchTrace& trace) {
    std::vector<Assignment> out;
    for (const TraceEvent& e : trace.events)
        if (e.action == TraceAction::Expand) out.push_back(e.x);
    return out;
}

}  // namespace

TEST_CASE("frontier pops minimum h, ties by earliest id") {
    Frontier frontier;
    CHECK(frontier.empty());
    frontier.push(Node{vec({1, 2}), BigInt(5), 9, 1});
    frontier.push(Node{vec({2, 1}), BigInt(5), 4, 1});
    frontier.push(Node{vec({3, 3}), BigInt(3), 100, 2});
    CHECK(frontier.size() == 3);

    auto first = frontier.pop();
    REQUIRE(first.has_value());
    CHECK(first->h == BigInt(3));
    auto second = frontier.pop();
    REQUIRE(second.has_value());
    CHECK(second->id == 4);
    auto third = frontier.pop();
    REQUIRE(third.has_value());
    CHECK(third->id == 9);
    CHECK_FALSE(frontier.pop().has_value());
}

TEST_CASE("initial node is all ones with id 1") {
    Node root = initial_node(squares(100));
    CHECK(root.x == vec({1, 1}));
    CHECK(root.h == BigInt(98));
    CHECK(root.id == 1);
    CHECK_FALSE(root.parent.has_value());

    Equation three{{BigInt(1), BigInt(1), BigInt(1)}, {2, 2, 2}, BigInt(230)};
    CHECK(initial_node(three).h == BigInt(227));

    Equation bad{{BigInt(-1)}, {2}, BigInt(10)};
    CHECK_THROWS_AS(initial_node(bad), NonPositiveCoefficient);
}

TEST_CASE("successors increment one coordinate each, in index order") {
    Equation eq = squares(100);
    Node root = initial_node(eq);

    std::vector<Node> first = successors(eq, root, 2);
    REQUIRE(first.size() == 2);
    CHECK(first[0].x == vec({2, 1}));
    CHECK(first[0].h == BigInt(95));
    CHECK(first[0].id == 2);
    CHECK(first[0].parent == std::optional<std::uint64_t>(1));
    CHECK(first[1].x == vec({1, 2}));
    CHECK(first[1].h == BigInt(95));
    CHECK(first[1].id == 3);

    std::vector<Node> second = successors(eq, first[0], 4);
    CHECK(second[0].x == vec({3, 1}));
    CHECK(second[0].h == BigInt(90));
    CHECK(second[1].x == vec({2, 2}));
    CHECK(second[1].h == BigInt(92));
}

TEST_CASE("goal at the initial node needs no expansion") {
    SearchConfig config;
    config.trace_enabled = true;
    SearchOutcome out = climb(squares(2), config);
    CHECK(out.status == SearchStatus::Solved);
    REQUIRE(out.solution.has_value());
    CHECK(*out.solution == vec({1, 1}));
    CHECK(out.expansions == 0);
    CHECK(out.nodes_generated == 0);
    CHECK(out.backtracks == 0);
    REQUIRE(out.trace.events.size() == 1);
    CHECK(out.trace.events[0].action == TraceAction::Goal);
}

TEST_CASE("unsolvable instance exhausts after pruning") {
    SearchConfig config;
    config.trace_enabled = true;
    SearchOutcome out = climb(squares(3), config);
    CHECK(out.status == SearchStatus::Unsolvable);
    CHECK_FALSE(out.solution.has_value());
    CHECK(out.expansions == 1);
    CHECK(out.nodes_generated == 2);

    std::ostringstream csv;
    write_trace_csv(out.trace, csv);
    CHECK(csv.str() ==
          "step,action,x,h,nodes_generated\n"
          "1,expand,\"1 1\",1,2\n"
          "2,prune,\"2 1\",-2,2\n"
          "3,prune,\"1 2\",-2,2\n"
          "4,exhausted,\"1 1\",1,2\n");
}

TEST_CASE("worked hundred instance climbs to 8 6") {
    SearchConfig config;
    config.trace_enabled = true;
    SearchOutcome out = climb(squares(100), config);
    CHECK(out.status == SearchStatus::Solved);
    REQUIRE(out.solution.has_value());
    CHECK(*out.solution == vec({8, 6}));
    CHECK(out.expansions == 16);
    CHECK(out.nodes_generated == 32);
    CHECK(out.backtracks == 1);

    std::vector<Assignment> expanded = expanded_vectors(out.trace);
    REQUIRE(expanded.size() == 16);
    CHECK(expanded[0] == vec({1, 1}));
    CHECK(expanded[1] == vec({2, 1}));
    CHECK(expanded[2] == vec({3, 1}));
    // The ride up the first coordinate stops at 9 and backtracks to (8,2).
    CHECK(expanded[8] == vec({9, 1}));
    CHECK(expanded[12] == vec({8, 2}));
    CHECK(out.trace.events.back().action == TraceAction::Goal);
    CHECK(out.trace.events.back().x == vec({8, 6}));
}

TEST_CASE("nodes generated equals variable count times expansions") {
    for (long long target : {50, 100, 149, 230}) {
        Equation eq{{BigInt(1), BigInt(1), BigInt(1)}, {2, 2, 2},
                    BigInt(target)};
        SearchOutcome out = climb(eq);
        CHECK(out.nodes_generated == 3 * out.expansions);
    }
}

TEST_CASE("trace steps are consecutive with one terminal event") {
    SearchConfig config;
    config.trace_enabled = true;
    for (long long target : {2, 3, 100, 149, 500}) {
        SearchOutcome out = climb(squares(target), config);
        std::uint64_t expected_step = 1;
        std::uint64_t terminals = 0;
        for (const TraceEvent& e : out.trace.events) {
            CHECK(e.step == expected_step++);
            if (e.action == TraceAction::Goal ||
                e.action == TraceAction::Exhausted ||
                e.action == TraceAction::Budget)
                ++terminals;
        }
        CHECK(terminals == 1);
        CHECK(out.trace.events.back().step == out.trace.events.size());
    }
}

TEST_CASE("budget stops the search with status budget") {
    SearchConfig config;
    config.max_expansions = 3;
    config.trace_enabled = true;
    SearchOutcome out = climb(squares(100), config);
    CHECK(out.status == SearchStatus::BudgetExceeded);
    CHECK_FALSE(out.solution.has_value());
    CHECK(out.expansions == 3);
    CHECK(out.trace.events.back().action == TraceAction::Budget);

    config.max_expansions = 0;
    CHECK_THROWS_AS(climb(squares(100), config), NonPositiveBudget);
}

TEST_CASE("negative coefficients are rejected by the climber") {
    Equation eq{{BigInt(1), BigInt(-1)}, {2, 2}, BigInt(10)};
    CHECK_THROWS_AS(climb(eq), NonPositiveCoefficient);
}

TEST_CASE("heuristic descends between consecutive expansions") {
    SearchConfig config;
    config.trace_enabled = true;
    for (long long target : {100, 149, 625, 1008}) {
        SearchOutcome out = climb(squares(target), config);
        CHECK_FALSE(testsupport::descent_violation(out.trace).has_value());
    }
}

TEST_CASE("bounds-only policy reaches the same verdicts") {
    SearchConfig config;
    for (long long target : {2, 3, 100, 149, 227}) {
        SearchOutcome pruned = climb(squares(target), config,
                                     PruningPolicy::NegativeHeuristic);
        SearchOutcome bounded =
            climb(squares(target), config, PruningPolicy::BoundsOnly);
        CHECK(pruned.status == bounded.status);
        if (bounded.solution)
            CHECK(is_solution(squares(target), *bounded.solution));
    }

    // Infeasible at the root: h(1,1) < 0, so the default policy prunes
    // immediately while the bounds policy walks the (empty) feasible box.
    Equation tight{{BigInt(2), BigInt(3)}, {1, 1}, BigInt(1)};
    CHECK(climb(tight, config).status == SearchStatus::Unsolvable);
    CHECK(climb(tight, config, PruningPolicy::BoundsOnly).status ==
          SearchStatus::Unsolvable);
}

TEST_CASE("action and status names") {
    CHECK(to_string(TraceAction::Expand) == "expand");
    CHECK(to_string(TraceAction::Prune) == "prune");
    CHECK(to_string(TraceAction::Backtrack) == "backtrack");
    CHECK(to_string(TraceAction::Goal) == "goal");
    CHECK(to_string(TraceAction::Exhausted) == "exhausted");
    CHECK(to_string(TraceAction::Budget) == "budget");
    CHECK(to_string(SearchStatus::Solved) == "solved");
    CHECK(to_string(SearchStatus::Unsolvable) == "unsolvable");
    CHECK(to_string(SearchStatus::BudgetExceeded) == "budget");
}
