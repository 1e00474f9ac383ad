#pragma once

#include "latchroma/graph.hpp"

namespace latchroma {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

struct ColoringResult {
    int lower = 0;                  // best proven lower bound (clique)
    int upper = 0;                  // colors used by the best coloring found
    std::vector<int> coloring;      // size n, colors 0..upper-1
    bool exact = false;             // lower == upper proven by complete search
    long long nodes = 0;            // branch-and-bound nodes spent

    int chromatic() const { return upper; }
    const char* status() const { return exact ? "exact" : "bounded"; }
};

// DSATUR branch and bound with greedy-clique seeding. Deterministic: vertex
// ties break by label order, the improvement phase uses a fixed seed.
ColoringResult chromatic_number_exact(const FiniteGraph& g,
                                      long long node_budget = kDefaultNodeBudget);

struct CliqueResult {
    std::vector<int> vertices;
    bool exact = false;
    long long nodes = 0;
};

CliqueResult max_clique(const FiniteGraph& g, long long node_budget = kDefaultNodeBudget);

struct CycleResult {
    int length = 0;            // 0 when the graph is acyclic
    std::vector<int> vertices; // one longest cycle, in order
    bool exact = false;
    long long nodes = 0;
};

CycleResult longest_cycle(const FiniteGraph& g, long long node_budget = kDefaultNodeBudget);

// Independent propriety check used on every coloring the solvers emit.
bool is_proper_coloring(const FiniteGraph& g, const std::vector<int>& colors);

} // namespace latchroma
