#pragma once

#include "bundlelabel/graph.hpp"
#include "bundlelabel/labeling.hpp"

#include <functional>
#include <optional>

namespace bundlelabel {

inline constexpr long long kDefaultNodeBudget = 100'000'000;
inline constexpr long long kProgressInterval = 1'000'000;

struct SearchOptions {
    long long node_budget = kDefaultNodeBudget;
    // Cap the first branching vertex at labels <= ceil(lam/2).  Sound:
    // x -> lam - x maps valid labelings to valid labelings.  Off by
    // default.
    bool reflect_symmetry_break = false;
    // Called every kProgressInterval nodes with the running node count.
    std::function<void(long long)> on_progress;
};

enum class Feasibility { Labelable, Infeasible, BudgetExceeded };

struct DecisionResult {
    Feasibility status = Feasibility::Infeasible;
    std::optional<Labeling> labeling;  // present iff status == Labelable
    long long nodes_explored = 0;
};

// Decides whether g admits an L(d,1)-labeling with labels in [0, lam].
// Backtracking search: branch on the unassigned vertex with the most
// distinct forbidden labels (ties: higher degree, then lower index),
// labels tried ascending, with forbidden-label counters maintained
// incrementally for distance-1 and distance-2 constraints.
DecisionResult is_labelable(const Graph& g, int d, int lam,
                            const SearchOptions& opts = {});

struct SolveResult {
    int lambda = -1;        // exact lambda when !timed_out
    Labeling witness;       // verifies and has span == lambda
    long long nodes_explored = 0;
    bool timed_out = false;
    // Bracket known when timed_out: lambda >= lower_bound, and
    // upper_bound (== lambda) only when solved.
    int lower_bound = 0;
    std::optional<int> upper_bound;
};

// Exact minimum span: runs is_labelable for increasing lam starting
// from the best sound lower bound (degree_lower_bound when it applies,
// d when the graph has an edge).  Deterministic; the witness is
// re-verified on every solve.
SolveResult lambda_exact(const Graph& g, int d, const SearchOptions& opts = {});

}  // namespace bundlelabel
