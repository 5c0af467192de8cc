#include "bundlelabel/solver.hpp"

#include <algorithm>
#include <stdexcept>

namespace bundlelabel {

namespace {

std::vector<std::vector<int>> dist2_lists(const Graph& g) {
    std::vector<std::vector<int>> lists(
        static_cast<size_t>(g.vertex_count()));
    for (const auto& [u, v] : distance_two_pairs(g)) {
        lists[u].push_back(v);
        lists[v].push_back(u);
    }
    return lists;
}

// Backtracking with forbidden-label counters: assigning label c to v
// forbids [c-d+1, c+d-1] on neighbors and c on distance-2 vertices.
// Counters are incremented on assignment and decremented on undo; the
// number of distinct forbidden labels per vertex is the saturation used
// for branching and for wipeout detection.
class Searcher {
public:
    Searcher(const Graph& g, int d, int lam, const SearchOptions& opts)
        : g_(g),
          d_(d),
          lam_(lam),
          opts_(opts),
          dist2_(dist2_lists(g)),
          labels_(static_cast<size_t>(g.vertex_count()), -1),
          forbid_(static_cast<size_t>(g.vertex_count()),
                  std::vector<int>(static_cast<size_t>(lam) + 1, 0)),
          num_forbidden_(static_cast<size_t>(g.vertex_count()), 0) {}

    DecisionResult run() {
        DecisionResult result;
        bool found = g_.vertex_count() == 0 || dfs();
        result.nodes_explored = nodes_;
        if (found) {
            result.status = Feasibility::Labelable;
            result.labeling = Labeling{labels_, d_};
        } else {
            result.status = budget_hit_ ? Feasibility::BudgetExceeded
                                        : Feasibility::Infeasible;
        }
        return result;
    }

private:
    bool dfs() {
        const int v = pick_vertex();
        const int cap = (assigned_ == 0 && opts_.reflect_symmetry_break)
                            ? (lam_ + 1) / 2
                            : lam_;
        for (int c = 0; c <= cap; ++c) {
            if (forbid_[v][c] != 0) continue;
            if (++nodes_ > opts_.node_budget) {
                --nodes_;  // this node was never explored
                budget_hit_ = true;
                return false;
            }
            if (opts_.on_progress && nodes_ % kProgressInterval == 0)
                opts_.on_progress(nodes_);

            labels_[v] = c;
            ++assigned_;
            apply(v, c, +1);
            bool done = assigned_ == g_.vertex_count();
            bool ok = done || (wiped_ == 0 && dfs());
            if (ok) return true;
            apply(v, c, -1);
            labels_[v] = -1;
            --assigned_;
            if (budget_hit_) return false;
        }
        return false;
    }

    int pick_vertex() const {
        int best = -1;
        for (int v = 0; v < g_.vertex_count(); ++v) {
            if (labels_[v] >= 0) continue;
            if (best < 0 || num_forbidden_[v] > num_forbidden_[best] ||
                (num_forbidden_[v] == num_forbidden_[best] &&
                 g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    void bump(int u, int x, int delta) {
        int& count = forbid_[u][x];
        if (delta > 0) {
            if (count++ == 0 && ++num_forbidden_[u] == lam_ + 1 &&
                labels_[u] < 0)
                ++wiped_;
        } else {
            if (--count == 0 && num_forbidden_[u]-- == lam_ + 1 &&
                labels_[u] < 0)
                --wiped_;
        }
    }

    void apply(int v, int c, int delta) {
        const int lo = std::max(0, c - d_ + 1);
        const int hi = std::min(lam_, c + d_ - 1);
        for (int u : g_.neighbors(v))
            for (int x = lo; x <= hi; ++x) bump(u, x, delta);
        for (int w : dist2_[v]) bump(w, c, delta);
    }

    const Graph& g_;
    const int d_;
    const int lam_;
    const SearchOptions& opts_;
    std::vector<std::vector<int>> dist2_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> forbid_;
    std::vector<int> num_forbidden_;
    int assigned_ = 0;
    int wiped_ = 0;  // unassigned vertices with every label forbidden
    long long nodes_ = 0;
    bool budget_hit_ = false;
};

}  // namespace

DecisionResult is_labelable(const Graph& g, int d, int lam,
                            const SearchOptions& opts) {
    if (d < 1) throw std::invalid_argument("separation d must be >= 1");
    if (lam < 0) throw std::invalid_argument("lam must be >= 0");
    return Searcher(g, d, lam, opts).run();
}

SolveResult lambda_exact(const Graph& g, int d, const SearchOptions& opts) {
    if (d < 1) throw std::invalid_argument("separation d must be >= 1");
    SolveResult result;
    int start = 0;
    if (auto bound = degree_lower_bound(g, d)) start = *bound;
    if (g.edge_count() > 0) start = std::max(start, d);
    result.lower_bound = start;

    SearchOptions sub = opts;
    for (int lam = start;; ++lam) {
        sub.node_budget = opts.node_budget - result.nodes_explored;
        DecisionResult dec = is_labelable(g, d, lam, sub);
        result.nodes_explored += dec.nodes_explored;
        if (dec.status == Feasibility::Labelable) {
            result.lambda = lam;
            result.witness = std::move(*dec.labeling);
            result.lower_bound = lam;
            result.upper_bound = lam;
            auto report = verify_labeling(g, result.witness);
            if (!report.valid || report.span != lam)
                throw std::logic_error("internal verification failure");
            return result;
        }
        if (dec.status == Feasibility::BudgetExceeded) {
            result.timed_out = true;
            result.lower_bound = lam;  // everything below lam is refuted
            return result;
        }
        // Infeasible: lambda > lam, try the next span.
    }
}

}  // namespace bundlelabel
