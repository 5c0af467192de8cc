#include "bundlelabel/labeling.hpp"

#include <algorithm>
#include <stdexcept>

namespace bundlelabel {

bool operator==(const Violation& a, const Violation& b) {
    return a.u == b.u && a.v == b.v && a.distance == b.distance &&
           a.gap == b.gap;
}

int span_of(const std::vector<int>& labels) {
    if (labels.empty()) return 0;
    auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
    return *hi - *lo;
}

namespace {

void check_usage(const Graph& g, const Labeling& l) {
    if (static_cast<int>(l.labels.size()) != g.vertex_count())
        throw std::invalid_argument("labeling length does not match graph");
    if (l.d < 1) throw std::invalid_argument("separation d must be >= 1");
    for (int x : l.labels)
        if (x < 0) throw std::invalid_argument("labels must be nonnegative");
}

void sort_violations(std::vector<Violation>& vs) {
    std::sort(vs.begin(), vs.end(), [](const Violation& a, const Violation& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
}

}  // namespace

ValidityReport verify_labeling(const Graph& g, const Labeling& l) {
    check_usage(g, l);
    ValidityReport report;
    report.span = span_of(l.labels);
    for (const auto& [u, v] : g.edges()) {
        int gap = std::abs(l.labels[u] - l.labels[v]);
        if (gap < l.d) report.violations.push_back({u, v, 1, gap});
    }
    for (const auto& [u, v] : distance_two_pairs(g)) {
        int gap = std::abs(l.labels[u] - l.labels[v]);
        if (gap < 1) report.violations.push_back({u, v, 2, gap});
    }
    sort_violations(report.violations);
    report.valid = report.violations.empty();
    return report;
}

ValidityReport naive_verify(const Graph& g, const Labeling& l) {
    check_usage(g, l);
    ValidityReport report;
    report.span = span_of(l.labels);
    for (int u = 0; u < g.vertex_count(); ++u) {
        auto dist = bfs_distances(g, u);
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            int gap = std::abs(l.labels[u] - l.labels[v]);
            if (dist[v] == 1 && gap < l.d)
                report.violations.push_back({u, v, 1, gap});
            else if (dist[v] == 2 && gap < 1)
                report.violations.push_back({u, v, 2, gap});
        }
    }
    sort_violations(report.violations);
    report.valid = report.violations.empty();
    return report;
}

std::optional<int> degree_lower_bound(const Graph& g, int d) {
    if (d < 1) throw std::invalid_argument("separation d must be >= 1");
    const int max_deg = g.max_degree();
    if (d > max_deg) return std::nullopt;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != max_deg) continue;
        bool all_max = true;
        for (int u : g.neighbors(v))
            if (g.degree(u) != max_deg) {
                all_max = false;
                break;
            }
        if (all_max) return max_deg + 2 * d - 2;
    }
    return std::nullopt;
}

}  // namespace bundlelabel
