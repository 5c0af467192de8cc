#pragma once

#include "bundlelabel/graph.hpp"

#include <optional>
#include <vector>

namespace bundlelabel {

// An L(d,1) candidate: adjacent vertices must get labels that differ by
// at least d, vertices at distance two by at least 1.
struct Labeling {
    std::vector<int> labels;  // indexed by flat vertex index, all >= 0
    int d = 1;
};

struct Violation {
    int u = 0;
    int v = 0;
    int distance = 1;  // 1 or 2
    int gap = 0;       // |f(u) - f(v)|
};

bool operator==(const Violation& a, const Violation& b);

struct ValidityReport {
    bool valid = true;
    std::vector<Violation> violations;  // sorted by (u, v), exhaustive
    int span = 0;                       // max label - min label
};

int span_of(const std::vector<int>& labels);

// Checks every adjacent pair against d and every distance-2 pair
// against 1.  Distances are computed by edge and two-step neighborhood
// scans only.  Throws std::invalid_argument on length mismatch,
// negative labels, or d < 1 (usage errors, distinct from invalidity).
ValidityReport verify_labeling(const Graph& g, const Labeling& l);

// Same contract as verify_labeling but driven by all-pairs BFS
// distances.  Exists as an independent cross-check.
ValidityReport naive_verify(const Graph& g, const Labeling& l);

// Max-degree lower bound: if some vertex of maximum degree D has all D
// neighbors also of degree D and 1 <= d <= D, every valid labeling has
// span >= D + 2d - 2.  Returns nullopt when the hypothesis fails.
std::optional<int> degree_lower_bound(const Graph& g, int d);

}  // namespace bundlelabel
