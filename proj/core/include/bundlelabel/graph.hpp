#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bundlelabel {

// Undirected simple graph on vertices 0..vertex_count-1 with sorted
// adjacency lists.  Constructors below return finished graphs; treat a
// Graph as immutable once built (safe to share across threads).
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    int max_degree() const;
    long long edge_count() const;

    // Keeps both lists sorted; duplicate edges are a no-op, self-loops
    // and out-of-range endpoints throw.
    void add_edge(int u, int v);

    // All edges as (u, v) with u < v, sorted.
    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
};

Graph cycle(int n);  // n >= 3
Graph path(int n);   // n >= 1

Graph direct_product(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);

// Unordered pairs at shortest-path distance exactly 2, u < v, sorted.
std::vector<std::pair<int, int>> distance_two_pairs(const Graph& g);

// BFS distances from source; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, int source);

// One edge per line "u v" with u < v, sorted.
std::string to_edge_list(const Graph& g);

// DOT text; node ids are flat indices, node labels "i,j" with
// i = v / fibre_n and j = v % fibre_n.
std::string to_dot(const Graph& g, int fibre_n);

}  // namespace bundlelabel
