#include "bundlelabel/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace bundlelabel {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<size_t>(vertex_count));
}

bool Graph::adjacent(int u, int v) const {
    const auto& nu = adj_[u];
    return std::binary_search(nu.begin(), nu.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& nbrs : adj_) twice += static_cast<long long>(nbrs.size());
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto insert_sorted = [](std::vector<int>& list, int x) {
        auto it = std::lower_bound(list.begin(), list.end(), x);
        if (it == list.end() || *it != x) list.insert(it, x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count()));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph direct_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("product factors must be nonempty");
    const int nh = h.vertex_count();
    Graph out(g.vertex_count() * nh);
    for (const auto& [g1, g2] : g.edges())
        for (const auto& [h1, h2] : h.edges()) {
            out.add_edge(g1 * nh + h1, g2 * nh + h2);
            out.add_edge(g1 * nh + h2, g2 * nh + h1);
        }
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        throw std::invalid_argument("product factors must be nonempty");
    const int nh = h.vertex_count();
    Graph out(g.vertex_count() * nh);
    for (const auto& [g1, g2] : g.edges())
        for (int w = 0; w < nh; ++w) out.add_edge(g1 * nh + w, g2 * nh + w);
    for (const auto& [h1, h2] : h.edges())
        for (int u = 0; u < g.vertex_count(); ++u)
            out.add_edge(u * nh + h1, u * nh + h2);
    return out;
}

std::vector<std::pair<int, int>> distance_two_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    std::vector<char> is_neighbor(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int w : g.neighbors(u)) is_neighbor[w] = 1;
        for (int w : g.neighbors(u))
            for (int x : g.neighbors(w)) {
                if (x <= u || is_neighbor[x] || seen[x]) continue;
                seen[x] = 1;
                out.emplace_back(u, x);
            }
        for (int w : g.neighbors(u)) {
            is_neighbor[w] = 0;
            for (int x : g.neighbors(w)) seen[x] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push(v);
            }
    }
    return dist;
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
    return os.str();
}

std::string to_dot(const Graph& g, int fibre_n) {
    if (fibre_n < 1) throw std::invalid_argument("fibre size must be >= 1");
    std::ostringstream os;
    os << "graph bundle {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        os << "  " << v << " [label=\"" << v / fibre_n << ',' << v % fibre_n
           << "\"];\n";
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace bundlelabel
