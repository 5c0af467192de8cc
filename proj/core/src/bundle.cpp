#include "bundlelabel/bundle.hpp"

#include "bundlelabel/mod_arith.hpp"

#include <stdexcept>
#include <string>

namespace bundlelabel {

const char* kind_name(ProductKind kind) {
    return kind == ProductKind::Direct ? "direct" : "cartesian";
}

void validate(const BundleSpec& spec) {
    if (spec.m < 3)
        throw std::invalid_argument("base cycle order m must be >= 3, got " +
                                    std::to_string(spec.m));
    if (spec.n < 3)
        throw std::invalid_argument("fibre cycle order n must be >= 3, got " +
                                    std::to_string(spec.n));
    if (spec.ell < 0 || spec.ell >= spec.n)
        throw std::invalid_argument("shift ell must lie in [0, n), got " +
                                    std::to_string(spec.ell));
}

int flat_index(VertexCoord c, int n) { return c.i * n + c.j; }

VertexCoord coord_of(int index, int n) { return {index / n, index % n}; }

// The bundle is P_m (x) C_n / P_m [] C_n plus one twisted layer of edges
// between the fibre over m-1 and the fibre over 0.
Graph build_bundle(const BundleSpec& spec) {
    validate(spec);
    const int m = spec.m;
    const int n = spec.n;
    const auto wrap = [n](int j) { return static_cast<int>(mod_floor(j, n)); };
    Graph g(m * n);

    if (spec.kind == ProductKind::Direct) {
        for (int i = 0; i + 1 < m; ++i)
            for (int j = 0; j < n; ++j) {
                g.add_edge(i * n + j, (i + 1) * n + wrap(j + 1));
                g.add_edge(i * n + j, (i + 1) * n + wrap(j - 1));
            }
        for (int u = 0; u < n; ++u) {
            g.add_edge((m - 1) * n + u, 0 * n + wrap(u + 1 + spec.ell));
            g.add_edge((m - 1) * n + u, 0 * n + wrap(u - 1 + spec.ell));
        }
    } else {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                g.add_edge(i * n + j, i * n + wrap(j + 1));
        for (int i = 0; i + 1 < m; ++i)
            for (int j = 0; j < n; ++j)
                g.add_edge(i * n + j, (i + 1) * n + j);
        for (int u = 0; u < n; ++u)
            g.add_edge((m - 1) * n + u, 0 * n + wrap(u + spec.ell));
    }
    return g;
}

}  // namespace bundlelabel
