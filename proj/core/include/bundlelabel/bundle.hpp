#pragma once

#include "bundlelabel/graph.hpp"

namespace bundlelabel {

enum class ProductKind { Direct, Cartesian };

const char* kind_name(ProductKind kind);  // "direct" / "cartesian"

// One bundle instance: base cycle C_m, fibre cycle C_n, and a cyclic
// shift j -> (j + ell) mod n applied across the (m-1, 0) base edge.
// Every other base edge carries the identity automorphism.
struct BundleSpec {
    ProductKind kind = ProductKind::Direct;
    int m = 3;    // base cycle order
    int n = 3;    // fibre cycle order
    int ell = 0;  // 0 <= ell < n
};

// Throws std::invalid_argument unless m >= 3, n >= 3, 0 <= ell < n.
void validate(const BundleSpec& spec);

// Vertices (i, j) are flattened base-major: index = i*n + j.
struct VertexCoord {
    int i = 0;
    int j = 0;
};

int flat_index(VertexCoord c, int n);
VertexCoord coord_of(int index, int n);

Graph build_bundle(const BundleSpec& spec);

}  // namespace bundlelabel
