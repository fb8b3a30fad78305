#pragma once

// The combinatorial discriminant: a graph in Sigma through the barycentres of
// the non-smooth cells of dimension n and n-1.

#include "nefdisc/sigma_complex.hpp"

#include <string_view>
#include <vector>

namespace nefdisc {

enum class VertexKind { Unclassified, Positive, Negative, Bivalent, DoublePoint };

std::string_view to_string(VertexKind kind);

struct DiscriminantVertex {
    std::size_t cell = 0; // id in the SigmaComplex
    RationalPoint position;
    VertexKind kind = VertexKind::Unclassified;
    int valence = 0;
    int dim_sigma = 0;
    int dim_tau = 0;
    int cell_dim = 0;
    std::vector<std::size_t> families; // parts i with dim sigma_i * dim tau_i > 0
    std::size_t s_face = SigmaFaces::npos;
    std::size_t t_face = SigmaFaces::npos;
};

struct DiscriminantEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t interface = 0; // the (n-1)-cell the edge runs through
    std::size_t label = 0;     // edges with equal labels carry the same monodromy
};

struct DiscriminantGraph {
    int n = 0;
    std::vector<DiscriminantVertex> vertices;
    std::vector<DiscriminantEdge> edges;
    std::size_t closed_loops = 0; // cycles left after removing bivalent vertices
    bool classified = false;
};

/// Vertices: non-smooth cells of dimension n and n-1; edges join an (n-1)-cell
/// to each n-cell containing it.  Kinds are left Unclassified.
DiscriminantGraph build_discriminant(const SigmaComplex &sigma);

/// Sign rule for threefolds.  Throws UnsupportedDimension for n != 3 and
/// UnclassifiableCell for cells outside the known patterns.
DiscriminantGraph classify_vertices(DiscriminantGraph g);

DiscriminantGraph smooth_bivalent(DiscriminantGraph g);

long graph_euler(const DiscriminantGraph &g);

struct DiscriminantCounts {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t bivalent = 0;
    std::size_t double_points = 0;
    std::size_t unclassified = 0;
};
DiscriminantCounts count_kinds(const DiscriminantGraph &g);

struct PlanarGraph {
    std::vector<RationalPoint> nodes; // cell barycentres
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    struct Ray {
        std::size_t node;
        IntVector direction; // outward normal of the boundary edge
    };
    std::vector<Ray> rays;
    std::size_t loops = 0;
};

/// Dual graph of a subdivided lattice polygon (the cells of `sub`, one part).
PlanarGraph tropical_dual_graph(const Polytope &polygon, const CayleySubdivision &sub);

} // namespace nefdisc
