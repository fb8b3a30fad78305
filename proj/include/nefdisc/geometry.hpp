#pragma once

// Exact polyhedral geometry over Q: V/H conversion, polar duality, Minkowski
// sums, face lattices and lattice points.  Every polytope is immutable once
// built and carries both representations plus its full face lattice.

#include "nefdisc/arith.hpp"

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nefdisc {

/// {x : <normal, x> <= bound}; normal primitive and nonzero.
struct HalfSpace {
    IntVector normal;
    Rational bound;

    bool contains(std::span<const Rational> x) const { return dot(normal, x) <= bound; }
    bool saturated_by(std::span<const Rational> x) const { return dot(normal, x) == bound; }
    friend bool operator==(const HalfSpace &, const HalfSpace &) = default;
};

/// {x : <normal, x> == value}; used to record the affine span of
/// lower-dimensional polytopes.
struct Equation {
    IntVector normal;
    Rational value;
    friend bool operator==(const Equation &, const Equation &) = default;
};

struct Face {
    std::vector<std::size_t> vertex_ids; // sorted
    int dim = 0;
    std::vector<std::size_t> saturated_facets; // sorted

    bool contains_vertex(std::size_t v) const {
        return std::binary_search(vertex_ids.begin(), vertex_ids.end(), v);
    }
    friend bool operator==(const Face &, const Face &) = default;
};

class Polytope {
  public:
    int ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    bool full_dimensional() const { return dim_ == ambient_dim_; }
    Lattice lattice() const { return lattice_; }

    const std::vector<RationalPoint> &vertices() const { return vertices_; }
    const std::vector<HalfSpace> &facets() const { return facets_; }
    const std::vector<Equation> &equations() const { return equations_; }

    /// faces()[k] lists the k-dimensional faces, k = 0..dim(); faces()[dim()]
    /// holds the polytope itself.  Each level is sorted by vertex ids.
    const std::vector<std::vector<Face>> &faces() const { return faces_; }
    const Face *find_face(std::span<const std::size_t> sorted_vertex_ids) const;

    /// Coordinate indices whose projection is injective on the affine span.
    const std::vector<std::size_t> &span_pivots() const { return pivots_; }
    RationalPoint local_coordinates(std::span<const Rational> x) const;

    bool contains(std::span<const Rational> x) const;
    bool contains_in_relative_interior(std::span<const Rational> x) const;
    bool is_lattice_polytope() const;
    /// Vertices lying on every facet in `facet_ids` (the face they cut out).
    std::vector<std::size_t> vertices_on(std::span<const std::size_t> facet_ids) const;

    friend bool operator==(const Polytope &a, const Polytope &b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
    }

  private:
    friend Polytope convex_hull(std::span<const RationalPoint>, int, Lattice);

    int ambient_dim_ = 0;
    int dim_ = 0;
    Lattice lattice_ = Lattice::N;
    std::vector<RationalPoint> vertices_;
    std::vector<HalfSpace> facets_;
    std::vector<Equation> equations_;
    std::vector<std::vector<Face>> faces_;
    std::vector<std::size_t> pivots_;
    RationalPoint span_origin_;
    RationalMatrix span_rows_; // reduced echelon basis of the direction space

    friend std::vector<LatticeVector> lattice_points(const Polytope &);
};

/// Hull of `points`; redundant points are dropped, vertices sorted
/// lexicographically, facets sorted by (normal, bound).
Polytope convex_hull(std::span<const RationalPoint> points, int ambient_dim,
                     Lattice lattice = Lattice::N);
Polytope convex_hull(std::span<const IntVector> points, int ambient_dim,
                     Lattice lattice = Lattice::N);

/// {m : <m, n> <= 1 for all n in P}.  Requires 0 in the interior of P.
Polytope polar_dual(const Polytope &p);
bool is_reflexive(const Polytope &p);
Polytope minkowski_sum(const Polytope &p, const Polytope &q);
Polytope minkowski_sum(std::span<const Polytope> parts);
Polytope halfspace_intersection(std::span<const HalfSpace> halfspaces, int ambient_dim,
                                Lattice lattice = Lattice::N);
const std::vector<std::vector<Face>> &face_lattice(const Polytope &p);
/// Integral points of P in lexicographic order.
std::vector<LatticeVector> lattice_points(const Polytope &p);

/// Face of polar_dual(P) dual to `face` of P, located in `dual`'s face lattice.
const Face &dual_face(const Polytope &p, const Face &face, const Polytope &dual);

/// Facets (faces of dimension dim-1) of `face`, as faces of P.
std::vector<const Face *> facets_of(const Polytope &p, const Face &face);

/// Simplices (vertex-id lists) of the pulling triangulation from the lowest
/// vertex id, recursively through the face lattice.
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope &p);
std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope &p, const Face &face);

/// dim! times the Euclidean volume of P measured in the span-pivot coordinates.
/// Comparable between polytopes with the same affine span.
Rational span_volume(const Polytope &p);

/// Throws InvalidSubdivision unless `cells` tile `whole`: each cell lies in it
/// and spans it, the volumes add up, and each cell facet is either on the
/// boundary (once) or shared by exactly two cells.  `what` prefixes messages.
void check_tiling(const Polytope &whole, std::span<const Polytope> cells, const std::string &what);

/// Average of the vertices.
RationalPoint vertex_barycenter(const Polytope &p);
RationalPoint vertex_barycenter(const Polytope &p, const Face &face);

} // namespace nefdisc
