#pragma once

// Transversal faces, adjoint pairs and the polytopal complex Sigma inside
// Delta x Nabla, built from subdivisions of the transversal faces.

#include "nefdisc/nef_partition.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace nefdisc {

enum class Side { NablaCheck, DeltaCheck };

std::string_view to_string(Side side);
Side side_from_string(std::string_view s);

struct TransversalFace {
    Side side = Side::NablaCheck;
    Face face;                       // face of nabla_check or delta_check
    std::vector<Polytope> components; // s ∩ Delta_i, resp. t ∩ Nabla_i
    std::vector<int> component_dims;
    Polytope sum;  // s_Delta, resp. t_Nabla
    Face sum_face; // the same polytope as a face of Delta, resp. Nabla
    bool minimal = false;
};

/// All proper transversal faces of nabla_check (s-side) or delta_check
/// (t-side), ordered by dimension and then vertex ids.
std::vector<TransversalFace> transversal_faces(const NefPartitionData &data, Side side);

struct AdjointPair {
    std::size_t s = 0; // index into SigmaFaces::s_faces
    std::size_t t = 0; // index into SigmaFaces::t_faces
};

struct SigmaFaces {
    std::vector<TransversalFace> s_faces;
    std::vector<TransversalFace> t_faces;
    std::vector<AdjointPair> pairs; // sorted by (s, t)

    const std::vector<TransversalFace> &faces(Side side) const {
        return side == Side::NablaCheck ? s_faces : t_faces;
    }
    /// Index of the transversal face with the given vertex ids, or npos.
    std::size_t find(Side side, const std::vector<std::size_t> &vertex_ids) const;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

SigmaFaces adjoint_pairs(const NefPartitionData &data);

using PointList = std::vector<IntVector>;

struct SubdivisionCell {
    std::vector<PointList> parts; // one (sorted) point list per part
    friend bool operator==(const SubdivisionCell &, const SubdivisionCell &) = default;
};

struct CayleySubdivision {
    Side side = Side::DeltaCheck;
    std::vector<std::size_t> face; // vertex ids of the target face
    std::vector<SubdivisionCell> cells;
    friend bool operator==(const CayleySubdivision &, const CayleySubdivision &) = default;
};

/// The face taken whole, components given by their vertices.
CayleySubdivision trivial_subdivision(const TransversalFace &f);

/// Throws InvalidSubdivision unless every cell sits in the face with its
/// points in the right parts, spans the face, the cell volumes add up to the
/// face volume, and every interior cell facet is shared by exactly two cells.
void validate_subdivision(const NefPartitionData &data, const TransversalFace &f,
                          const CayleySubdivision &sub);

struct SigmaCell {
    std::vector<PointList> sigma; // per-part points, s side
    std::vector<PointList> tau;   // per-part points, t side
    std::vector<int> sigma_dims;
    std::vector<int> tau_dims;
    int dim_sigma = 0; // dim sigma_Delta
    int dim_tau = 0;   // dim tau_Nabla
    int dim = 0;
    bool smooth = true;
    std::vector<RationalPoint> sigma_delta_vertices;
    std::vector<RationalPoint> tau_nabla_vertices;
    RationalPoint barycenter; // in Delta x Nabla, 2d coordinates
    std::size_t s_face = SigmaFaces::npos; // smallest transversal faces carrying the cell
    std::size_t t_face = SigmaFaces::npos;
    std::vector<std::size_t> facets; // ids of the codimension-one cells
};

struct SigmaComplex {
    int n = 0;
    std::size_t r = 0;
    std::vector<SigmaCell> cells; // ordered by dimension, then (sigma, tau)
    std::vector<std::size_t> top; // ids of the n-cells

    /// For each (n-1)-cell, the n-cells containing it.
    std::vector<std::vector<std::size_t>> cofacets() const;
};

/// Cells sigma_Delta x tau_Nabla over every adjoint pair, closed under faces.
/// Faces without an entry in S or T are taken whole.
SigmaComplex sigma_cells(const NefPartitionData &data, const SigmaFaces &faces,
                         const std::vector<CayleySubdivision> &S,
                         const std::vector<CayleySubdivision> &T);

/// Throws NotAComplex unless every (n-1)-cell lies in exactly two n-cells.
void check_pseudomanifold(const SigmaComplex &sigma);

/// Alternating count of all cells; checks the complex first.
long sigma_euler(const SigmaComplex &sigma);

} // namespace nefdisc
