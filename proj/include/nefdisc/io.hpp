#pragma once

// JSON documents, DOT graphs and SVG figures.

#include "nefdisc/census.hpp"
#include "nefdisc/discriminant.hpp"
#include "nefdisc/sigma_complex.hpp"

#include "json.hpp"

#include <array>
#include <string>
#include <vector>

namespace nefdisc {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string &path);
Json parse_json(const std::string &text);

Json to_json(const Integer &x);
Json to_json(const Rational &q);
Json to_json(std::span<const Integer> v);
Json to_json(std::span<const Rational> v);
Integer integer_from_json(const Json &j);
Rational rational_from_json(const Json &j);
IntVector int_vector_from_json(const Json &j);
RationalPoint rational_point_from_json(const Json &j);

/// {"dim", "lattice", "polytope_dim", "vertices", "inequalities", "equations"}
Json polytope_to_json(const Polytope &p);
/// Accepts a vertex list or an "inequalities" list; "lattice" defaults to N.
Polytope polytope_from_json(const Json &j);

Json partition_to_json(const NefPartition &np);
NefPartition partition_from_json(const Json &j);

Json subdivision_to_json(const CayleySubdivision &sub);
CayleySubdivision subdivision_from_json(const Json &j);
Json subdivisions_to_json(const std::vector<CayleySubdivision> &subs);
/// A single subdivision object, an array of them, or {"subdivisions": [...]}.
std::vector<CayleySubdivision> subdivisions_from_json(const Json &j);

Json nef_report(const NefPartitionData &data, bool irreducible);
Json sigma_report(const NefPartitionData &data, const SigmaFaces &faces,
                  const SigmaComplex &sigma);
Json graph_to_json(const DiscriminantGraph &g);
std::string graph_to_dot(const DiscriminantGraph &g, const SigmaFaces *faces = nullptr);
Json planar_graph_to_json(const PlanarGraph &g);
Json census_to_json(const CensusReport &rep);

std::array<Matrix3, 3> monodromy_from_json(const Json &j);
VertexKind kind_from_string(const std::string &s);
Json monodromy_to_json(const MonodromyReport &rep);

struct SvgStyle {
    std::array<std::string, 3> class_colors{"#c0392b", "#2e6fb7", "#2e9e5b"};
    double size = 480.0;
};

/// Induced Minkowski cells of a subdivided transversal face (sum of dimension
/// at most 2), coloured by which parts contribute: first part only, other
/// parts only, or mixed.  Throws UnsupportedDimension above dimension 2.
std::string subdivision_svg(const NefPartitionData &data, const TransversalFace &face,
                            const CayleySubdivision &sub, const SvgStyle &style = {});

/// A subdivided polygon with its tropical dual graph drawn on top.
std::string planar_graph_svg(const Polytope &polygon, const CayleySubdivision &sub,
                             const PlanarGraph &g, const SvgStyle &style = {});

} // namespace nefdisc
