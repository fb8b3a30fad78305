#pragma once

// Stratum census and closed-form Euler characteristics for complete
// intersections in projective space, plus monodromy-matrix checks.

#include "nefdisc/discriminant.hpp"
#include "nefdisc/nef_partition.hpp"

#include <array>
#include <string_view>
#include <vector>

namespace nefdisc {

struct CIDescriptor {
    int ambient = 0; // N
    std::vector<int> degrees;
    int cy_dim() const { return ambient - static_cast<int>(degrees.size()); }
};

/// Checks degrees >= 2 and sum(degrees) = N + 1.
CIDescriptor make_ci(int ambient, std::vector<int> degrees);

Integer k3_singular_count(const CIDescriptor &ci);

struct CurveComponentStats {
    std::size_t group = 0; // 1-based
    Integer degree_product;
    Integer genus;
    Integer chi;
    Integer punctures;
    Integer chi_punctured;
};

CurveComponentStats curve_stats(const CIDescriptor &ci, std::size_t group);
Integer threefold_euler(const CIDescriptor &ci);

enum class StratumKind { X, C, P, Y, Z, CHat, PHat, QHat };
std::string_view to_string(StratumKind kind);

struct StratumIndex {
    StratumKind kind = StratumKind::X;
    std::size_t i = 0; // 1-based part, 0 when unused
    std::size_t j = 0;
    std::vector<std::size_t> mu;    // 1-based indices inside part i
    std::vector<std::size_t> nu;    // 1-based indices inside part j
    std::vector<std::size_t> alpha; // one entry per part, 0 where unused
    std::vector<std::size_t> divisors; // vertex ids, sorted
    bool nonempty = false;
};

/// All index tuples of every stratum kind.  A stratum is nonempty when its
/// divisors all lie in one simplex of `simplices` (vertex-id sets).
std::vector<StratumIndex> enumerate_strata(const NefPartition &np,
                                           const std::vector<std::vector<std::size_t>> &simplices);

/// Facets of a simplicial polytope as vertex-id sets.
std::vector<std::vector<std::size_t>> boundary_simplices(const Polytope &p);

struct CensusReport {
    CIDescriptor ci;
    std::vector<CurveComponentStats> curves; // n = 3 only
    std::vector<std::size_t> c_components;   // per part, nonempty C strata
    std::vector<std::size_t> p_components;   // per part, nonempty P strata
    Integer euler_closed_form;               // n = 3
    Integer euler_from_strata;               // n = 3
    Integer k3_points;                       // n = 2
    std::vector<StratumIndex> strata;
};

CensusReport census(const CIDescriptor &ci);

using Matrix3 = std::array<std::array<Integer, 3>, 3>;

struct MonodromyReport {
    std::array<Matrix3, 3> matrices;
    std::array<bool, 3> conjugate_to_standard{};
    std::array<int, 3> fixed_dims{};
    bool product_is_identity = false;
    int common_fixed_dim = 0;
    VertexKind consistent_with = VertexKind::Unclassified;
    VertexKind expected = VertexKind::Unclassified;
    bool matches_expected = false;
};

/// Throws NotUnipotent or ProductNotIdentity.
MonodromyReport monodromy_check(const std::array<Matrix3, 3> &triple, VertexKind expected);

} // namespace nefdisc
