#pragma once

// Nef partitions of reflexive polytopes and the Batyrev-Borisov data built
// from them.

#include "nefdisc/geometry.hpp"

#include <span>
#include <vector>

namespace nefdisc {

struct NefPartition {
    Polytope nabla_check;
    std::vector<std::vector<std::size_t>> parts; // vertex ids of nabla_check, sorted

    std::size_t r() const { return parts.size(); }
    std::vector<std::size_t> part_sizes() const;
};

struct PartSlot {
    std::size_t part = 0;  // 0-based part index
    std::size_t index = 0; // position inside the part (0-based)
};

struct NefPartitionData {
    NefPartition partition;
    std::vector<Polytope> delta_parts; // Conv(0, E_i)
    std::vector<Polytope> nabla_parts; // {m : <m, e_a> <= delta_{i, part(a)}}
    Polytope nabla;
    Polytope delta;
    Polytope delta_check;
    std::vector<PartSlot> vertex_part_map; // indexed by nabla_check vertex id

    std::size_t r() const { return partition.r(); }
    int d() const { return nabla_check().ambient_dim(); }
    int n() const { return d() - static_cast<int>(r()); }
    const Polytope &nabla_check() const { return partition.nabla_check; }
};

/// Checks that `parts` is a partition of the vertex ids of `p` into nonempty
/// groups; throws InvalidPartition otherwise.  Parts are sorted on return.
NefPartition make_partition(Polytope p, std::vector<std::vector<std::size_t>> parts);

NefPartitionData build_nef_data(const NefPartition &np);
bool is_irreducible(const NefPartition &np);

/// Nef partition on delta_check whose parts are the nonzero vertices of the
/// nabla parts; building it exchanges the roles of delta and nabla.
NefPartitionData mirror(const NefPartitionData &data);

/// P^N with N = sum(degrees) - 1: the simplex Conv(e_0, ..., e_N) with
/// e_0 = -(e_1 + ... + e_N), partitioned into consecutive groups of the given
/// sizes (e_0 in the first group).
NefPartition projective_partition(std::span<const int> degrees);

/// Ids (into nabla_check's vertex order) of e_0..e_N for projective_partition.
std::vector<std::size_t> projective_vertex_ids(const Polytope &simplex);

} // namespace nefdisc
