#include "nefdisc/nef_partition.hpp"

#include "nefdisc/error.hpp"

#include <algorithm>
#include <numeric>

namespace nefdisc {
namespace {

std::string vertex_list(const std::vector<RationalPoint> &vs) {
    std::string s;
    for (const auto &v : vs)
        s += to_string(v);
    return s;
}

} // namespace

std::vector<std::size_t> NefPartition::part_sizes() const {
    std::vector<std::size_t> out;
    for (const auto &p : parts)
        out.push_back(p.size());
    return out;
}

NefPartition make_partition(Polytope p, std::vector<std::vector<std::size_t>> parts) {
    if (parts.empty())
        fail(ErrorCode::InvalidPartition, "a nef partition needs at least one part");
    std::vector<int> seen(p.vertices().size(), 0);
    for (auto &part : parts) {
        if (part.empty())
            fail(ErrorCode::InvalidPartition, "empty part");
        std::sort(part.begin(), part.end());
        for (auto v : part) {
            if (v >= seen.size())
                fail(ErrorCode::InvalidPartition,
                     "vertex id " + std::to_string(v) + " out of range");
            if (seen[v]++)
                fail(ErrorCode::InvalidPartition,
                     "vertex id " + std::to_string(v) + " appears in two parts");
        }
    }
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v])
            fail(ErrorCode::InvalidPartition, "vertex " + to_string(p.vertices()[v]) +
                                                  " belongs to no part");
    return NefPartition{std::move(p), std::move(parts)};
}

NefPartitionData build_nef_data(const NefPartition &np) {
    const Polytope &nc = np.nabla_check;
    if (!is_reflexive(nc))
        fail(ErrorCode::NotReflexive, "the input polytope is not reflexive");
    NefPartition checked = make_partition(nc, np.parts);

    NefPartitionData data;
    const int d = nc.ambient_dim();
    const std::size_t r = checked.r();
    data.vertex_part_map.resize(nc.vertices().size());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < checked.parts[i].size(); ++k)
            data.vertex_part_map[checked.parts[i][k]] = PartSlot{i, k};

    const RationalPoint origin(static_cast<std::size_t>(d), Rational(0));
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<RationalPoint> pts{origin};
        for (auto v : checked.parts[i])
            pts.push_back(nc.vertices()[v]);
        data.delta_parts.push_back(convex_hull(pts, d, nc.lattice()));
    }

    data.nabla = polar_dual(nc);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<HalfSpace> hs;
        for (std::size_t a = 0; a < nc.vertices().size(); ++a) {
            RationalPoint e = nc.vertices()[a];
            IntVector normal = to_integer(e);
            hs.push_back(HalfSpace{normal, data.vertex_part_map[a].part == i ? 1 : 0});
        }
        Polytope part = halfspace_intersection(hs, d, opposite(nc.lattice()));
        if (!part.is_lattice_polytope())
            fail(ErrorCode::NotNef, "part " + std::to_string(i + 1) +
                                        " of the dual decomposition has non-integral vertices " +
                                        vertex_list(part.vertices()));
        data.nabla_parts.push_back(std::move(part));
    }

    Polytope sum = minkowski_sum(data.nabla_parts);
    if (!(sum == data.nabla))
        fail(ErrorCode::NotNef, "the sum of the dual parts " + vertex_list(sum.vertices()) +
                                    " differs from the dual polytope " +
                                    vertex_list(data.nabla.vertices()));

    std::vector<RationalPoint> all;
    for (const auto &p : data.nabla_parts)
        all.insert(all.end(), p.vertices().begin(), p.vertices().end());
    data.delta_check = convex_hull(all, d, opposite(nc.lattice()));
    data.delta = minkowski_sum(data.delta_parts);
    if (!(polar_dual(data.delta_check) == data.delta))
        fail(ErrorCode::NotNef, "the dual of Conv(nabla parts) is not the sum of the delta parts");

    data.partition = std::move(checked);
    return data;
}

bool is_irreducible(const NefPartition &np) {
    const std::size_t r = np.r();
    if (r > 20)
        fail(ErrorCode::InvalidPartition, "too many parts for subset enumeration");
    const int d = np.nabla_check.ambient_dim();
    const RationalPoint origin(static_cast<std::size_t>(d), Rational(0));
    std::vector<Polytope> parts;
    for (const auto &part : np.parts) {
        std::vector<RationalPoint> pts{origin};
        for (auto v : part)
            pts.push_back(np.nabla_check.vertices()[v]);
        parts.push_back(convex_hull(pts, d));
    }
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << r); ++mask) {
        std::vector<Polytope> chosen;
        for (std::size_t i = 0; i < r; ++i)
            if (mask >> i & 1U)
                chosen.push_back(parts[i]);
        if (minkowski_sum(chosen).contains_in_relative_interior(origin))
            return false;
    }
    return true;
}

NefPartitionData mirror(const NefPartitionData &data) {
    const Polytope &dc = data.delta_check;
    std::vector<std::vector<std::size_t>> parts(data.r());
    for (std::size_t v = 0; v < dc.vertices().size(); ++v) {
        std::size_t owner = data.r();
        for (std::size_t i = 0; i < data.r(); ++i) {
            const auto &vs = data.nabla_parts[i].vertices();
            if (std::binary_search(vs.begin(), vs.end(), dc.vertices()[v])) {
                if (owner != data.r())
                    fail(ErrorCode::NotNef, "vertex " + to_string(dc.vertices()[v]) +
                                                " is a vertex of two dual parts");
                owner = i;
            }
        }
        if (owner == data.r())
            fail(ErrorCode::NotNef,
                 "vertex " + to_string(dc.vertices()[v]) + " is a vertex of no dual part");
        parts[owner].push_back(v);
    }
    Polytope flipped = dc;
    return build_nef_data(NefPartition{std::move(flipped), std::move(parts)});
}

NefPartition projective_partition(std::span<const int> degrees) {
    if (degrees.empty())
        fail(ErrorCode::InvalidPartition, "no degrees given");
    int total = 0;
    for (int deg : degrees) {
        if (deg < 1)
            fail(ErrorCode::InvalidPartition, "degrees must be positive");
        total += deg;
    }
    const int big_n = total - 1;
    if (big_n < 1)
        fail(ErrorCode::InvalidPartition, "projective space of dimension < 1");
    std::vector<IntVector> pts;
    pts.emplace_back(static_cast<std::size_t>(big_n), Integer(-1));
    for (int i = 0; i < big_n; ++i) {
        IntVector e(static_cast<std::size_t>(big_n), Integer(0));
        e[static_cast<std::size_t>(i)] = 1;
        pts.push_back(std::move(e));
    }
    Polytope simplex = convex_hull(pts, big_n);
    auto ids = projective_vertex_ids(simplex);
    std::vector<std::vector<std::size_t>> parts;
    std::size_t a = 0;
    for (int deg : degrees) {
        std::vector<std::size_t> part;
        for (int k = 0; k < deg; ++k)
            part.push_back(ids[a++]);
        parts.push_back(std::move(part));
    }
    return make_partition(std::move(simplex), std::move(parts));
}

std::vector<std::size_t> projective_vertex_ids(const Polytope &simplex) {
    const auto n = static_cast<std::size_t>(simplex.ambient_dim());
    std::vector<std::size_t> ids(n + 1);
    for (std::size_t v = 0; v < simplex.vertices().size(); ++v) {
        const auto &x = simplex.vertices()[v];
        auto hit = std::find(x.begin(), x.end(), Rational(1));
        if (hit == x.end())
            ids[0] = v;
        else
            ids[static_cast<std::size_t>(hit - x.begin()) + 1] = v;
    }
    return ids;
}

} // namespace nefdisc
