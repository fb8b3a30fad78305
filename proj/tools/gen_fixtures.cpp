// Writes nef partitions and fine regular subdivisions of their transversal
// faces, lifted by a random positive definite quadratic form.

#include "nefdisc/error.hpp"
#include "nefdisc/io.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>

using namespace nefdisc;

namespace {

struct Lift {
    std::vector<std::vector<long>> q;

    Lift(int d, unsigned seed) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<long> dist(-9, 9);
        std::vector<std::vector<long>> a(static_cast<std::size_t>(d), std::vector<long>(d));
        for (auto &row : a)
            for (auto &x : row)
                x = dist(rng);
        q.assign(d, std::vector<long>(d, 0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) {
                for (int k = 0; k < d; ++k)
                    q[i][j] += a[k][i] * a[k][j];
                if (i == j)
                    q[i][j] += 1;
            }
    }

    Integer operator()(const IntVector &p) const {
        Integer s = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = 0; j < p.size(); ++j)
                s += p[i] * q[i][j] * p[j];
        return s;
    }
};

// Lower faces of the lifted point set, or nothing if some cell is not a simplex.
std::optional<CayleySubdivision> subdivide(const TransversalFace &f, const Polytope &whole,
                                           const Lift &lift) {
    struct Tagged {
        IntVector p;
        std::size_t part;
    };
    std::vector<Tagged> pts;
    for (std::size_t i = 0; i < f.components.size(); ++i)
        for (auto &lp : lattice_points(f.components[i]))
            pts.push_back({lp.coords, i});
    const int k = whole.dim();
    CayleySubdivision sub;
    sub.side = f.side;
    sub.face = f.face.vertex_ids;
    if (pts.size() == static_cast<std::size_t>(k + 1)) {
        SubdivisionCell cell;
        cell.parts.resize(f.components.size());
        for (const auto &t : pts)
            cell.parts[t.part].push_back(t.p);
        for (auto &part : cell.parts)
            std::sort(part.begin(), part.end());
        sub.cells.push_back(std::move(cell));
        return sub;
    }
    std::vector<RationalPoint> lifted;
    for (const auto &t : pts) {
        RationalPoint x = whole.local_coordinates(to_rational(t.p));
        x.push_back(Rational(lift(t.p)));
        lifted.push_back(std::move(x));
    }
    Polytope hull = convex_hull(lifted, k + 1);
    for (const auto &h : hull.facets()) {
        if (h.normal.back() >= 0)
            continue;
        SubdivisionCell cell;
        cell.parts.resize(f.components.size());
        std::size_t count = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (h.saturated_by(lifted[i])) {
                cell.parts[pts[i].part].push_back(pts[i].p);
                ++count;
            }
        if (count != static_cast<std::size_t>(k + 1))
            return std::nullopt;
        for (auto &part : cell.parts)
            std::sort(part.begin(), part.end());
        sub.cells.push_back(std::move(cell));
    }
    std::sort(sub.cells.begin(), sub.cells.end(),
              [](const SubdivisionCell &a, const SubdivisionCell &b) { return a.parts < b.parts; });
    return sub;
}

std::vector<CayleySubdivision> generate(const NefPartitionData &data, unsigned seed) {
    SigmaFaces faces = adjoint_pairs(data);
    for (unsigned attempt = 0; attempt < 100; ++attempt) {
        Lift lift(data.d(), seed + attempt);
        std::vector<CayleySubdivision> out;
        bool ok = true;
        for (Side side : {Side::NablaCheck, Side::DeltaCheck}) {
            const Polytope &poly = side == Side::NablaCheck ? data.nabla_check() : data.delta_check;
            for (const auto &f : faces.faces(side)) {
                if (f.face.dim < 1)
                    continue;
                std::vector<RationalPoint> vs;
                for (auto v : f.face.vertex_ids)
                    vs.push_back(poly.vertices()[v]);
                Polytope whole = convex_hull(vs, data.d(), poly.lattice());
                auto sub = subdivide(f, whole, lift);
                if (!sub) {
                    ok = false;
                    break;
                }
                if (side == Side::DeltaCheck || sub->cells.size() > 1)
                    out.push_back(std::move(*sub));
            }
            if (!ok)
                break;
        }
        if (ok)
            return out;
    }
    fail(ErrorCode::InvalidSubdivision, "no generic lift found");
}

std::string label(std::span<const int> degrees) {
    std::string s;
    for (int d : degrees)
        s += (s.empty() ? "" : "_") + std::to_string(d);
    return s;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"fixture generator"};
    std::string out_dir = "fixtures";
    unsigned seed = 1;
    app.add_option("-o,--output", out_dir, "output directory");
    app.add_option("--seed", seed, "lift seed");
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::vector<int>> instances = {
        {3}, {2, 2}, {4}, {3, 2}, {2, 2, 2}, {5}, {4, 2}, {3, 3}, {3, 2, 2}, {2, 2, 2, 2}};
    std::filesystem::create_directories(out_dir);
    for (const auto &degrees : instances) {
        NefPartition np = projective_partition(degrees);
        NefPartitionData data = build_nef_data(np);
        auto subs = generate(data, seed);
        std::string base = out_dir + "/p" + std::to_string(np.nabla_check.ambient_dim()) + "_" +
                           label(degrees);
        std::ofstream(base + ".partition.json") << partition_to_json(np).dump() << "\n";
        std::ofstream(base + ".subdivisions.json") << subdivisions_to_json(subs).dump() << "\n";
        std::cout << base << ": " << subs.size() << " subdivisions\n";
    }

    // Newton polygon of a plane cubic with a unimodular regular triangulation.
    std::vector<IntVector> corners = {{0, 0}, {3, 0}, {0, 3}};
    TransversalFace cubic;
    cubic.side = Side::DeltaCheck;
    cubic.components.push_back(convex_hull(std::span<const IntVector>(corners), 2));
    cubic.face.vertex_ids = {0, 1, 2};
    cubic.face.dim = 2;
    for (unsigned attempt = 0;; ++attempt) {
        auto sub = subdivide(cubic, cubic.components[0], Lift(2, seed + attempt));
        if (!sub)
            continue;
        std::ofstream(out_dir + "/cubic.polygon.json") << polytope_to_json(cubic.components[0]).dump() << "\n";
        std::ofstream(out_dir + "/cubic.subdivision.json") << subdivision_to_json(*sub).dump() << "\n";
        break;
    }
    return 0;
}
