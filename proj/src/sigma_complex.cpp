#include "nefdisc/sigma_complex.hpp"

#include "nefdisc/error.hpp"

#include <algorithm>
#include <map>

namespace nefdisc {
namespace {

const Polytope &host_of(const NefPartitionData &data, Side side) {
    return side == Side::NablaCheck ? data.nabla_check() : data.delta_check;
}

const Polytope &target_of(const NefPartitionData &data, Side side) {
    return side == Side::NablaCheck ? data.delta : data.nabla;
}

Polytope face_polytope(const Polytope &p, const Face &f) {
    std::vector<RationalPoint> pts;
    for (auto v : f.vertex_ids)
        pts.push_back(p.vertices()[v]);
    return convex_hull(pts, p.ambient_dim(), p.lattice());
}

std::string describe(const std::vector<std::size_t> &ids) {
    std::string s = "{";
    for (std::size_t i = 0; i < ids.size(); ++i)
        s += (i ? "," : "") + std::to_string(ids[i]);
    return s + "}";
}

std::vector<RationalPoint> as_rational(const PointList &pts) {
    std::vector<RationalPoint> out;
    out.reserve(pts.size());
    for (const auto &p : pts)
        out.push_back(to_rational(p));
    return out;
}

std::vector<std::size_t> ids_in(const Polytope &p, const std::vector<RationalPoint> &pts) {
    std::vector<std::size_t> ids;
    for (const auto &x : pts) {
        auto it = std::lower_bound(p.vertices().begin(), p.vertices().end(), x);
        if (it == p.vertices().end() || *it != x)
            return {};
        ids.push_back(static_cast<std::size_t>(it - p.vertices().begin()));
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

// Faces of the Minkowski cell of one subdivision cell, each split into the
// per-part point sets whose sum it is.
struct CellFace {
    int dim = 0;
    std::vector<PointList> parts;
    std::vector<int> part_dims;
    std::vector<RationalPoint> vertices;
    std::vector<std::size_t> facets;
};

std::vector<CellFace> decompose(const SubdivisionCell &cell, int d, Lattice lattice) {
    std::vector<Polytope> comps;
    for (const auto &part : cell.parts)
        comps.push_back(convex_hull(std::span<const IntVector>(part), d, lattice));
    Polytope sum = minkowski_sum(comps);

    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (const auto &lvl : sum.faces()) {
        offset.push_back(total);
        total += lvl.size();
    }

    std::vector<CellFace> out;
    out.reserve(total);
    for (std::size_t k = 0; k < sum.faces().size(); ++k) {
        for (const auto &f : sum.faces()[k]) {
            IntVector c(static_cast<std::size_t>(d), Integer(0));
            for (auto j : f.saturated_facets)
                for (std::size_t x = 0; x < c.size(); ++x)
                    c[x] += sum.facets()[j].normal[x];
            CellFace cf;
            cf.dim = f.dim;
            for (const auto &part : cell.parts) {
                std::vector<Integer> val;
                for (const auto &p : part)
                    val.push_back(dot(std::span<const Integer>(c), std::span<const Integer>(p)));
                Integer best = *std::max_element(val.begin(), val.end());
                PointList chosen;
                for (std::size_t q = 0; q < part.size(); ++q)
                    if (val[q] == best)
                        chosen.push_back(part[q]);
                cf.part_dims.push_back(affine_dimension(as_rational(chosen)));
                cf.parts.push_back(std::move(chosen));
            }
            for (auto v : f.vertex_ids)
                cf.vertices.push_back(sum.vertices()[v]);
            if (f.dim > 0) {
                const auto &below = sum.faces()[k - 1];
                for (const Face *g : facets_of(sum, f))
                    cf.facets.push_back(offset[k - 1] + static_cast<std::size_t>(g - below.data()));
            }
            out.push_back(std::move(cf));
        }
    }
    return out;
}

using CellKey = std::pair<std::vector<PointList>, std::vector<PointList>>;

const CayleySubdivision &lookup(const std::map<std::vector<std::size_t>, CayleySubdivision> &subs,
                                const std::vector<std::size_t> &face,
                                const CayleySubdivision &fallback) {
    auto it = subs.find(face);
    return it == subs.end() ? fallback : it->second;
}

} // namespace

std::string_view to_string(Side side) {
    return side == Side::NablaCheck ? "nabla_check" : "delta_check";
}

Side side_from_string(std::string_view s) {
    if (s == "nabla_check")
        return Side::NablaCheck;
    if (s == "delta_check")
        return Side::DeltaCheck;
    fail(ErrorCode::MalformedInput, "unknown side '" + std::string(s) + "'");
}

std::vector<TransversalFace> transversal_faces(const NefPartitionData &data, Side side) {
    const Polytope &host = host_of(data, side);
    const Polytope &target = target_of(data, side);
    const int d = data.d();
    const std::size_t r = data.r();

    std::vector<TransversalFace> out;
    for (int k = 0; k < host.dim(); ++k) {
        for (const Face &f : host.faces()[static_cast<std::size_t>(k)]) {
            std::vector<std::vector<RationalPoint>> comp(r);
            if (side == Side::NablaCheck) {
                for (auto v : f.vertex_ids)
                    comp[data.vertex_part_map[v].part].push_back(host.vertices()[v]);
            } else {
                for (std::size_t i = 0; i < r; ++i)
                    for (const auto &w : data.nabla_parts[i].vertices()) {
                        bool on = std::all_of(
                            f.saturated_facets.begin(), f.saturated_facets.end(),
                            [&](std::size_t j) { return host.facets()[j].saturated_by(w); });
                        if (on)
                            comp[i].push_back(w);
                    }
            }
            if (std::any_of(comp.begin(), comp.end(), [](const auto &c) { return c.empty(); }))
                continue;

            TransversalFace tf;
            tf.side = side;
            tf.face = f;
            for (const auto &c : comp) {
                tf.components.push_back(convex_hull(c, d, host.lattice()));
                tf.component_dims.push_back(tf.components.back().dim());
            }
            tf.sum = minkowski_sum(tf.components);
            const Face *sf = nullptr;
            auto ids = ids_in(target, tf.sum.vertices());
            if (!ids.empty())
                sf = target.find_face(ids);
            if (sf == nullptr)
                fail(ErrorCode::InconsistentDuality,
                     "the sum over the transversal face " + describe(f.vertex_ids) + " of the " +
                         std::string(to_string(side)) + " side is not a face of its target");
            tf.sum_face = *sf;
            out.push_back(std::move(tf));
        }
    }
    for (auto &a : out) {
        a.minimal = std::none_of(out.begin(), out.end(), [&](const TransversalFace &b) {
            return &a != &b && b.face.vertex_ids.size() < a.face.vertex_ids.size() &&
                   std::includes(a.face.vertex_ids.begin(), a.face.vertex_ids.end(),
                                 b.face.vertex_ids.begin(), b.face.vertex_ids.end());
        });
    }
    return out;
}

std::size_t SigmaFaces::find(Side side, const std::vector<std::size_t> &vertex_ids) const {
    const auto &fs = faces(side);
    for (std::size_t i = 0; i < fs.size(); ++i)
        if (fs[i].face.vertex_ids == vertex_ids)
            return i;
    return npos;
}

SigmaFaces adjoint_pairs(const NefPartitionData &data) {
    SigmaFaces out;
    out.s_faces = transversal_faces(data, Side::NablaCheck);
    out.t_faces = transversal_faces(data, Side::DeltaCheck);
    const Integer r(static_cast<unsigned long>(data.r()));

    std::vector<int> used(out.s_faces.size(), 0);
    for (std::size_t ti = 0; ti < out.t_faces.size(); ++ti) {
        const TransversalFace &t = out.t_faces[ti];
        const Face &s_face = dual_face(data.nabla, t.sum_face, data.nabla_check());
        std::size_t si = out.find(Side::NablaCheck, s_face.vertex_ids);
        if (si == SigmaFaces::npos)
            fail(ErrorCode::InconsistentDuality, "the face " + describe(s_face.vertex_ids) +
                                                     " dual to the sum of t-face " +
                                                     describe(t.face.vertex_ids) +
                                                     " is not transversal");
        const TransversalFace &s = out.s_faces[si];
        if (s.sum.dim() + t.sum.dim() != data.n())
            fail(ErrorCode::InconsistentDuality,
                 "adjoint faces " + describe(s.face.vertex_ids) + " and " +
                     describe(t.face.vertex_ids) + " have dimensions " +
                     std::to_string(s.sum.dim()) + " + " + std::to_string(t.sum.dim()));
        for (const auto &x : s.sum.vertices())
            for (const auto &y : t.sum.vertices())
                if (dot(std::span<const Rational>(x), std::span<const Rational>(y)) != r)
                    fail(ErrorCode::InconsistentDuality,
                         "pairing " + to_string(x) + " . " + to_string(y) + " is not r");
        ++used[si];
        out.pairs.push_back(AdjointPair{si, ti});
    }
    for (std::size_t si = 0; si < used.size(); ++si)
        if (used[si] != 1)
            fail(ErrorCode::InconsistentDuality,
                 "transversal face " + describe(out.s_faces[si].face.vertex_ids) + " has " +
                     std::to_string(used[si]) + " adjoint faces");
    std::sort(out.pairs.begin(), out.pairs.end(), [](const AdjointPair &a, const AdjointPair &b) {
        return std::pair(a.s, a.t) < std::pair(b.s, b.t);
    });
    return out;
}

CayleySubdivision trivial_subdivision(const TransversalFace &f) {
    CayleySubdivision sub;
    sub.side = f.side;
    sub.face = f.face.vertex_ids;
    SubdivisionCell cell;
    for (const auto &c : f.components) {
        PointList pts;
        for (const auto &v : c.vertices())
            pts.push_back(to_integer(v));
        cell.parts.push_back(std::move(pts));
    }
    sub.cells.push_back(std::move(cell));
    return sub;
}

void validate_subdivision(const NefPartitionData &data, const TransversalFace &f,
                          const CayleySubdivision &sub) {
    const std::string where = "subdivision of " + std::string(to_string(f.side)) + " face " +
                              describe(f.face.vertex_ids);
    if (sub.side != f.side || sub.face != f.face.vertex_ids)
        fail(ErrorCode::InvalidSubdivision, where + ": target face mismatch");
    if (sub.cells.empty())
        fail(ErrorCode::InvalidSubdivision, where + ": no cells");

    const Polytope &host = host_of(data, f.side);
    const auto d = static_cast<std::size_t>(data.d());
    std::vector<Polytope> hulls;
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
        const auto &cell = sub.cells[c];
        const std::string which = where + ", cell " + std::to_string(c);
        if (cell.parts.size() != data.r())
            fail(ErrorCode::InvalidSubdivision, which + ": wrong number of parts");
        std::vector<RationalPoint> all;
        for (std::size_t i = 0; i < cell.parts.size(); ++i) {
            if (cell.parts[i].empty())
                fail(ErrorCode::InvalidSubdivision, which + ": empty part");
            for (const auto &p : cell.parts[i]) {
                if (p.size() != d)
                    fail(ErrorCode::InvalidSubdivision, which + ": point of wrong dimension");
                RationalPoint x = to_rational(p);
                if (!f.components[i].contains(x))
                    fail(ErrorCode::InvalidSubdivision,
                         which + ": point " + to_string(p) + " is not in part " +
                             std::to_string(i + 1) + " of the face");
                all.push_back(std::move(x));
            }
        }
        hulls.push_back(convex_hull(all, data.d(), host.lattice()));
    }
    check_tiling(face_polytope(host, f.face), hulls, where);
}

std::vector<std::vector<std::size_t>> SigmaComplex::cofacets() const {
    std::vector<std::vector<std::size_t>> out(cells.size());
    for (auto c : top)
        for (auto f : cells[c].facets)
            out[f].push_back(c);
    return out;
}

SigmaComplex sigma_cells(const NefPartitionData &data, const SigmaFaces &faces,
                         const std::vector<CayleySubdivision> &S,
                         const std::vector<CayleySubdivision> &T) {
    std::map<std::vector<std::size_t>, CayleySubdivision> s_subs, t_subs;
    for (const auto &[list, side, subs] :
         {std::tuple(&S, Side::NablaCheck, &s_subs), std::tuple(&T, Side::DeltaCheck, &t_subs)}) {
        for (const auto &sub : *list) {
            if (sub.side != side)
                fail(ErrorCode::InvalidSubdivision, "subdivision handed to the wrong side");
            std::size_t idx = faces.find(side, sub.face);
            if (idx == SigmaFaces::npos)
                fail(ErrorCode::InvalidSubdivision,
                     "subdivided face " + describe(sub.face) + " is not transversal");
            validate_subdivision(data, faces.faces(side)[idx], sub);
            if (!subs->emplace(sub.face, sub).second)
                fail(ErrorCode::InvalidSubdivision, "face " + describe(sub.face) +
                                                        " subdivided twice");
        }
    }

    const int d = data.d();
    const std::size_t r = data.r();
    const Polytope &nc = data.nabla_check();
    const Polytope &dc = data.delta_check;

    auto carrier = [&](Side side, const std::vector<PointList> &parts) {
        const Polytope &host = side == Side::NablaCheck ? nc : dc;
        std::vector<std::size_t> sat;
        for (std::size_t j = 0; j < host.facets().size(); ++j) {
            bool all = true;
            for (const auto &part : parts)
                for (const auto &p : part)
                    if (all && !host.facets()[j].saturated_by(to_rational(p)))
                        all = false;
            if (all)
                sat.push_back(j);
        }
        return faces.find(side, host.vertices_on(sat));
    };

    std::map<CellKey, std::size_t> index;
    std::vector<SigmaCell> cells;
    std::vector<std::size_t> top;

    for (const auto &pair : faces.pairs) {
        const TransversalFace &s = faces.s_faces[pair.s];
        const TransversalFace &t = faces.t_faces[pair.t];
        CayleySubdivision s_triv = trivial_subdivision(s), t_triv = trivial_subdivision(t);
        const CayleySubdivision &ss = lookup(s_subs, s.face.vertex_ids, s_triv);
        const CayleySubdivision &ts = lookup(t_subs, t.face.vertex_ids, t_triv);

        std::vector<std::vector<CellFace>> t_dec;
        for (const auto &tau : ts.cells)
            t_dec.push_back(decompose(tau, d, dc.lattice()));

        for (const auto &sigma : ss.cells) {
            std::vector<CellFace> sf = decompose(sigma, d, nc.lattice());
            for (const auto &tf : t_dec) {
                std::vector<std::size_t> ids(sf.size() * tf.size());
                std::vector<bool> fresh(ids.size(), false);
                for (std::size_t a = 0; a < sf.size(); ++a) {
                    for (std::size_t b = 0; b < tf.size(); ++b) {
                        CellKey key{sf[a].parts, tf[b].parts};
                        auto [it, inserted] = index.emplace(std::move(key), cells.size());
                        ids[a * tf.size() + b] = it->second;
                        if (!inserted)
                            continue;
                        fresh[a * tf.size() + b] = true;
                        SigmaCell c;
                        c.sigma = sf[a].parts;
                        c.tau = tf[b].parts;
                        c.sigma_dims = sf[a].part_dims;
                        c.tau_dims = tf[b].part_dims;
                        c.dim_sigma = sf[a].dim;
                        c.dim_tau = tf[b].dim;
                        c.dim = c.dim_sigma + c.dim_tau;
                        for (std::size_t i = 0; i < r; ++i)
                            if (c.sigma_dims[i] * c.tau_dims[i] != 0)
                                c.smooth = false;
                        c.sigma_delta_vertices = sf[a].vertices;
                        c.tau_nabla_vertices = tf[b].vertices;
                        c.s_face = carrier(Side::NablaCheck, c.sigma);
                        c.t_face = carrier(Side::DeltaCheck, c.tau);
                        cells.push_back(std::move(c));
                    }
                }
                for (std::size_t a = 0; a < sf.size(); ++a) {
                    for (std::size_t b = 0; b < tf.size(); ++b) {
                        if (!fresh[a * tf.size() + b])
                            continue;
                        auto &facets = cells[ids[a * tf.size() + b]].facets;
                        for (auto a2 : sf[a].facets)
                            facets.push_back(ids[a2 * tf.size() + b]);
                        for (auto b2 : tf[b].facets)
                            facets.push_back(ids[a * tf.size() + b2]);
                    }
                }
                top.push_back(ids[(sf.size() - 1) * tf.size() + tf.size() - 1]);
            }
        }
    }

    // Canonical order: by dimension, then by (sigma, tau).
    std::vector<std::size_t> order(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (cells[a].dim != cells[b].dim)
            return cells[a].dim < cells[b].dim;
        if (cells[a].sigma != cells[b].sigma)
            return cells[a].sigma < cells[b].sigma;
        return cells[a].tau < cells[b].tau;
    });
    std::vector<std::size_t> rank(cells.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank[order[i]] = i;

    SigmaComplex out;
    out.n = data.n();
    out.r = r;
    out.cells.reserve(cells.size());
    for (auto i : order) {
        SigmaCell c = std::move(cells[i]);
        for (auto &f : c.facets)
            f = rank[f];
        std::sort(c.facets.begin(), c.facets.end());
        RationalPoint bary;
        for (const auto *vs : {&c.sigma_delta_vertices, &c.tau_nabla_vertices}) {
            RationalPoint avg(static_cast<std::size_t>(d), Rational(0));
            for (const auto &v : *vs)
                for (std::size_t x = 0; x < avg.size(); ++x)
                    avg[x] += v[x];
            for (auto &x : avg)
                x /= static_cast<long>(vs->size());
            bary.insert(bary.end(), avg.begin(), avg.end());
        }
        c.barycenter = std::move(bary);
        out.cells.push_back(std::move(c));
    }
    for (auto t : top)
        out.top.push_back(rank[t]);
    std::sort(out.top.begin(), out.top.end());
    out.top.erase(std::unique(out.top.begin(), out.top.end()), out.top.end());
    return out;
}

void check_pseudomanifold(const SigmaComplex &sigma) {
    for (auto t : sigma.top)
        if (sigma.cells[t].dim != sigma.n)
            fail(ErrorCode::NotAComplex, "a top cell has dimension " +
                                             std::to_string(sigma.cells[t].dim) + " instead of " +
                                             std::to_string(sigma.n));
    auto co = sigma.cofacets();
    for (std::size_t c = 0; c < sigma.cells.size(); ++c)
        if (sigma.cells[c].dim == sigma.n - 1 && co[c].size() != 2)
            fail(ErrorCode::NotAComplex, "cell " + std::to_string(c) + " of dimension " +
                                             std::to_string(sigma.n - 1) + " lies in " +
                                             std::to_string(co[c].size()) + " top cells");
}

long sigma_euler(const SigmaComplex &sigma) {
    check_pseudomanifold(sigma);
    long chi = 0;
    for (const auto &c : sigma.cells)
        chi += (c.dim % 2 == 0) ? 1 : -1;
    return chi;
}

} // namespace nefdisc
