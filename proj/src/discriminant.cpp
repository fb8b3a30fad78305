#include "nefdisc/discriminant.hpp"

#include "nefdisc/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace nefdisc {
namespace {

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent[std::max(a, b)] = std::min(a, b);
    }
};

void recount_valence(DiscriminantGraph &g) {
    for (auto &v : g.vertices)
        v.valence = 0;
    for (const auto &e : g.edges) {
        ++g.vertices[e.a].valence;
        ++g.vertices[e.b].valence;
    }
}

// Edges meeting at a degree-two vertex (bivalent or double point) carry the
// same monodromy; label each chain by its first edge.
void relabel(DiscriminantGraph &g) {
    UnionFind uf(g.edges.size());
    std::vector<std::vector<std::size_t>> incident(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        incident[g.edges[e].a].push_back(e);
        incident[g.edges[e].b].push_back(e);
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto k = g.vertices[v].kind;
        if ((k == VertexKind::Bivalent || k == VertexKind::DoublePoint) && incident[v].size() == 2)
            uf.unite(incident[v][0], incident[v][1]);
    }
    std::map<std::size_t, std::size_t> ids;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        auto root = uf.find(e);
        auto it = ids.emplace(root, ids.size()).first;
        g.edges[e].label = it->second;
    }
}

} // namespace

std::string_view to_string(VertexKind kind) {
    switch (kind) {
    case VertexKind::Unclassified: return "unclassified";
    case VertexKind::Positive: return "positive";
    case VertexKind::Negative: return "negative";
    case VertexKind::Bivalent: return "bivalent";
    case VertexKind::DoublePoint: return "double_point";
    }
    return "unclassified";
}

DiscriminantGraph build_discriminant(const SigmaComplex &sigma) {
    DiscriminantGraph g;
    g.n = sigma.n;
    std::vector<std::size_t> vertex_of(sigma.cells.size(), SigmaFaces::npos);
    for (std::size_t c = 0; c < sigma.cells.size(); ++c) {
        const SigmaCell &cell = sigma.cells[c];
        if (cell.smooth || (cell.dim != sigma.n && cell.dim != sigma.n - 1))
            continue;
        DiscriminantVertex v;
        v.cell = c;
        v.position = cell.barycenter;
        v.dim_sigma = cell.dim_sigma;
        v.dim_tau = cell.dim_tau;
        v.cell_dim = cell.dim;
        for (std::size_t i = 0; i < sigma.r; ++i)
            if (cell.sigma_dims[i] * cell.tau_dims[i] != 0)
                v.families.push_back(i);
        v.s_face = cell.s_face;
        v.t_face = cell.t_face;
        vertex_of[c] = g.vertices.size();
        g.vertices.push_back(std::move(v));
    }
    for (auto t : sigma.top) {
        if (vertex_of[t] == SigmaFaces::npos)
            continue;
        for (auto f : sigma.cells[t].facets)
            if (vertex_of[f] != SigmaFaces::npos)
                g.edges.push_back(DiscriminantEdge{vertex_of[f], vertex_of[t], f, 0});
    }
    std::sort(g.edges.begin(), g.edges.end(), [](const DiscriminantEdge &x, const DiscriminantEdge &y) {
        return std::pair(x.a, x.b) < std::pair(y.a, y.b);
    });
    recount_valence(g);
    relabel(g);
    return g;
}

DiscriminantGraph classify_vertices(DiscriminantGraph g) {
    if (g.n != 3)
        fail(ErrorCode::UnsupportedDimension, "vertex signs are defined for threefolds only (n = " +
                                                  std::to_string(g.n) + ")");
    for (auto &v : g.vertices) {
        if (v.cell_dim == g.n - 1) {
            if (v.valence != 2)
                fail(ErrorCode::UnclassifiableCell,
                     "interface cell " + std::to_string(v.cell) + " has valence " +
                         std::to_string(v.valence));
            v.kind = VertexKind::DoublePoint;
        } else if (v.valence == 2) {
            v.kind = VertexKind::Bivalent;
        } else if (v.valence == 3 && v.dim_sigma == 1 && v.dim_tau == 2) {
            v.kind = VertexKind::Negative;
        } else if (v.valence == 3 && v.dim_sigma == 2 && v.dim_tau == 1) {
            v.kind = VertexKind::Positive;
        } else {
            fail(ErrorCode::UnclassifiableCell,
                 "cell " + std::to_string(v.cell) + " with dimensions (" +
                     std::to_string(v.dim_sigma) + "," + std::to_string(v.dim_tau) +
                     ") has valence " + std::to_string(v.valence));
        }
    }
    g.classified = true;
    relabel(g);
    return g;
}

DiscriminantGraph smooth_bivalent(DiscriminantGraph g) {
    std::vector<bool> alive_edge(g.edges.size(), true);
    std::vector<bool> alive_vertex(g.vertices.size(), true);
    std::vector<std::vector<std::size_t>> incident(g.vertices.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        incident[g.edges[e].a].push_back(e);
        incident[g.edges[e].b].push_back(e);
    }
    auto drop = [&](std::size_t v, std::size_t e) {
        auto &lst = incident[v];
        lst.erase(std::find(lst.begin(), lst.end(), e));
    };

    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        if (g.vertices[v].kind != VertexKind::Bivalent || incident[v].size() != 2)
            continue;
        const std::size_t e1 = incident[v][0], e2 = incident[v][1];
        alive_vertex[v] = false;
        incident[v].clear();
        if (e1 == e2) {
            alive_edge[e1] = false;
            ++g.closed_loops;
            continue;
        }
        auto other = [&](std::size_t e) { return g.edges[e].a == v ? g.edges[e].b : g.edges[e].a; };
        const std::size_t a = other(e1), b = other(e2);
        drop(a, e1);
        drop(b, e2);
        alive_edge[e1] = alive_edge[e2] = false;
        DiscriminantEdge joined{std::min(a, b), std::max(a, b), g.edges[e1].interface,
                                g.edges[e1].label};
        g.edges.push_back(joined);
        alive_edge.push_back(true);
        incident[a].push_back(g.edges.size() - 1);
        incident[b].push_back(g.edges.size() - 1);
    }

    DiscriminantGraph out;
    out.n = g.n;
    out.classified = g.classified;
    out.closed_loops = g.closed_loops;
    std::vector<std::size_t> remap(g.vertices.size(), SigmaFaces::npos);
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (alive_vertex[v]) {
            remap[v] = out.vertices.size();
            out.vertices.push_back(g.vertices[v]);
        }
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (alive_edge[e]) {
            DiscriminantEdge ed = g.edges[e];
            ed.a = remap[ed.a];
            ed.b = remap[ed.b];
            if (ed.a > ed.b)
                std::swap(ed.a, ed.b);
            out.edges.push_back(ed);
        }
    std::sort(out.edges.begin(), out.edges.end(),
              [](const DiscriminantEdge &x, const DiscriminantEdge &y) {
                  return std::tuple(x.a, x.b, x.interface) < std::tuple(y.a, y.b, y.interface);
              });
    recount_valence(out);
    return out;
}

long graph_euler(const DiscriminantGraph &g) {
    auto c = count_kinds(g);
    return static_cast<long>(c.positive) - static_cast<long>(c.negative);
}

DiscriminantCounts count_kinds(const DiscriminantGraph &g) {
    DiscriminantCounts c;
    for (const auto &v : g.vertices) {
        switch (v.kind) {
        case VertexKind::Positive: ++c.positive; break;
        case VertexKind::Negative: ++c.negative; break;
        case VertexKind::Bivalent: ++c.bivalent; break;
        case VertexKind::DoublePoint: ++c.double_points; break;
        case VertexKind::Unclassified: ++c.unclassified; break;
        }
    }
    return c;
}

PlanarGraph tropical_dual_graph(const Polytope &polygon, const CayleySubdivision &sub) {
    if (polygon.dim() != 2)
        fail(ErrorCode::UnsupportedDimension, "tropical dual graphs need a polygon");
    std::vector<Polytope> cells;
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
        if (sub.cells[c].parts.size() != 1)
            fail(ErrorCode::InvalidSubdivision, "polygon cells must have a single part");
        cells.push_back(convex_hull(std::span<const IntVector>(sub.cells[c].parts[0]),
                                    polygon.ambient_dim(), polygon.lattice()));
    }
    check_tiling(polygon, cells, "polygon subdivision");

    PlanarGraph g;
    std::map<std::vector<RationalPoint>, std::vector<std::size_t>> sides;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        g.nodes.push_back(vertex_barycenter(cells[c]));
        for (const auto &e : cells[c].faces()[1]) {
            std::vector<RationalPoint> key;
            for (auto v : e.vertex_ids)
                key.push_back(cells[c].vertices()[v]);
            sides[key].push_back(c);
        }
    }
    UnionFind uf(cells.size());
    for (const auto &[key, owners] : sides) {
        if (owners.size() == 2) {
            g.edges.emplace_back(owners[0], owners[1]);
            uf.unite(owners[0], owners[1]);
            continue;
        }
        for (const auto &h : polygon.facets())
            if (h.saturated_by(key[0]) && h.saturated_by(key[1]))
                g.rays.push_back(PlanarGraph::Ray{owners[0], h.normal});
    }
    std::size_t components = 0;
    for (std::size_t c = 0; c < cells.size(); ++c)
        components += uf.find(c) == c;
    g.loops = g.edges.size() + components - g.nodes.size();
    return g;
}

} // namespace nefdisc
