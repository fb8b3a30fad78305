#include "nefdisc/discriminant.hpp"
#include "nefdisc/error.hpp"

#include <gtest/gtest.h>

using namespace nefdisc;

namespace {

DiscriminantGraph path_graph(std::vector<VertexKind> kinds, bool cycle) {
    DiscriminantGraph g;
    g.n = 3;
    for (auto k : kinds) {
        DiscriminantVertex v;
        v.kind = k;
        g.vertices.push_back(v);
    }
    for (std::size_t i = 0; i + 1 < kinds.size(); ++i)
        g.edges.push_back(DiscriminantEdge{i, i + 1, i, i});
    if (cycle)
        g.edges.push_back(DiscriminantEdge{0, kinds.size() - 1, kinds.size(), kinds.size()});
    return g;
}

CayleySubdivision unimodular(int k) {
    CayleySubdivision sub;
    auto p = [](int x, int y) { return IntVector{Integer(x), Integer(y)}; };
    for (int x = 0; x < k; ++x)
        for (int y = 0; x + y < k; ++y) {
            sub.cells.push_back(SubdivisionCell{{{p(x, y), p(x + 1, y), p(x, y + 1)}}});
            if (x + y + 2 <= k)
                sub.cells.push_back(
                    SubdivisionCell{{{p(x + 1, y), p(x, y + 1), p(x + 1, y + 1)}}});
        }
    return sub;
}

Polytope triangle(int k) {
    std::vector<IntVector> pts{{Integer(0), Integer(0)}, {Integer(k), Integer(0)},
                               {Integer(0), Integer(k)}};
    return convex_hull(pts, 2);
}

} // namespace

TEST(Discriminant, SmoothPath) {
    auto g = path_graph({VertexKind::Negative, VertexKind::Bivalent, VertexKind::Positive}, false);
    auto s = smooth_bivalent(g);
    ASSERT_EQ(s.vertices.size(), 2u);
    ASSERT_EQ(s.edges.size(), 1u);
    EXPECT_EQ(s.edges[0].a, 0u);
    EXPECT_EQ(s.edges[0].b, 1u);
    EXPECT_EQ(graph_euler(s), graph_euler(g));
    EXPECT_EQ(graph_euler(g), 0);
}

TEST(Discriminant, BivalentCycleBecomesLoop) {
    auto g = path_graph({VertexKind::Bivalent, VertexKind::Bivalent, VertexKind::Bivalent}, true);
    auto s = smooth_bivalent(g);
    EXPECT_TRUE(s.vertices.empty());
    EXPECT_TRUE(s.edges.empty());
    EXPECT_EQ(s.closed_loops, 1u);
}

TEST(Discriminant, EmptyGraph) {
    DiscriminantGraph g;
    g.n = 3;
    EXPECT_EQ(graph_euler(smooth_bivalent(classify_vertices(g))), 0);
}

TEST(Discriminant, SignedNeedsThreefold) {
    DiscriminantGraph g;
    g.n = 2;
    try {
        classify_vertices(g);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::UnsupportedDimension);
    }
}

TEST(Tropical, UnitTriangle) {
    auto g = tropical_dual_graph(triangle(1), unimodular(1));
    EXPECT_EQ(g.nodes.size(), 1u);
    EXPECT_EQ(g.rays.size(), 3u);
    EXPECT_EQ(g.loops, 0u);
}

TEST(Tropical, LoopsCountInteriorPoints) {
    for (int k = 1; k <= 6; ++k) {
        Polytope t = triangle(k);
        auto g = tropical_dual_graph(t, unimodular(k));
        EXPECT_EQ(g.nodes.size(), static_cast<std::size_t>(k * k));
        std::size_t interior = 0;
        for (const auto &p : lattice_points(t))
            interior += t.contains_in_relative_interior(to_rational(p.coords));
        EXPECT_EQ(g.loops, interior) << "k=" << k;
        EXPECT_EQ(g.rays.size(), static_cast<std::size_t>(3 * k));
    }
    auto quintic = tropical_dual_graph(triangle(5), unimodular(5));
    EXPECT_EQ(quintic.nodes.size(), 25u);
    EXPECT_EQ(quintic.loops, 6u);
}

TEST(Tropical, RejectsOverlap) {
    auto sub = unimodular(2);
    sub.cells.pop_back();
    EXPECT_THROW(tropical_dual_graph(triangle(2), sub), Error);
}
