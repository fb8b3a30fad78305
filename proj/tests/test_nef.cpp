#include "nefdisc/error.hpp"
#include "nefdisc/nef_partition.hpp"

#include <gtest/gtest.h>

using namespace nefdisc;

namespace {

RationalPoint pt(std::initializer_list<int> xs) {
    RationalPoint p;
    for (int x : xs)
        p.emplace_back(x);
    return p;
}

bool has_vertex(const Polytope &p, const RationalPoint &v) {
    return std::find(p.vertices().begin(), p.vertices().end(), v) != p.vertices().end();
}

} // namespace

TEST(Nef, P5Degree42) {
    const int deg[] = {4, 2};
    NefPartition np = projective_partition(deg);
    NefPartitionData data = build_nef_data(np);
    EXPECT_EQ(data.n(), 3);
    EXPECT_EQ(data.nabla.vertices().size(), 6u);

    const auto &n1 = data.nabla_parts[0];
    EXPECT_EQ(n1.vertices().size(), 6u);
    for (auto v : {pt({1, 1, 1, 0, 0}), pt({-3, 1, 1, 0, 0}), pt({1, -3, 1, 0, 0}),
                   pt({1, 1, -3, 0, 0}), pt({1, 1, 1, -4, 0}), pt({1, 1, 1, 0, -4})})
        EXPECT_TRUE(has_vertex(n1, v));
    const auto &n2 = data.nabla_parts[1];
    EXPECT_EQ(n2.vertices().size(), 6u);
    for (auto v : {pt({0, 0, 0, 1, 1}), pt({-2, 0, 0, 1, 1}), pt({0, -2, 0, 1, 1}),
                   pt({0, 0, -2, 1, 1}), pt({0, 0, 0, -1, 1}), pt({0, 0, 0, 1, -1})})
        EXPECT_TRUE(has_vertex(n2, v));
    EXPECT_TRUE(n2.contains(pt({0, 0, 0, 0, 0})));

    EXPECT_EQ(data.delta_check.vertices().size(), 12u);
    EXPECT_EQ(data.delta.vertices().size(), 14u);
    EXPECT_TRUE(has_vertex(data.delta, pt({1, 0, 0, 1, 0})));
    EXPECT_TRUE(is_irreducible(np));
}

TEST(Nef, MirrorInvolution) {
    for (std::vector<int> deg : {std::vector<int>{4, 2}, {5}, {3, 3}, {2, 2}}) {
        NefPartitionData data = build_nef_data(projective_partition(deg));
        NefPartitionData m = mirror(data);
        EXPECT_EQ(m.nabla_check(), data.delta_check);
        EXPECT_EQ(m.delta, data.nabla);
        EXPECT_EQ(m.nabla, data.delta);
        NefPartitionData mm = mirror(m);
        EXPECT_EQ(mm.nabla_check(), data.nabla_check());
        EXPECT_EQ(mm.delta_check, data.delta_check);
        EXPECT_EQ(mm.nabla, data.nabla);
        EXPECT_EQ(mm.delta, data.delta);
        EXPECT_EQ(mm.partition.parts, data.partition.parts);
    }
}

TEST(Nef, HypersurfaceCollapses) {
    const int deg[] = {5};
    NefPartitionData data = build_nef_data(projective_partition(deg));
    EXPECT_EQ(data.delta_parts[0], data.nabla_check());
    EXPECT_EQ(data.nabla_parts[0], data.nabla);
    EXPECT_EQ(data.delta, data.nabla_check());
    EXPECT_EQ(data.delta_check, data.nabla);
    EXPECT_TRUE(has_vertex(data.nabla, pt({-4, 1, 1, 1})));
    EXPECT_TRUE(has_vertex(data.nabla, pt({1, 1, 1, 1})));
}

TEST(Nef, ReducibleProduct) {
    std::vector<RationalPoint> pts{pt({1, 0}), pt({-1, 0}), pt({0, 1}), pt({0, -1})};
    Polytope cross = convex_hull(pts, 2);
    std::vector<std::vector<std::size_t>> parts(2);
    for (std::size_t v = 0; v < 4; ++v)
        parts[cross.vertices()[v][0] != 0 ? 0 : 1].push_back(v);
    NefPartition np = make_partition(cross, parts);
    EXPECT_NO_THROW(build_nef_data(np));
    EXPECT_FALSE(is_irreducible(np));
}

TEST(Nef, Errors) {
    std::vector<RationalPoint> pts{pt({2, 0}), pt({-2, 0}), pt({0, 1}), pt({0, -1})};
    Polytope p = convex_hull(pts, 2);
    try {
        build_nef_data(NefPartition{p, {{0, 1, 2, 3}}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotReflexive);
    }
    const int deg[] = {3};
    NefPartition np = projective_partition(deg);
    EXPECT_THROW(make_partition(np.nabla_check, {{0, 1}}), Error);
    EXPECT_THROW(make_partition(np.nabla_check, {{0, 1, 2}, {2}}), Error);

    // {e0, e1} | {e2} on P^2 is fine, but a part missing the origin side is not
    // nef: the square with a single vertex split off.
    std::vector<RationalPoint> sq{pt({1, 1}), pt({1, -1}), pt({-1, 1}), pt({-1, -1})};
    Polytope square = convex_hull(sq, 2);
    try {
        build_nef_data(NefPartition{square, {{0}, {1, 2, 3}}});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::NotNef);
    }
}
