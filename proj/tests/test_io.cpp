#include "nefdisc/error.hpp"
#include "nefdisc/io.hpp"

#include <gtest/gtest.h>

using namespace nefdisc;

namespace {

NefPartitionData projective(std::vector<int> deg) { return build_nef_data(projective_partition(deg)); }

ErrorCode code_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error";
    return ErrorCode::EmptyInput;
}

} // namespace

TEST(Io, NumbersRoundTrip) {
    Integer big("123456789012345678901234567890");
    EXPECT_TRUE(to_json(big).is_string());
    EXPECT_EQ(integer_from_json(to_json(big)), big);
    EXPECT_EQ(to_json(Integer(-7)), Json(-7));
    Rational q(-3, 4);
    EXPECT_EQ(to_json(q).dump(), R"({"num":-3,"den":4})");
    EXPECT_EQ(rational_from_json(to_json(q)), q);
    EXPECT_EQ(rational_from_json(Json::parse(R"({"num":2,"den":4})")), Rational(1, 2));
}

TEST(Io, PolytopeRoundTrip) {
    NefPartitionData data = projective({4, 2});
    for (const Polytope *p : {&data.nabla, &data.delta_check, &data.nabla_parts[1]}) {
        Json j = polytope_to_json(*p);
        Polytope back = polytope_from_json(parse_json(j.dump()));
        EXPECT_EQ(back, *p);
        EXPECT_EQ(back.lattice(), p->lattice());
        EXPECT_EQ(polytope_to_json(back), j);
    }
    Json h = Json::parse(R"({"dim":2,"inequalities":[{"normal":[1,0],"bound":1},{"normal":[-1,0],"bound":1},
                           {"normal":[0,1],"bound":1},{"normal":[0,-1],"bound":1}]})");
    EXPECT_EQ(polytope_from_json(h).vertices().size(), 4u);
}

TEST(Io, PartitionAndSubdivisionRoundTrip) {
    NefPartitionData data = projective({3, 2});
    Json j = partition_to_json(data.partition);
    NefPartition back = partition_from_json(parse_json(j.dump()));
    EXPECT_EQ(back.parts, data.partition.parts);
    EXPECT_EQ(back.nabla_check, data.nabla_check());

    SigmaFaces faces = adjoint_pairs(data);
    std::vector<CayleySubdivision> subs;
    for (const auto &t : faces.t_faces)
        subs.push_back(trivial_subdivision(t));
    auto again = subdivisions_from_json(parse_json(subdivisions_to_json(subs).dump()));
    EXPECT_EQ(again, subs);
    EXPECT_EQ(subdivisions_from_json(subdivision_to_json(subs[0])).size(), 1u);
    EXPECT_EQ(subdivisions_from_json(subdivisions_to_json(subs).at("subdivisions")).size(), subs.size());
}

TEST(Io, Malformed) {
    EXPECT_EQ(code_of([] { parse_json("{not json"); }), ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { read_json_file("/nonexistent/file.json"); }), ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { polytope_from_json(Json::parse(R"({"vertices":[[1]]})")); }),
              ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { integer_from_json(Json::parse("1.5")); }), ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { subdivision_from_json(Json::parse(R"({"side":"up","face":[],"cells":[]})")); }),
              ErrorCode::MalformedInput);
    EXPECT_EQ(code_of([] { monodromy_from_json(Json::parse(R"({"matrices":[]})")); }),
              ErrorCode::MalformedInput);
}

TEST(Io, GraphDocuments) {
    DiscriminantGraph empty;
    empty.n = 3;
    Json j = graph_to_json(empty);
    EXPECT_EQ(j["euler"], 0);
    EXPECT_EQ(graph_to_dot(empty), "graph discriminant {\n  node [shape=circle, style=filled, fontsize=8];\n}\n");

    PlanarGraph none;
    std::vector<IntVector> corners = {{0, 0}, {1, 0}, {0, 1}};
    Polytope tri = convex_hull(std::span<const IntVector>(corners), 2);
    CayleySubdivision sub;
    sub.face = {0, 1, 2};
    sub.cells.push_back(SubdivisionCell{{PointList(corners.begin(), corners.end())}});
    PlanarGraph g = tropical_dual_graph(tri, sub);
    std::string svg = planar_graph_svg(tri, sub, g);
    EXPECT_EQ(svg.rfind("<svg", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(planar_graph_to_json(g)["rays"].size(), 3u);
}

TEST(Io, SubdivisionFigure) {
    NefPartitionData data = projective({4, 2});
    SigmaFaces faces = adjoint_pairs(data);
    for (const auto &t : faces.t_faces) {
        if (t.sum.dim() != 1 || t.face.vertex_ids.size() != 4)
            continue;
        std::string svg = subdivision_svg(data, t, trivial_subdivision(t));
        EXPECT_NE(svg.find("<line"), std::string::npos);
        EXPECT_EQ(svg, subdivision_svg(data, t, trivial_subdivision(t)));
        break;
    }
    for (const auto &t : faces.t_faces)
        if (t.sum.dim() == 3) {
            EXPECT_EQ(code_of([&] { subdivision_svg(data, t, trivial_subdivision(t)); }),
                      ErrorCode::UnsupportedDimension);
            break;
        }
}

TEST(Io, Reports) {
    NefPartitionData data = projective({4, 2});
    Json nef = nef_report(data, true);
    EXPECT_EQ(nef["n"], 3);
    EXPECT_EQ(nef["nabla"]["vertices"].size(), 6u);
    Json c = census_to_json(census(make_ci(5, {4, 2})));
    EXPECT_EQ(c["euler"], -176);
    EXPECT_EQ(c, parse_json(c.dump()));
}
