#include "nefdisc/error.hpp"
#include "nefdisc/sigma_complex.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace nefdisc;

namespace {

NefPartitionData projective(std::vector<int> deg) {
    return build_nef_data(projective_partition(deg));
}

std::size_t count_minimal(const std::vector<TransversalFace> &fs) {
    return static_cast<std::size_t>(
        std::count_if(fs.begin(), fs.end(), [](const TransversalFace &f) { return f.minimal; }));
}

} // namespace

TEST(Sigma, TransversalCountsP5) {
    NefPartitionData data = projective({4, 2});
    SigmaFaces faces = adjoint_pairs(data);
    EXPECT_EQ(count_minimal(faces.s_faces), 8u);
    EXPECT_EQ(count_minimal(faces.t_faces), 6u);
    for (const auto &f : faces.s_faces)
        if (f.minimal) {
            EXPECT_EQ(f.face.dim, 1);
            EXPECT_EQ(f.sum.dim(), 0);
        }
    EXPECT_EQ(faces.s_faces.size(), 44u);
    EXPECT_EQ(faces.t_faces.size(), 44u);
    EXPECT_EQ(faces.pairs.size(), 44u);

    std::set<std::vector<std::size_t>> transverse;
    for (const auto &t : faces.t_faces)
        if (t.sum.dim() == 2)
            transverse.insert(t.sum_face.vertex_ids);
    EXPECT_EQ(data.nabla.faces()[2].size(), 20u);
    EXPECT_EQ(transverse.size(), 16u);

    std::size_t edges = 0;
    for (const auto &t : faces.t_faces)
        edges += t.sum.dim() == 1;
    EXPECT_EQ(edges, 14u);
}

TEST(Sigma, AdjointContravariance) {
    NefPartitionData data = projective({4, 2});
    SigmaFaces faces = adjoint_pairs(data);
    std::vector<std::size_t> adj(faces.s_faces.size());
    for (const auto &p : faces.pairs)
        adj[p.s] = p.t;
    for (std::size_t a = 0; a < faces.s_faces.size(); ++a)
        for (std::size_t b = 0; b < faces.s_faces.size(); ++b) {
            const auto &sa = faces.s_faces[a].face.vertex_ids;
            const auto &sb = faces.s_faces[b].face.vertex_ids;
            if (!std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()))
                continue;
            const auto &ta = faces.t_faces[adj[a]].face.vertex_ids;
            const auto &tb = faces.t_faces[adj[b]].face.vertex_ids;
            EXPECT_TRUE(std::includes(ta.begin(), ta.end(), tb.begin(), tb.end()));
        }
}

TEST(Sigma, HypersurfaceEveryFaceTransversal) {
    NefPartitionData data = projective({5});
    auto fs = transversal_faces(data, Side::NablaCheck);
    std::size_t proper = 0;
    for (int k = 0; k < data.nabla_check().dim(); ++k)
        proper += data.nabla_check().faces()[k].size();
    EXPECT_EQ(fs.size(), proper);
    for (const auto &f : fs)
        EXPECT_EQ(f.sum_face.vertex_ids, f.face.vertex_ids);
}

TEST(Sigma, TrivialSubdivisionEuler) {
    for (std::vector<int> deg : {std::vector<int>{3}, {2, 2}, {4}, {3, 2}, {2, 2, 2}, {5}, {4, 2}}) {
        NefPartitionData data = projective(deg);
        SigmaFaces faces = adjoint_pairs(data);
        SigmaComplex sigma = sigma_cells(data, faces, {}, {});
        long expect = 1 + (data.n() % 2 == 0 ? 1 : -1);
        EXPECT_EQ(sigma_euler(sigma), expect) << "degrees size " << deg.size();
        for (const auto &c : sigma.cells) {
            if (!c.smooth) {
                EXPECT_GE(c.dim_sigma, 1);
                EXPECT_GE(c.dim_tau, 1);
            }
        }
    }
}

TEST(Sigma, RejectsBadSubdivision) {
    NefPartitionData data = projective({3});
    SigmaFaces faces = adjoint_pairs(data);
    std::size_t edge = 0;
    while (faces.t_faces[edge].face.dim != 1)
        ++edge;
    CayleySubdivision sub = trivial_subdivision(faces.t_faces[edge]);
    sub.cells.push_back(sub.cells.front());
    try {
        sigma_cells(data, faces, {}, {sub});
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidSubdivision);
    }
}
