// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "nefdisc/error.hpp"
#include "nefdisc/io.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using namespace nefdisc;

namespace {

const std::string fixtures = NEFDISC_FIXTURE_DIR;

struct Check {
    std::ostringstream why;
    bool ok = true;
    void expect(bool cond, const std::string &what) {
        if (!cond) {
            if (!ok)
                why << "; ";
            why << what;
            ok = false;
        }
    }
};

RationalPoint pt(std::initializer_list<int> xs) {
    RationalPoint p;
    for (int x : xs)
        p.emplace_back(x);
    return p;
}

std::set<RationalPoint> vertex_set(const Polytope &p, bool drop_origin = false) {
    std::set<RationalPoint> s(p.vertices().begin(), p.vertices().end());
    if (drop_origin)
        s.erase(RationalPoint(static_cast<std::size_t>(p.ambient_dim()), Rational(0)));
    return s;
}

std::set<RationalPoint> point_set(std::initializer_list<RationalPoint> pts) { return {pts}; }

bool euler_relation(const Polytope &p) {
    long chi = 0;
    for (std::size_t k = 0; k < p.faces().size(); ++k)
        chi += (k % 2 ? -1 : 1) * static_cast<long>(p.faces()[k].size());
    return chi == 1;
}

NefPartitionData p5_42() {
    const int deg[] = {4, 2};
    return build_nef_data(projective_partition(deg));
}

const std::vector<std::string> bundled = {"p2_3",   "p3_2_2", "p3_4",   "p4_3_2",   "p5_2_2_2",
                                          "p4_5",   "p5_4_2", "p5_3_3", "p6_3_2_2", "p7_2_2_2_2"};

struct Instance {
    NefPartitionData data;
    SigmaFaces faces;
    SigmaComplex sigma;
};

Instance load(const std::string &name) {
    NefPartition np = partition_from_json(read_json_file(fixtures + "/" + name + ".partition.json"));
    NefPartitionData data = build_nef_data(np);
    std::vector<CayleySubdivision> S, T;
    for (auto &s : subdivisions_from_json(read_json_file(fixtures + "/" + name + ".subdivisions.json")))
        (s.side == Side::NablaCheck ? S : T).push_back(std::move(s));
    SigmaFaces faces = adjoint_pairs(data);
    SigmaComplex sigma = sigma_cells(data, faces, S, T);
    return {std::move(data), std::move(faces), std::move(sigma)};
}

std::vector<int> degrees_of(const std::string &name) {
    std::vector<int> out;
    std::stringstream ss(name.substr(name.find('_') + 1));
    std::string tok;
    while (std::getline(ss, tok, '_'))
        out.push_back(std::stoi(tok));
    return out;
}

void criterion1(Check &c) {
    Polytope nc = p5_42().nabla_check();
    Polytope nabla = polar_dual(nc);
    c.expect(vertex_set(nabla) == point_set({pt({1, 1, 1, 1, 1}), pt({-5, 1, 1, 1, 1}),
                                             pt({1, -5, 1, 1, 1}), pt({1, 1, -5, 1, 1}),
                                             pt({1, 1, 1, -5, 1}), pt({1, 1, 1, 1, -5})}),
             "nabla vertices differ");
    c.expect(nabla.is_lattice_polytope() && nabla.contains_in_relative_interior(pt({0, 0, 0, 0, 0})),
             "nabla not a lattice polytope around 0");
}

void criterion2(Check &c) {
    NefPartitionData data = p5_42();
    c.expect(vertex_set(data.nabla_parts[0], true) ==
                 point_set({pt({1, 1, 1, 0, 0}), pt({-3, 1, 1, 0, 0}), pt({1, -3, 1, 0, 0}),
                            pt({1, 1, -3, 0, 0}), pt({1, 1, 1, -4, 0}), pt({1, 1, 1, 0, -4})}),
             "nabla(1) vertices differ");
    c.expect(vertex_set(data.nabla_parts[1], true) ==
                 point_set({pt({0, 0, 0, 1, 1}), pt({-2, 0, 0, 1, 1}), pt({0, -2, 0, 1, 1}),
                            pt({0, 0, -2, 1, 1}), pt({0, 0, 0, -1, 1}), pt({0, 0, 0, 1, -1})}),
             "nabla(2) vertices differ");
    c.expect(data.nabla_parts[1].contains(pt({0, 0, 0, 0, 0})), "0 not in nabla(2)");
    Polytope sum = minkowski_sum(data.nabla_parts[0], data.nabla_parts[1]);
    c.expect(sum.vertices() == polar_dual(data.nabla_check()).vertices(),
             "nabla(1) + nabla(2) differs from the dual");
}

void criterion3(Check &c) {
    for (std::vector<int> d : {std::vector<int>{4}, {3, 2}, {2, 2, 2}}) {
        int sum = 0;
        for (int x : d)
            sum += x;
        c.expect(k3_singular_count(make_ci(sum - 1, d)) == 24, "K3 count differs");
    }
}

void criterion4(Check &c) {
    const std::vector<std::pair<std::vector<int>, int>> table = {
        {{5}, -200}, {{4, 2}, -176}, {{3, 3}, -144}, {{3, 2, 2}, -144}, {{2, 2, 2, 2}, -128}};
    for (const auto &[d, chi] : table) {
        int sum = 0;
        for (int x : d)
            sum += x;
        c.expect(threefold_euler(make_ci(sum - 1, d)) == chi, "threefold Euler differs");
    }
}

void criterion5(Check &c) {
    Instance in = load("p5_4_2");
    check_pseudomanifold(in.sigma);
    DiscriminantGraph g = smooth_bivalent(classify_vertices(build_discriminant(in.sigma)));
    auto counts = count_kinds(g);
    c.expect(counts.negative == 208, "negative = " + std::to_string(counts.negative));
    c.expect(counts.positive == 32, "positive = " + std::to_string(counts.positive));
    c.expect(counts.unclassified == 0, "unclassified vertices remain");
    c.expect(graph_euler(g) == -176, "graph Euler = " + std::to_string(graph_euler(g)));
}

void criterion6(Check &c) {
    int compared = 0;
    for (const auto &name : bundled) {
        Instance in = load(name);
        if (in.data.n() != 3)
            continue;
        DiscriminantGraph g = smooth_bivalent(classify_vertices(build_discriminant(in.sigma)));
        auto d = degrees_of(name);
        int sum = 0;
        for (int x : d)
            sum += x;
        Integer chi = threefold_euler(make_ci(sum - 1, d));
        c.expect(chi == graph_euler(g), name + ": graph " + std::to_string(graph_euler(g)) +
                                            " vs census " + chi.get_str());
        ++compared;
    }
    c.expect(compared == 5, "expected five threefold instances");
}

void criterion7(Check &c) {
    NefPartitionData data = p5_42();
    SigmaFaces faces = adjoint_pairs(data);
    auto minimal = [](const std::vector<TransversalFace> &fs) {
        return std::count_if(fs.begin(), fs.end(), [](const TransversalFace &f) { return f.minimal; });
    };
    c.expect(minimal(faces.s_faces) == 8, "minimal nabla_check faces != 8");
    c.expect(minimal(faces.t_faces) == 6, "minimal delta_check faces != 6");
    std::set<std::vector<std::size_t>> transverse;
    for (const auto &t : faces.t_faces)
        if (t.sum.dim() == 2)
            transverse.insert(t.sum_face.vertex_ids);
    std::size_t triangles = 0;
    for (const auto &f : data.nabla.faces()[2])
        triangles += f.vertex_ids.size() == 3;
    c.expect(triangles == 20, "nabla has " + std::to_string(triangles) + " triangles");
    c.expect(transverse.size() == 16, std::to_string(transverse.size()) + " transverse triangles");
}

Matrix3 product(const Matrix3 &a, const Matrix3 &b) {
    Matrix3 m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            m[i][j] = 0;
            for (int k = 0; k < 3; ++k)
                m[i][j] += a[i][k] * b[k][j];
        }
    return m;
}

void criterion8(Check &c) {
    Matrix3 id{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            id[i][j] = i == j ? 1 : 0;
    for (auto [file, kind, fixed] : {std::tuple{"monodromy_positive.json", VertexKind::Positive, 2},
                                     std::tuple{"monodromy_negative.json", VertexKind::Negative, 1}}) {
        auto triple = monodromy_from_json(read_json_file(fixtures + "/" + file));
        c.expect(product(product(triple[0], triple[1]), triple[2]) == id, std::string(file) + ": product");
        for (const auto &m : triple) {
            Matrix3 n = m;
            RationalMatrix rows;
            for (int i = 0; i < 3; ++i) {
                n[i][i] -= 1;
                rows.push_back(to_rational(std::span<const Integer>(n[i])));
            }
            Matrix3 n2 = product(n, n);
            bool zero = true;
            for (const auto &row : n2)
                for (const auto &x : row)
                    zero = zero && x == 0;
            c.expect(zero, std::string(file) + ": (M-I)^2 != 0");
            c.expect(rank(rows, 3) == 1, std::string(file) + ": rank(M-I) != 1");
        }
        MonodromyReport rep = monodromy_check(triple, kind);
        c.expect(rep.common_fixed_dim == fixed, std::string(file) + ": common fixed dim " +
                                                    std::to_string(rep.common_fixed_dim));
        c.expect(rep.matches_expected, std::string(file) + ": kind mismatch");
    }
}

// Carathéodory oracle: x lies in conv(pts) iff it lies in a simplex spanned by
// at most dim+1 affinely independent points.
bool in_hull_oracle(const std::vector<RationalPoint> &pts, const RationalPoint &x) {
    const std::size_t d = x.size(), m = pts.size();
    bool found = false;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (found)
            return;
        if (!chosen.empty()) {
            // barycentric coordinates: [p_i - p_0] lambda = x - p_0
            const std::size_t k = chosen.size() - 1;
            RationalMatrix a(d, RationalPoint(k + 1));
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < k; ++c)
                    a[r][c] = pts[chosen[c + 1]][r] - pts[chosen[0]][r];
                a[r][k] = x[r] - pts[chosen[0]][r];
            }
            Echelon e = rref(a, k + 1);
            bool independent = e.pivots.size() <= k || e.pivots.back() != k;
            std::size_t rank_a = 0;
            for (auto p : e.pivots)
                rank_a += p < k;
            if (rank_a == k && independent) {
                Rational rest = 1;
                bool nonneg = true;
                for (std::size_t i = 0; i < e.pivots.size(); ++i) {
                    const Rational &l = e.rows[i][k];
                    nonneg = nonneg && l >= 0;
                    rest -= l;
                }
                if (nonneg && rest >= 0) {
                    found = true;
                    return;
                }
            }
            if (rank_a < k || chosen.size() == d + 1)
                return;
        }
        for (std::size_t i = start; i < m; ++i) {
            chosen.push_back(i);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return found;
}

IntVector random_unimodular_image(const IntVector &v, const std::vector<std::vector<long>> &u) {
    IntVector out(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            out[i] += u[i][j] * v[j];
    return out;
}

// Product of random elementary matrices.
std::vector<std::vector<long>> random_unimodular(int d, std::mt19937 &rng) {
    std::vector<std::vector<long>> u(d, std::vector<long>(d, 0));
    for (int i = 0; i < d; ++i)
        u[i][i] = 1;
    std::uniform_int_distribution<int> idx(0, d - 1), coef(-2, 2);
    for (int step = 0; step < 2 * d; ++step) {
        int i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        long c = coef(rng);
        for (int k = 0; k < d; ++k)
            u[i][k] += c * u[j][k];
    }
    return u;
}

void criterion9(Check &c) {
    std::mt19937 rng(20261017);
    std::size_t euler_checked = 0;
    auto euler = [&](const Polytope &p, const std::string &what) {
        c.expect(euler_relation(p), what + ": Euler relation fails");
        ++euler_checked;
    };

    // polar-dual involution on random reflexive polytopes
    int reflexive = 0, tries = 0;
    while (reflexive < 60 && tries < 5000) {
        ++tries;
        int d = 2 + static_cast<int>(rng() % 3);
        std::uniform_int_distribution<int> coord(-1, 1);
        std::vector<IntVector> pts;
        for (int i = 0; i < d + 2 + static_cast<int>(rng() % 5); ++i) {
            IntVector v(static_cast<std::size_t>(d));
            for (auto &x : v)
                x = coord(rng);
            pts.push_back(v);
        }
        auto u = random_unimodular(d, rng);
        for (auto &v : pts)
            v = random_unimodular_image(v, u);
        Polytope p = convex_hull(std::span<const IntVector>(pts), d);
        if (!p.full_dimensional() || !p.contains_in_relative_interior(RationalPoint(d, Rational(0))) ||
            !is_reflexive(p))
            continue;
        ++reflexive;
        Polytope dual = polar_dual(p);
        Polytope back = polar_dual(dual);
        c.expect(back == p, "polar dual is not an involution");
        c.expect(dual.vertices().size() == p.facets().size(), "dual vertex/facet count mismatch");
        euler(p, "reflexive");
        euler(dual, "reflexive dual");
    }
    c.expect(reflexive >= 50, "only " + std::to_string(reflexive) + " reflexive samples");

    // hull against the convex-combination oracle
    for (int run = 0; run < 120; ++run) {
        int d = 1 + run % 3;
        std::uniform_int_distribution<int> coord(-3, 3);
        std::vector<RationalPoint> pts;
        for (int i = 0; i < d + 1 + static_cast<int>(rng() % 6); ++i) {
            RationalPoint v(static_cast<std::size_t>(d));
            for (auto &x : v)
                x = coord(rng);
            pts.push_back(v);
        }
        Polytope hull = convex_hull(pts, d);
        euler(hull, "random hull");
        std::set<RationalPoint> verts(hull.vertices().begin(), hull.vertices().end());
        for (std::size_t i = 0; i < pts.size(); ++i) {
            std::vector<RationalPoint> others;
            for (std::size_t j = 0; j < pts.size(); ++j)
                if (pts[j] != pts[i])
                    others.push_back(pts[j]);
            bool redundant = !others.empty() && in_hull_oracle(others, pts[i]);
            c.expect(redundant != (verts.count(pts[i]) > 0), "vertex status disagrees with oracle");
        }
        for (int probe = 0; probe < 5; ++probe) {
            RationalPoint x(static_cast<std::size_t>(d));
            for (auto &v : x)
                v = Rational(coord(rng) * 2 + 1, 2);
            c.expect(hull.contains(x) == in_hull_oracle(pts, x), "membership disagrees with oracle");
        }
    }

    for (const auto &name : bundled) {
        Instance in = load(name);
        const NefPartitionData &dd = in.data;
        for (const Polytope *p : {&dd.nabla_check(), &dd.nabla, &dd.delta, &dd.delta_check})
            euler(*p, name);
        for (const auto &p : in.data.nabla_parts)
            euler(p, name);
        for (const auto &p : in.data.delta_parts)
            euler(p, name);

        NefPartitionData m = mirror(in.data);
        NefPartitionData mm = mirror(m);
        c.expect(m.nabla_check() == in.data.delta_check && m.delta == in.data.nabla,
                 name + ": mirror does not swap the polytopes");
        c.expect(mm.nabla_check() == in.data.nabla_check() &&
                     mm.partition.parts == in.data.partition.parts,
                 name + ": mirror is not an involution");

        long expected = 1 + (in.data.n() % 2 ? -1 : 1);
        long chi = sigma_euler(in.sigma);
        c.expect(chi == expected, name + ": Sigma Euler " + std::to_string(chi));
    }
    c.expect(euler_checked > 0, "no polytopes checked");
}

} // namespace

int main() {
    const std::vector<std::tuple<int, std::string, std::function<void(Check &)>, double>> criteria = {
        {1, "polar dual of the P5 simplex", criterion1, 1000},
        {2, "Minkowski decomposition of nabla", criterion2, 1000},
        {3, "K3 singular fibre count", criterion3, 1},
        {4, "threefold Euler table", criterion4, 5},
        {5, "P5[4,2] discriminant 208/32/-176", criterion5, 30000},
        {6, "graph Euler equals census Euler", criterion6, 120000},
        {7, "transversal face counts for P5[4,2]", criterion7, 10000},
        {8, "monodromy triples", criterion8, 1000},
        {9, "property suites", criterion9, 300000},
    };
    bool all = true;
    for (const auto &[id, name, run, limit_ms] : criteria) {
        Check c;
        auto start = std::chrono::steady_clock::now();
        try {
            run(c);
        } catch (const std::exception &e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        c.expect(ms <= limit_ms, "took " + std::to_string(ms) + " ms, limit " + std::to_string(limit_ms));
        all = all && c.ok;
        std::cout << (c.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << name << " ("
                  << static_cast<long>(ms) << " ms)";
        if (!c.ok)
            std::cout << " - " << c.why.str();
        std::cout << "\n";
    }
    return all ? 0 : 1;
}
