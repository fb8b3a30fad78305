#include "nefdisc/io.hpp"

#include "nefdisc/error.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace nefdisc {
namespace {

std::vector<std::size_t> id_list(const Json &j, const char *what) {
    if (!j.is_array())
        fail(ErrorCode::MalformedInput, std::string(what) + " must be an array of ids");
    std::vector<std::size_t> out;
    for (const auto &x : j) {
        if (!x.is_number_unsigned() && !(x.is_number_integer() && x.get<long long>() >= 0))
            fail(ErrorCode::MalformedInput, std::string(what) + " entries must be nonnegative integers");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

Json ids_to_json(const std::vector<std::size_t> &ids) {
    Json a = Json::array();
    for (auto i : ids)
        a.push_back(i);
    return a;
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorCode::MalformedInput, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

Lattice lattice_from(const Json &j) {
    if (!j.contains("lattice"))
        return Lattice::N;
    const auto &l = j.at("lattice");
    if (l == "N")
        return Lattice::N;
    if (l == "M")
        return Lattice::M;
    fail(ErrorCode::MalformedInput, "lattice must be \"N\" or \"M\"");
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    std::string s = buf;
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

struct Canvas {
    double min_x = 0, min_y = 0, scale = 1, size = 480, margin = 20;

    void fit(const std::vector<std::array<double, 2>> &pts, double sz) {
        size = sz;
        if (pts.empty())
            return;
        double max_x = pts[0][0], max_y = pts[0][1];
        min_x = max_x;
        min_y = max_y;
        for (const auto &p : pts) {
            min_x = std::min(min_x, p[0]);
            min_y = std::min(min_y, p[1]);
            max_x = std::max(max_x, p[0]);
            max_y = std::max(max_y, p[1]);
        }
        double span = std::max(max_x - min_x, max_y - min_y);
        scale = span > 0 ? (size - 2 * margin) / span : 1;
        min_x -= (span - (max_x - min_x)) / 2;
        min_y -= (span - (max_y - min_y)) / 2;
    }
    std::string x(double v) const { return fmt(margin + (v - min_x) * scale); }
    std::string y(double v) const { return fmt(size - margin - (v - min_y) * scale); }
};

std::string svg_open(double size) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(size) + "\" height=\"" +
           fmt(size) + "\" viewBox=\"0 0 " + fmt(size) + " " + fmt(size) + "\">\n";
}

std::array<double, 2> project(const Polytope &frame, const RationalPoint &x) {
    RationalPoint local = frame.local_coordinates(x);
    std::array<double, 2> out{0.0, 0.0};
    for (std::size_t k = 0; k < local.size() && k < 2; ++k)
        out[k] = local[k].get_d();
    return out;
}

// Vertices of a 2-dimensional polytope in boundary order.
std::vector<std::size_t> cyclic_order(const Polytope &p) {
    std::vector<std::size_t> order{0};
    std::vector<bool> used(p.vertices().size(), false);
    used[0] = true;
    while (order.size() < p.vertices().size()) {
        bool extended = false;
        for (const auto &e : p.faces()[1]) {
            std::size_t a = e.vertex_ids[0], b = e.vertex_ids[1];
            if (a == order.back() && !used[b]) {
                order.push_back(b);
                used[b] = extended = true;
                break;
            }
            if (b == order.back() && !used[a]) {
                order.push_back(a);
                used[a] = extended = true;
                break;
            }
        }
        if (!extended)
            break;
    }
    return order;
}

} // namespace

Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::MalformedInput, "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_json(ss.str());
}

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Integer &x) {
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

Json to_json(const Rational &q) {
    if (q.get_den() == 1)
        return to_json(Integer(q.get_num()));
    Json j;
    j["num"] = to_json(Integer(q.get_num()));
    j["den"] = to_json(Integer(q.get_den()));
    return j;
}

Json to_json(std::span<const Integer> v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(to_json(x));
    return a;
}

Json to_json(std::span<const Rational> v) {
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(to_json(x));
    return a;
}

Integer integer_from_json(const Json &j) {
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            fail(ErrorCode::MalformedInput, "not an integer: " + j.get<std::string>());
        return x;
    }
    fail(ErrorCode::MalformedInput, "expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json &j) {
    if (j.is_object()) {
        Integer den = integer_from_json(field(j, "den"));
        if (den == 0)
            fail(ErrorCode::MalformedInput, "zero denominator");
        Rational q(integer_from_json(field(j, "num")), den);
        q.canonicalize();
        return q;
    }
    return Rational(integer_from_json(j));
}

IntVector int_vector_from_json(const Json &j) {
    if (!j.is_array())
        fail(ErrorCode::MalformedInput, "expected an array of integers");
    IntVector v;
    for (const auto &x : j)
        v.push_back(integer_from_json(x));
    return v;
}

RationalPoint rational_point_from_json(const Json &j) {
    if (!j.is_array())
        fail(ErrorCode::MalformedInput, "expected an array of coordinates");
    RationalPoint v;
    for (const auto &x : j)
        v.push_back(rational_from_json(x));
    return v;
}

Json polytope_to_json(const Polytope &p) {
    Json j;
    j["dim"] = p.ambient_dim();
    j["lattice"] = p.lattice() == Lattice::N ? "N" : "M";
    j["polytope_dim"] = p.dim();
    Json vs = Json::array();
    for (const auto &v : p.vertices())
        vs.push_back(to_json(v));
    j["vertices"] = vs;
    Json hs = Json::array();
    for (const auto &h : p.facets()) {
        Json e;
        e["normal"] = to_json(h.normal);
        e["bound"] = to_json(h.bound);
        hs.push_back(e);
    }
    j["inequalities"] = hs;
    if (!p.equations().empty()) {
        Json es = Json::array();
        for (const auto &e : p.equations()) {
            Json x;
            x["normal"] = to_json(e.normal);
            x["value"] = to_json(e.value);
            es.push_back(x);
        }
        j["equations"] = es;
    }
    return j;
}

Polytope polytope_from_json(const Json &j) {
    const Json &dim = field(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1)
        fail(ErrorCode::MalformedInput, "\"dim\" must be a positive integer");
    const int d = dim.get<int>();
    const Lattice lat = lattice_from(j);
    if (j.contains("vertices")) {
        std::vector<RationalPoint> pts;
        for (const auto &v : j.at("vertices"))
            pts.push_back(rational_point_from_json(v));
        return convex_hull(pts, d, lat);
    }
    if (j.contains("inequalities")) {
        std::vector<HalfSpace> hs;
        for (const auto &h : j.at("inequalities"))
            hs.push_back(HalfSpace{int_vector_from_json(field(h, "normal")),
                                   rational_from_json(field(h, "bound"))});
        return halfspace_intersection(hs, d, lat);
    }
    fail(ErrorCode::MalformedInput, "polytope needs \"vertices\" or \"inequalities\"");
}

Json partition_to_json(const NefPartition &np) {
    Json j;
    j["polytope"] = polytope_to_json(np.nabla_check);
    Json parts = Json::array();
    for (const auto &p : np.parts)
        parts.push_back(ids_to_json(p));
    j["parts"] = parts;
    return j;
}

NefPartition partition_from_json(const Json &j) {
    Polytope p = polytope_from_json(field(j, "polytope"));
    std::vector<std::vector<std::size_t>> parts;
    const Json &ps = field(j, "parts");
    if (!ps.is_array())
        fail(ErrorCode::MalformedInput, "\"parts\" must be an array");
    for (const auto &part : ps)
        parts.push_back(id_list(part, "part"));
    return make_partition(std::move(p), std::move(parts));
}

Json subdivision_to_json(const CayleySubdivision &sub) {
    Json j;
    j["side"] = std::string(to_string(sub.side));
    j["face"] = ids_to_json(sub.face);
    Json cells = Json::array();
    for (const auto &c : sub.cells) {
        Json parts = Json::array();
        for (const auto &part : c.parts) {
            Json pts = Json::array();
            for (const auto &p : part)
                pts.push_back(to_json(p));
            parts.push_back(pts);
        }
        Json cell;
        cell["parts"] = parts;
        cells.push_back(cell);
    }
    j["cells"] = cells;
    return j;
}

CayleySubdivision subdivision_from_json(const Json &j) {
    CayleySubdivision sub;
    const Json &side = field(j, "side");
    if (!side.is_string())
        fail(ErrorCode::MalformedInput, "\"side\" must be a string");
    sub.side = side_from_string(side.get<std::string>());
    sub.face = id_list(field(j, "face"), "face");
    std::sort(sub.face.begin(), sub.face.end());
    const Json &cells = field(j, "cells");
    if (!cells.is_array())
        fail(ErrorCode::MalformedInput, "\"cells\" must be an array");
    for (const auto &c : cells) {
        SubdivisionCell cell;
        const Json &parts = field(c, "parts");
        if (!parts.is_array())
            fail(ErrorCode::MalformedInput, "\"parts\" must be an array");
        for (const auto &part : parts) {
            PointList pts;
            if (!part.is_array())
                fail(ErrorCode::MalformedInput, "cell part must be an array of points");
            for (const auto &p : part)
                pts.push_back(int_vector_from_json(p));
            std::sort(pts.begin(), pts.end());
            cell.parts.push_back(std::move(pts));
        }
        sub.cells.push_back(std::move(cell));
    }
    return sub;
}

Json subdivisions_to_json(const std::vector<CayleySubdivision> &subs) {
    Json a = Json::array();
    for (const auto &s : subs)
        a.push_back(subdivision_to_json(s));
    Json j;
    j["subdivisions"] = a;
    return j;
}

std::vector<CayleySubdivision> subdivisions_from_json(const Json &j) {
    std::vector<CayleySubdivision> out;
    if (j.is_object() && j.contains("subdivisions"))
        return subdivisions_from_json(j.at("subdivisions"));
    if (j.is_array()) {
        for (const auto &x : j)
            out.push_back(subdivision_from_json(x));
        return out;
    }
    out.push_back(subdivision_from_json(j));
    return out;
}

Json nef_report(const NefPartitionData &data, bool irreducible) {
    Json j;
    j["reflexive"] = true;
    j["nef"] = true;
    j["irreducible"] = irreducible;
    j["r"] = data.r();
    j["n"] = data.n();
    j["nabla_check"] = polytope_to_json(data.nabla_check());
    Json dp = Json::array(), np = Json::array();
    for (const auto &p : data.delta_parts)
        dp.push_back(polytope_to_json(p));
    for (const auto &p : data.nabla_parts)
        np.push_back(polytope_to_json(p));
    j["delta_parts"] = dp;
    j["nabla_parts"] = np;
    j["nabla"] = polytope_to_json(data.nabla);
    j["delta"] = polytope_to_json(data.delta);
    j["delta_check"] = polytope_to_json(data.delta_check);
    return j;
}

Json sigma_report(const NefPartitionData &data, const SigmaFaces &faces,
                  const SigmaComplex &sigma) {
    Json j;
    j["n"] = data.n();
    j["r"] = data.r();
    auto minimal = [](const std::vector<TransversalFace> &fs) {
        return std::count_if(fs.begin(), fs.end(), [](const TransversalFace &f) { return f.minimal; });
    };
    Json tr;
    tr["nabla_check"] = faces.s_faces.size();
    tr["delta_check"] = faces.t_faces.size();
    tr["minimal_nabla_check"] = minimal(faces.s_faces);
    tr["minimal_delta_check"] = minimal(faces.t_faces);
    j["transversal"] = tr;
    Json pairs = Json::array();
    for (const auto &p : faces.pairs) {
        Json e;
        e["s"] = ids_to_json(faces.s_faces[p.s].face.vertex_ids);
        e["t"] = ids_to_json(faces.t_faces[p.t].face.vertex_ids);
        e["dim_s_delta"] = faces.s_faces[p.s].sum.dim();
        e["dim_t_nabla"] = faces.t_faces[p.t].sum.dim();
        pairs.push_back(e);
    }
    j["adjoint_pairs"] = pairs;
    std::vector<long> by_dim(static_cast<std::size_t>(sigma.n) + 1, 0), non_smooth(by_dim.size(), 0);
    for (const auto &c : sigma.cells) {
        ++by_dim[static_cast<std::size_t>(c.dim)];
        if (!c.smooth)
            ++non_smooth[static_cast<std::size_t>(c.dim)];
    }
    j["cells_by_dim"] = by_dim;
    j["non_smooth_by_dim"] = non_smooth;
    j["euler"] = sigma_euler(sigma);
    return j;
}

Json graph_to_json(const DiscriminantGraph &g) {
    Json j;
    j["n"] = g.n;
    j["classified"] = g.classified;
    auto c = count_kinds(g);
    j["positive"] = c.positive;
    j["negative"] = c.negative;
    j["bivalent"] = c.bivalent;
    j["double_points"] = c.double_points;
    j["unclassified"] = c.unclassified;
    j["euler"] = graph_euler(g);
    j["closed_loops"] = g.closed_loops;
    Json vs = Json::array();
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto &v = g.vertices[i];
        Json x;
        x["id"] = i;
        x["cell"] = v.cell;
        x["kind"] = std::string(to_string(v.kind));
        x["valence"] = v.valence;
        x["dims"] = {v.dim_sigma, v.dim_tau};
        Json fam = Json::array();
        for (auto f : v.families)
            fam.push_back(f + 1);
        x["families"] = fam;
        x["position"] = to_json(v.position);
        vs.push_back(x);
    }
    j["vertices"] = vs;
    Json es = Json::array();
    for (const auto &e : g.edges) {
        Json x;
        x["a"] = e.a;
        x["b"] = e.b;
        x["interface"] = e.interface;
        x["label"] = e.label;
        es.push_back(x);
    }
    j["edges"] = es;
    return j;
}

std::string graph_to_dot(const DiscriminantGraph &g, const SigmaFaces *faces) {
    std::ostringstream out;
    out << "graph discriminant {\n  node [shape=circle, style=filled, fontsize=8];\n";
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto &v = g.vertices[i];
        const char *color = "gray";
        switch (v.kind) {
        case VertexKind::Positive: color = "red"; break;
        case VertexKind::Negative: color = "blue"; break;
        case VertexKind::Bivalent: color = "green"; break;
        case VertexKind::DoublePoint: color = "white"; break;
        case VertexKind::Unclassified: break;
        }
        out << "  v" << i << " [kind=\"" << to_string(v.kind) << "\", dims=\"" << v.dim_sigma
            << "," << v.dim_tau << "\", fillcolor=\"" << color << "\", label=\"\"";
        if (faces != nullptr && v.t_face != SigmaFaces::npos) {
            out << ", face=\"";
            const auto &ids = faces->t_faces[v.t_face].face.vertex_ids;
            for (std::size_t k = 0; k < ids.size(); ++k)
                out << (k ? " " : "") << ids[k];
            out << "\"";
        }
        out << "];\n";
    }
    for (const auto &e : g.edges)
        out << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.label << "\"];\n";
    out << "}\n";
    return out.str();
}

Json planar_graph_to_json(const PlanarGraph &g) {
    Json j;
    Json nodes = Json::array();
    for (const auto &p : g.nodes)
        nodes.push_back(to_json(p));
    j["nodes"] = nodes;
    Json edges = Json::array();
    for (const auto &[a, b] : g.edges)
        edges.push_back({a, b});
    j["edges"] = edges;
    Json rays = Json::array();
    for (const auto &r : g.rays) {
        Json x;
        x["node"] = r.node;
        x["direction"] = to_json(r.direction);
        rays.push_back(x);
    }
    j["rays"] = rays;
    j["loops"] = g.loops;
    return j;
}

Json census_to_json(const CensusReport &rep) {
    Json j;
    j["ambient"] = rep.ci.ambient;
    j["degrees"] = rep.ci.degrees;
    j["n"] = rep.ci.cy_dim();
    j["c_components"] = rep.c_components;
    j["p_components"] = rep.p_components;
    if (rep.ci.cy_dim() == 2)
        j["k3_points"] = to_json(rep.k3_points);
    if (rep.ci.cy_dim() == 3) {
        Json curves = Json::array();
        for (const auto &c : rep.curves) {
            Json x;
            x["group"] = c.group;
            x["degree_product"] = to_json(c.degree_product);
            x["genus"] = to_json(c.genus);
            x["chi"] = to_json(c.chi);
            x["punctures"] = to_json(c.punctures);
            x["chi_punctured"] = to_json(c.chi_punctured);
            curves.push_back(x);
        }
        j["curves"] = curves;
        j["euler"] = to_json(rep.euler_closed_form);
        j["euler_from_strata"] = to_json(rep.euler_from_strata);
    }
    Json strata = Json::array();
    for (const auto &s : rep.strata) {
        Json x;
        x["kind"] = std::string(to_string(s.kind));
        if (s.i)
            x["i"] = s.i;
        if (s.j)
            x["j"] = s.j;
        if (!s.mu.empty())
            x["mu"] = s.mu;
        if (!s.nu.empty())
            x["nu"] = s.nu;
        if (std::any_of(s.alpha.begin(), s.alpha.end(), [](std::size_t a) { return a != 0; }))
            x["alpha"] = s.alpha;
        x["divisors"] = ids_to_json(s.divisors);
        x["nonempty"] = s.nonempty;
        strata.push_back(x);
    }
    j["strata"] = strata;
    return j;
}

std::array<Matrix3, 3> monodromy_from_json(const Json &j) {
    const Json &ms = field(j, "matrices");
    if (!ms.is_array() || ms.size() != 3)
        fail(ErrorCode::MalformedInput, "\"matrices\" must hold three 3x3 matrices");
    std::array<Matrix3, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (!ms[k].is_array() || ms[k].size() != 3)
            fail(ErrorCode::MalformedInput, "each matrix needs three rows");
        for (std::size_t r = 0; r < 3; ++r) {
            IntVector row = int_vector_from_json(ms[k][r]);
            if (row.size() != 3)
                fail(ErrorCode::MalformedInput, "each matrix row needs three entries");
            for (std::size_t c = 0; c < 3; ++c)
                out[k][r][c] = row[c];
        }
    }
    return out;
}

VertexKind kind_from_string(const std::string &s) {
    if (s == "positive")
        return VertexKind::Positive;
    if (s == "negative")
        return VertexKind::Negative;
    fail(ErrorCode::MalformedInput, "vertex kind must be \"positive\" or \"negative\"");
}

Json monodromy_to_json(const MonodromyReport &rep) {
    Json j;
    Json ms = Json::array();
    for (const auto &m : rep.matrices) {
        Json rows = Json::array();
        for (const auto &row : m)
            rows.push_back(to_json(std::span<const Integer>(row)));
        ms.push_back(rows);
    }
    j["matrices"] = ms;
    j["conjugate_to_standard"] = rep.conjugate_to_standard;
    j["fixed_dims"] = rep.fixed_dims;
    j["product_is_identity"] = rep.product_is_identity;
    j["common_fixed_dim"] = rep.common_fixed_dim;
    j["consistent_with"] = std::string(to_string(rep.consistent_with));
    j["expected"] = std::string(to_string(rep.expected));
    j["matches_expected"] = rep.matches_expected;
    return j;
}

std::string subdivision_svg(const NefPartitionData &data, const TransversalFace &face,
                            const CayleySubdivision &sub, const SvgStyle &style) {
    if (face.sum.dim() > 2)
        fail(ErrorCode::UnsupportedDimension, "figures are limited to two-dimensional cells");
    validate_subdivision(data, face, sub);
    const Polytope &frame = face.sum;
    const Lattice lat = frame.lattice();

    struct Piece {
        Polytope cell;
        int cls;
    };
    std::vector<Piece> pieces;
    std::vector<std::array<double, 2>> all;
    for (const auto &c : sub.cells) {
        std::vector<Polytope> comps;
        int first = 0, others = 0;
        for (std::size_t i = 0; i < c.parts.size(); ++i) {
            comps.push_back(convex_hull(std::span<const IntVector>(c.parts[i]), data.d(), lat));
            (i == 0 ? first : others) += comps.back().dim();
        }
        Polytope sum = minkowski_sum(comps);
        int cls = others == 0 ? 0 : (first == 0 ? 1 : 2);
        for (const auto &v : sum.vertices())
            all.push_back(project(frame, v));
        pieces.push_back(Piece{std::move(sum), cls});
    }
    Canvas cv;
    cv.fit(all, style.size);
    std::string out = svg_open(style.size);
    for (const auto &p : pieces) {
        const std::string &color = style.class_colors[static_cast<std::size_t>(p.cls)];
        const auto &vs = p.cell.vertices();
        if (p.cell.dim() == 2) {
            out += "  <polygon class=\"c" + std::to_string(p.cls) + "\" points=\"";
            bool first = true;
            for (auto v : cyclic_order(p.cell)) {
                auto q = project(frame, vs[v]);
                out += (first ? "" : " ") + cv.x(q[0]) + "," + cv.y(q[1]);
                first = false;
            }
            out += "\" fill=\"" + color + "\" fill-opacity=\"0.5\" stroke=\"black\"/>\n";
        } else if (p.cell.dim() == 1) {
            auto a = project(frame, vs.front()), b = project(frame, vs.back());
            out += "  <line class=\"c" + std::to_string(p.cls) + "\" x1=\"" + cv.x(a[0]) +
                   "\" y1=\"" + cv.y(a[1]) + "\" x2=\"" + cv.x(b[0]) + "\" y2=\"" + cv.y(b[1]) +
                   "\" stroke=\"" + color + "\" stroke-width=\"6\"/>\n";
        } else {
            auto a = project(frame, vs.front());
            out += "  <circle class=\"c" + std::to_string(p.cls) + "\" cx=\"" + cv.x(a[0]) +
                   "\" cy=\"" + cv.y(a[1]) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
        }
    }
    return out + "</svg>\n";
}

std::string planar_graph_svg(const Polytope &polygon, const CayleySubdivision &sub,
                             const PlanarGraph &g, const SvgStyle &style) {
    if (polygon.dim() != 2)
        fail(ErrorCode::UnsupportedDimension, "planar figures need a polygon");
    std::vector<std::array<double, 2>> all;
    for (const auto &v : polygon.vertices())
        all.push_back(project(polygon, v));
    Canvas cv;
    cv.fit(all, style.size);
    std::string out = svg_open(style.size);
    for (const auto &c : sub.cells) {
        Polytope cell = convex_hull(std::span<const IntVector>(c.parts.at(0)),
                                    polygon.ambient_dim(), polygon.lattice());
        out += "  <polygon points=\"";
        bool first = true;
        for (auto v : cyclic_order(cell)) {
            auto q = project(polygon, cell.vertices()[v]);
            out += (first ? "" : " ") + cv.x(q[0]) + "," + cv.y(q[1]);
            first = false;
        }
        out += "\" fill=\"none\" stroke=\"#999999\"/>\n";
    }
    auto node = [&](std::size_t i) { return project(polygon, g.nodes[i]); };
    for (const auto &[a, b] : g.edges) {
        auto p = node(a), q = node(b);
        out += "  <line x1=\"" + cv.x(p[0]) + "\" y1=\"" + cv.y(p[1]) + "\" x2=\"" + cv.x(q[0]) +
               "\" y2=\"" + cv.y(q[1]) + "\" stroke=\"" + style.class_colors[0] +
               "\" stroke-width=\"2\"/>\n";
    }
    for (const auto &r : g.rays) {
        auto p = node(r.node);
        RationalPoint dir = to_rational(r.direction);
        auto d = project(polygon, add(g.nodes[r.node], dir));
        double len = std::hypot(d[0] - p[0], d[1] - p[1]);
        double ex = p[0] + (d[0] - p[0]) / (len > 0 ? len : 1) * 0.6;
        double ey = p[1] + (d[1] - p[1]) / (len > 0 ? len : 1) * 0.6;
        out += "  <line x1=\"" + cv.x(p[0]) + "\" y1=\"" + cv.y(p[1]) + "\" x2=\"" + cv.x(ex) +
               "\" y2=\"" + cv.y(ey) + "\" stroke=\"" + style.class_colors[1] +
               "\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        auto p = node(i);
        out += "  <circle cx=\"" + cv.x(p[0]) + "\" cy=\"" + cv.y(p[1]) + "\" r=\"3\" fill=\"" +
               style.class_colors[2] + "\"/>\n";
    }
    return out + "</svg>\n";
}

} // namespace nefdisc
