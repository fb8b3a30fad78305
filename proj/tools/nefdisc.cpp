#include "nefdisc/error.hpp"
#include "nefdisc/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace nefdisc;

namespace {

struct Options {
    std::string input;
    std::string output;
    std::string format = "json";
    std::string degrees;
    int ambient = -1;
    std::string parts;
    std::string subdivisions;
    std::string dot;
    std::string kind = "positive";
    std::string face;
    std::string side = "delta_check";
    std::string polygon;
    std::string plot_format = "svg";
};

std::vector<int> int_list(const std::string &s, char sep = ',') {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, sep)) {
        if (tok.empty())
            continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception &) {
            fail(ErrorCode::MalformedInput, "not an integer list: " + s);
        }
    }
    return out;
}

std::vector<std::size_t> id_list(const std::string &s) {
    std::vector<std::size_t> out;
    for (int x : int_list(s)) {
        if (x < 0)
            fail(ErrorCode::MalformedInput, "ids must be nonnegative: " + s);
        out.push_back(static_cast<std::size_t>(x));
    }
    return out;
}

void write(const Options &o, const std::string &text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out)
        fail(ErrorCode::MalformedInput, "cannot write " + o.output);
    out << text;
}

void write_json(const Options &o, const Json &j) { write(o, j.dump(2) + "\n"); }

// --degrees, or a partition document, or a polytope document plus --parts.
NefPartition load_partition(const Options &o) {
    if (!o.degrees.empty()) {
        auto degrees = int_list(o.degrees);
        int sum = 0;
        for (int d : degrees)
            sum += d;
        if (o.ambient >= 0 && o.ambient != sum - 1)
            fail(ErrorCode::InvalidPartition, "degrees must add up to ambient + 1");
        return projective_partition(degrees);
    }
    if (o.input.empty())
        fail(ErrorCode::EmptyInput, "need --input or --degrees");
    Json j = read_json_file(o.input);
    if (!o.parts.empty()) {
        std::vector<std::vector<std::size_t>> parts;
        std::stringstream ss(o.parts);
        std::string group;
        while (std::getline(ss, group, ';'))
            parts.push_back(id_list(group));
        return make_partition(polytope_from_json(j.contains("polytope") ? j.at("polytope") : j),
                              std::move(parts));
    }
    return partition_from_json(j);
}

void load_subdivisions(const Options &o, std::vector<CayleySubdivision> &S,
                       std::vector<CayleySubdivision> &T) {
    if (o.subdivisions.empty())
        return;
    for (auto &sub : subdivisions_from_json(read_json_file(o.subdivisions)))
        (sub.side == Side::NablaCheck ? S : T).push_back(std::move(sub));
}

int cmd_dual(const Options &o) {
    if (o.input.empty())
        fail(ErrorCode::EmptyInput, "need --input");
    Json j = read_json_file(o.input);
    write_json(o, polytope_to_json(polar_dual(polytope_from_json(j.contains("polytope") ? j.at("polytope") : j))));
    return 0;
}

int cmd_nefcheck(const Options &o) {
    NefPartition np = load_partition(o);
    write_json(o, nef_report(build_nef_data(np), is_irreducible(np)));
    return 0;
}

int cmd_mirror(const Options &o) {
    NefPartitionData m = mirror(build_nef_data(load_partition(o)));
    write_json(o, partition_to_json(m.partition));
    return 0;
}

int cmd_sigma(const Options &o) {
    NefPartitionData data = build_nef_data(load_partition(o));
    std::vector<CayleySubdivision> S, T;
    load_subdivisions(o, S, T);
    SigmaFaces faces = adjoint_pairs(data);
    SigmaComplex sigma = sigma_cells(data, faces, S, T);
    write_json(o, sigma_report(data, faces, sigma));
    return 0;
}

int cmd_discriminant(const Options &o) {
    NefPartitionData data = build_nef_data(load_partition(o));
    std::vector<CayleySubdivision> S, T;
    load_subdivisions(o, S, T);
    SigmaFaces faces = adjoint_pairs(data);
    SigmaComplex sigma = sigma_cells(data, faces, S, T);
    check_pseudomanifold(sigma);
    DiscriminantGraph g = build_discriminant(sigma);
    if (g.n == 3)
        g = smooth_bivalent(classify_vertices(std::move(g)));
    if (!o.dot.empty()) {
        std::ofstream out(o.dot);
        if (!out)
            fail(ErrorCode::MalformedInput, "cannot write " + o.dot);
        out << graph_to_dot(g, &faces);
    }
    if (o.format == "dot") {
        write(o, graph_to_dot(g, &faces));
        return 0;
    }
    Json j = graph_to_json(g);
    std::size_t non_smooth_top = 0;
    for (auto id : sigma.top)
        non_smooth_top += sigma.cells[id].smooth ? 0 : 1;
    j["non_smooth_top_cells"] = non_smooth_top;
    write_json(o, j);
    return 0;
}

int cmd_census(const Options &o) {
    auto degrees = int_list(o.degrees);
    int sum = 0;
    for (int d : degrees)
        sum += d;
    write_json(o, census_to_json(census(make_ci(o.ambient >= 0 ? o.ambient : sum - 1, degrees))));
    return 0;
}

int cmd_monodromy(const Options &o) {
    if (o.input.empty())
        fail(ErrorCode::EmptyInput, "need --input");
    Json j = read_json_file(o.input);
    std::string kind = o.kind;
    if (j.contains("kind") && j.at("kind").is_string())
        kind = j.at("kind").get<std::string>();
    write_json(o, monodromy_to_json(monodromy_check(monodromy_from_json(j), kind_from_string(kind))));
    return 0;
}

int cmd_plot(const Options &o) {
    if (!o.polygon.empty()) {
        Polytope polygon = polytope_from_json(read_json_file(o.polygon));
        auto subs = o.subdivisions.empty()
                        ? std::vector<CayleySubdivision>{}
                        : subdivisions_from_json(read_json_file(o.subdivisions));
        if (subs.size() != 1)
            fail(ErrorCode::MalformedInput, "plot --polygon needs exactly one subdivision");
        PlanarGraph g = tropical_dual_graph(polygon, subs[0]);
        if (o.plot_format == "json")
            write_json(o, planar_graph_to_json(g));
        else
            write(o, planar_graph_svg(polygon, subs[0], g));
        return 0;
    }
    NefPartitionData data = build_nef_data(load_partition(o));
    std::vector<CayleySubdivision> S, T;
    load_subdivisions(o, S, T);
    Side side = side_from_string(o.side);
    auto ids = id_list(o.face);
    std::sort(ids.begin(), ids.end());
    SigmaFaces faces = adjoint_pairs(data);
    std::size_t f = faces.find(side, ids);
    if (f == SigmaFaces::npos)
        fail(ErrorCode::MalformedInput, "face " + o.face + " is not transversal");
    const TransversalFace &tf = faces.faces(side)[f];
    const auto &pool = side == Side::NablaCheck ? S : T;
    CayleySubdivision sub = trivial_subdivision(tf);
    for (const auto &s : pool)
        if (s.face == ids)
            sub = s;
    write(o, subdivision_svg(data, tf, sub));
    return 0;
}

int exit_code(ErrorCode code) {
    switch (code) {
    case ErrorCode::MalformedInput:
    case ErrorCode::EmptyInput:
    case ErrorCode::DimensionMismatch:
        return 2;
    default:
        return 1;
    }
}

void report_error(const std::string &code, const std::string &message) {
    Json j;
    j["error"] = code;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"nefdisc: nef partitions, the complex Sigma and combinatorial discriminants"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App *c) {
        c->add_option("-i,--input", o.input, "input JSON document");
        c->add_option("-o,--output", o.output, "output file (default stdout)");
    };
    auto add_partition = [&](CLI::App *c) {
        c->add_option("--degrees", o.degrees, "projective complete intersection, e.g. 4,2");
        c->add_option("--ambient", o.ambient, "projective dimension N");
        c->add_option("--parts", o.parts, "vertex id groups for a polytope input, e.g. 0,1;2,3");
    };

    auto *dual = app.add_subcommand("dual", "polar dual of a polytope");
    add_io(dual);
    auto *nefcheck = app.add_subcommand("nefcheck", "validate a nef partition and report its polytopes");
    add_io(nefcheck);
    add_partition(nefcheck);
    auto *mir = app.add_subcommand("mirror", "mirror nef partition");
    add_io(mir);
    add_partition(mir);
    auto *sig = app.add_subcommand("sigma", "transversal faces, adjoint pairs and cells of Sigma");
    add_io(sig);
    add_partition(sig);
    sig->add_option("--subdivisions", o.subdivisions, "subdivision JSON");
    auto *disc = app.add_subcommand("discriminant", "combinatorial discriminant graph");
    add_io(disc);
    add_partition(disc);
    disc->add_option("--subdivisions", o.subdivisions, "subdivision JSON");
    disc->add_option("--dot", o.dot, "also write the graph as DOT");
    disc->add_option("--format", o.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    auto *cen = app.add_subcommand("census", "strata and Euler characteristic of P^N[d_1,...,d_r]");
    cen->add_option("-o,--output", o.output, "output file (default stdout)");
    cen->add_option("--degrees", o.degrees, "degrees, e.g. 4,2")->required();
    cen->add_option("--ambient", o.ambient, "projective dimension N");
    auto *mon = app.add_subcommand("monodromy", "check a monodromy triple");
    add_io(mon);
    mon->add_option("--kind", o.kind, "expected vertex kind")
        ->check(CLI::IsMember({"positive", "negative"}));
    auto *plot = app.add_subcommand("plot", "SVG of a subdivided face or a tropical curve");
    add_io(plot);
    add_partition(plot);
    plot->add_option("--subdivisions", o.subdivisions, "subdivision JSON");
    plot->add_option("--face", o.face, "vertex ids of the face");
    plot->add_option("--side", o.side, "nabla_check or delta_check")
        ->check(CLI::IsMember({"nabla_check", "delta_check"}));
    plot->add_option("--polygon", o.polygon, "polygon JSON for a tropical dual graph");
    plot->add_option("--format", o.plot_format, "svg or json")->check(CLI::IsMember({"json", "svg"}));
    for (auto *c : {dual, nefcheck, mir, sig, mon})
        c->add_option("--format", o.format, "json")->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        report_error("MalformedInput", e.what());
        return 2;
    }

    try {
        if (*dual)
            return cmd_dual(o);
        if (*nefcheck)
            return cmd_nefcheck(o);
        if (*mir)
            return cmd_mirror(o);
        if (*sig)
            return cmd_sigma(o);
        if (*disc)
            return cmd_discriminant(o);
        if (*cen)
            return cmd_census(o);
        if (*mon)
            return cmd_monodromy(o);
        return cmd_plot(o);
    } catch (const Error &e) {
        report_error(std::string(to_string(e.code())), e.what());
        return exit_code(e.code());
    } catch (const std::exception &e) {
        report_error("MalformedInput", e.what());
        return 2;
    }
}
