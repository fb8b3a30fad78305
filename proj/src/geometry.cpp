#include "nefdisc/geometry.hpp"

#include "bitset.hpp"
#include "nefdisc/cone.hpp"
#include "nefdisc/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nefdisc {
namespace {

using detail::Bitset;

IntVector sign_normalized(IntVector v) {
    auto lead = std::find_if(v.begin(), v.end(), [](const Integer &x) { return x != 0; });
    if (lead != v.end() && *lead < 0)
        for (auto &x : v)
            x = -x;
    return v;
}

std::vector<std::vector<Face>> build_faces(std::size_t nv, const std::vector<Bitset> &incidence,
                                           int dim) {
    std::vector<std::vector<Face>> faces(static_cast<std::size_t>(dim) + 1);
    auto saturated = [&](const Bitset &f) {
        std::vector<std::size_t> sat;
        for (std::size_t j = 0; j < incidence.size(); ++j)
            if (f.subset_of(incidence[j]))
                sat.push_back(j);
        return sat;
    };

    Bitset all(nv);
    for (std::size_t v = 0; v < nv; ++v)
        all.set(v);
    std::set<Bitset> level{all};
    for (int d = dim; d >= 0; --d) {
        for (const auto &f : level)
            faces[static_cast<std::size_t>(d)].push_back(Face{f.ids(), d, saturated(f)});
        if (d == 0)
            break;
        std::set<Bitset> next;
        for (const auto &f : level) {
            std::vector<Bitset> cands;
            for (const auto &inc : incidence) {
                if (f.subset_of(inc))
                    continue;
                Bitset c = f & inc;
                if (c.any())
                    cands.push_back(std::move(c));
            }
            std::sort(cands.begin(), cands.end());
            cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
            for (std::size_t i = 0; i < cands.size(); ++i) {
                bool maximal = true;
                for (std::size_t j = 0; j < cands.size() && maximal; ++j)
                    if (j != i && cands[i].subset_of(cands[j]))
                        maximal = false;
                if (maximal)
                    next.insert(cands[i]);
            }
        }
        level = std::move(next);
    }
    for (auto &lvl : faces)
        std::sort(lvl.begin(), lvl.end(),
                  [](const Face &a, const Face &b) { return a.vertex_ids < b.vertex_ids; });
    return faces;
}

} // namespace

const Face *Polytope::find_face(std::span<const std::size_t> ids) const {
    std::vector<std::size_t> key(ids.begin(), ids.end());
    for (const auto &lvl : faces_) {
        auto it = std::lower_bound(lvl.begin(), lvl.end(), key,
                                   [](const Face &f, const std::vector<std::size_t> &k) {
                                       return f.vertex_ids < k;
                                   });
        if (it != lvl.end() && it->vertex_ids == key)
            return &*it;
    }
    return nullptr;
}

RationalPoint Polytope::local_coordinates(std::span<const Rational> x) const {
    RationalPoint out;
    out.reserve(pivots_.size());
    for (auto p : pivots_)
        out.push_back(x[p]);
    return out;
}

bool Polytope::contains(std::span<const Rational> x) const {
    if (x.size() != static_cast<std::size_t>(ambient_dim_))
        fail(ErrorCode::DimensionMismatch, "point of wrong dimension");
    for (const auto &e : equations_)
        if (dot(e.normal, x) != e.value)
            return false;
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const HalfSpace &h) { return h.contains(x); });
}

bool Polytope::contains_in_relative_interior(std::span<const Rational> x) const {
    for (const auto &e : equations_)
        if (dot(e.normal, x) != e.value)
            return false;
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const HalfSpace &h) { return dot(h.normal, x) < h.bound; });
}

bool Polytope::is_lattice_polytope() const {
    return std::all_of(vertices_.begin(), vertices_.end(),
                       [](const RationalPoint &v) { return is_integral(v); });
}

std::vector<std::size_t> Polytope::vertices_on(std::span<const std::size_t> facet_ids) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        bool on = std::all_of(facet_ids.begin(), facet_ids.end(), [&](std::size_t f) {
            return facets_[f].saturated_by(vertices_[v]);
        });
        if (on)
            out.push_back(v);
    }
    return out;
}

Polytope convex_hull(std::span<const RationalPoint> input, int ambient_dim, Lattice lattice) {
    if (input.empty())
        fail(ErrorCode::EmptyInput, "convex hull of an empty point set");
    const auto d = static_cast<std::size_t>(ambient_dim);
    for (const auto &p : input)
        if (p.size() != d)
            fail(ErrorCode::DimensionMismatch,
                 "point " + to_string(p) + " does not have " + std::to_string(ambient_dim) +
                     " coordinates");

    std::vector<RationalPoint> pts(input.begin(), input.end());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    Polytope poly;
    poly.ambient_dim_ = ambient_dim;
    poly.lattice_ = lattice;
    poly.span_origin_ = pts.front();

    RationalMatrix diffs;
    for (std::size_t i = 1; i < pts.size(); ++i)
        diffs.push_back(sub(pts[i], pts[0]));
    Echelon span = rref(diffs, d);
    poly.pivots_ = span.pivots;
    poly.span_rows_ = span.rows;
    const std::size_t k = span.pivots.size();
    poly.dim_ = static_cast<int>(k);

    for (auto &n : kernel(span.rows, d)) {
        n = sign_normalized(std::move(n));
        Rational value = dot(n, std::span<const Rational>(pts[0]));
        poly.equations_.push_back(Equation{std::move(n), std::move(value)});
    }
    std::sort(poly.equations_.begin(), poly.equations_.end(),
              [](const Equation &a, const Equation &b) { return a.normal < b.normal; });

    if (k == 0) {
        poly.vertices_ = {pts.front()};
        poly.faces_ = {{Face{{0}, 0, {}}}};
        return poly;
    }

    std::vector<RationalPoint> local;
    local.reserve(pts.size());
    for (const auto &p : pts)
        local.push_back(poly.local_coordinates(p));

    std::vector<IntVector> rows;
    rows.reserve(local.size());
    for (const auto &x : local) {
        RationalPoint row(k + 1);
        row[0] = 1;
        for (std::size_t j = 0; j < k; ++j)
            row[j + 1] = -x[j];
        rows.push_back(clear_denominators(row));
    }

    struct LocalFacet {
        IntVector normal; // local coordinates
        Rational bound;
    };
    std::vector<LocalFacet> local_facets;
    for (const auto &ray : cone_generators(rows, k + 1).rays) {
        IntVector a(ray.begin() + 1, ray.end());
        Integer g = gcd(a);
        if (g == 0)
            continue;
        for (auto &x : a)
            x /= g;
        local_facets.push_back(LocalFacet{std::move(a), Rational(ray[0], g)});
    }

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < local.size(); ++i) {
        RationalMatrix tight;
        for (const auto &f : local_facets)
            if (dot(f.normal, std::span<const Rational>(local[i])) == f.bound)
                tight.push_back(to_rational(f.normal));
        if (rank(tight, k) == k)
            keep.push_back(i);
    }
    for (auto i : keep)
        poly.vertices_.push_back(pts[i]);

    for (auto &f : local_facets) {
        IntVector normal(d, Integer(0));
        for (std::size_t j = 0; j < k; ++j)
            normal[poly.pivots_[j]] = f.normal[j];
        f.bound.canonicalize();
        poly.facets_.push_back(HalfSpace{std::move(normal), f.bound});
    }
    std::sort(poly.facets_.begin(), poly.facets_.end(), [](const HalfSpace &a, const HalfSpace &b) {
        if (a.normal != b.normal)
            return a.normal < b.normal;
        return a.bound < b.bound;
    });

    std::vector<Bitset> incidence;
    incidence.reserve(poly.facets_.size());
    for (const auto &f : poly.facets_) {
        Bitset b(poly.vertices_.size());
        for (std::size_t v = 0; v < poly.vertices_.size(); ++v)
            if (f.saturated_by(poly.vertices_[v]))
                b.set(v);
        incidence.push_back(std::move(b));
    }
    poly.faces_ = build_faces(poly.vertices_.size(), incidence, poly.dim_);
    return poly;
}

Polytope convex_hull(std::span<const IntVector> points, int ambient_dim, Lattice lattice) {
    std::vector<RationalPoint> pts;
    pts.reserve(points.size());
    for (const auto &p : points)
        pts.push_back(to_rational(p));
    return convex_hull(pts, ambient_dim, lattice);
}

Polytope polar_dual(const Polytope &p) {
    if (!p.full_dimensional())
        fail(ErrorCode::OriginNotInterior, "polytope is not full-dimensional");
    std::vector<RationalPoint> pts;
    pts.reserve(p.facets().size());
    for (const auto &f : p.facets()) {
        if (f.bound <= 0)
            fail(ErrorCode::OriginNotInterior,
                 "origin is not interior: facet " + to_string(f.normal) + " has bound " +
                     to_string(f.bound));
        pts.push_back(scale(to_rational(f.normal), 1 / f.bound));
    }
    return convex_hull(pts, p.ambient_dim(), opposite(p.lattice()));
}

bool is_reflexive(const Polytope &p) {
    if (!p.full_dimensional() || !p.is_lattice_polytope())
        return false;
    for (const auto &f : p.facets())
        if (f.bound <= 0)
            return false;
    return polar_dual(p).is_lattice_polytope();
}

Polytope minkowski_sum(const Polytope &p, const Polytope &q) {
    if (p.ambient_dim() != q.ambient_dim())
        fail(ErrorCode::DimensionMismatch, "Minkowski sum of polytopes in different ambient spaces");
    std::vector<RationalPoint> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto &a : p.vertices())
        for (const auto &b : q.vertices())
            sums.push_back(add(a, b));
    return convex_hull(sums, p.ambient_dim(), p.lattice());
}

Polytope minkowski_sum(std::span<const Polytope> parts) {
    if (parts.empty())
        fail(ErrorCode::EmptyInput, "Minkowski sum of no polytopes");
    Polytope acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i)
        acc = minkowski_sum(acc, parts[i]);
    return acc;
}

Polytope halfspace_intersection(std::span<const HalfSpace> halfspaces, int ambient_dim,
                                Lattice lattice) {
    const auto d = static_cast<std::size_t>(ambient_dim);
    std::vector<IntVector> rows;
    rows.reserve(halfspaces.size() + 1);
    for (const auto &h : halfspaces) {
        if (h.normal.size() != d)
            fail(ErrorCode::DimensionMismatch, "half-space normal of wrong dimension");
        RationalPoint row(d + 1);
        row[0] = h.bound;
        for (std::size_t j = 0; j < d; ++j)
            row[j + 1] = -h.normal[j];
        rows.push_back(clear_denominators(row));
    }
    IntVector homog(d + 1, Integer(0));
    homog[0] = 1;
    rows.push_back(homog);

    ConeGenerators gens = cone_generators(rows, d + 1);
    std::vector<RationalPoint> pts;
    bool recession = !gens.lineality.empty();
    for (const auto &ray : gens.rays) {
        if (ray[0] == 0) {
            recession = true;
            continue;
        }
        RationalPoint x(d);
        for (std::size_t j = 0; j < d; ++j)
            x[j] = Rational(ray[j + 1], ray[0]);
        pts.push_back(std::move(x));
    }
    if (pts.empty())
        fail(ErrorCode::Empty, "the half-space system is infeasible");
    if (recession)
        fail(ErrorCode::Unbounded, "the half-space system has a nonzero recession cone");
    return convex_hull(pts, ambient_dim, lattice);
}

const std::vector<std::vector<Face>> &face_lattice(const Polytope &p) { return p.faces(); }

std::vector<LatticeVector> lattice_points(const Polytope &p) {
    const std::size_t k = p.pivots_.size();
    const auto d = static_cast<std::size_t>(p.ambient_dim());
    std::vector<Integer> lo(k), hi(k);
    for (std::size_t j = 0; j < k; ++j) {
        Rational mn = p.vertices_[0][p.pivots_[j]], mx = mn;
        for (const auto &v : p.vertices_) {
            mn = std::min(mn, v[p.pivots_[j]]);
            mx = std::max(mx, v[p.pivots_[j]]);
        }
        mpz_cdiv_q(lo[j].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_fdiv_q(hi[j].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
        if (lo[j] > hi[j])
            return {};
    }

    std::vector<LatticeVector> out;
    std::vector<Integer> t = lo;
    while (true) {
        RationalPoint x = p.span_origin_;
        for (std::size_t r = 0; r < k; ++r) {
            Rational c = t[r] - p.span_origin_[p.pivots_[r]];
            if (c != 0)
                for (std::size_t j = 0; j < d; ++j)
                    x[j] += c * p.span_rows_[r][j];
        }
        if (is_integral(x) && p.contains(x))
            out.push_back(LatticeVector{to_integer(x), p.lattice()});

        std::size_t j = 0;
        while (j < k) {
            if (t[j] < hi[j]) {
                ++t[j];
                break;
            }
            t[j] = lo[j];
            ++j;
        }
        if (j == k)
            break;
    }
    std::sort(out.begin(), out.end(),
              [](const LatticeVector &a, const LatticeVector &b) { return a.coords < b.coords; });
    return out;
}

const Face &dual_face(const Polytope &p, const Face &face, const Polytope &dual) {
    std::vector<std::size_t> ids;
    for (std::size_t w = 0; w < dual.vertices().size(); ++w) {
        bool on = std::all_of(face.vertex_ids.begin(), face.vertex_ids.end(), [&](std::size_t v) {
            return dot(std::span<const Rational>(p.vertices()[v]),
                       std::span<const Rational>(dual.vertices()[w])) == 1;
        });
        if (on)
            ids.push_back(w);
    }
    const Face *f = dual.find_face(ids);
    if (f == nullptr)
        fail(ErrorCode::InconsistentDuality, "no dual face for the vertex set " +
                                                 std::to_string(face.vertex_ids.size()) +
                                                 " of a polytope and its claimed dual");
    return *f;
}

std::vector<const Face *> facets_of(const Polytope &p, const Face &face) {
    std::vector<const Face *> out;
    if (face.dim == 0)
        return out;
    for (const auto &g : p.faces()[static_cast<std::size_t>(face.dim - 1)])
        if (std::includes(face.vertex_ids.begin(), face.vertex_ids.end(), g.vertex_ids.begin(),
                          g.vertex_ids.end()))
            out.push_back(&g);
    return out;
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope &p, const Face &face) {
    if (face.dim == 0)
        return {{face.vertex_ids.front()}};
    const std::size_t apex = face.vertex_ids.front();
    std::vector<std::vector<std::size_t>> out;
    for (const Face *g : facets_of(p, face)) {
        if (g->contains_vertex(apex))
            continue;
        for (auto s : pulling_triangulation(p, *g)) {
            s.insert(s.begin(), apex);
            out.push_back(std::move(s));
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> pulling_triangulation(const Polytope &p) {
    return pulling_triangulation(p, p.faces().back().front());
}

Rational span_volume(const Polytope &p) {
    if (p.dim() == 0)
        return 1;
    Rational total = 0;
    for (const auto &s : pulling_triangulation(p)) {
        RationalPoint base = p.local_coordinates(p.vertices()[s[0]]);
        RationalMatrix m;
        for (std::size_t i = 1; i < s.size(); ++i)
            m.push_back(sub(p.local_coordinates(p.vertices()[s[i]]), base));
        total += abs(determinant(std::move(m)));
    }
    return total;
}

void check_tiling(const Polytope &whole, std::span<const Polytope> cells, const std::string &what) {
    if (cells.empty())
        fail(ErrorCode::InvalidSubdivision, what + ": no cells");
    Rational volume = 0;
    std::map<std::vector<RationalPoint>, std::pair<int, bool>> facet_count;
    for (std::size_t c = 0; c < cells.size(); ++c) {
        const Polytope &cell = cells[c];
        const std::string which = what + ", cell " + std::to_string(c);
        for (const auto &v : cell.vertices())
            if (!whole.contains(v))
                fail(ErrorCode::InvalidSubdivision, which + ": vertex " + to_string(v) +
                                                        " lies outside");
        if (cell.dim() != whole.dim())
            fail(ErrorCode::InvalidSubdivision, which + ": cell does not span");
        volume += span_volume(cell);
        if (cell.dim() == 0)
            continue;
        for (const auto &g : cell.faces()[static_cast<std::size_t>(cell.dim() - 1)]) {
            std::vector<RationalPoint> key;
            for (auto v : g.vertex_ids)
                key.push_back(cell.vertices()[v]);
            bool boundary = std::any_of(whole.facets().begin(), whole.facets().end(),
                                        [&](const HalfSpace &h) {
                                            return std::all_of(key.begin(), key.end(),
                                                               [&](const RationalPoint &x) {
                                                                   return h.saturated_by(x);
                                                               });
                                        });
            auto &entry = facet_count[key];
            ++entry.first;
            entry.second = boundary;
        }
    }
    if (volume != span_volume(whole))
        fail(ErrorCode::InvalidSubdivision, what + ": cell volumes sum to " + to_string(volume) +
                                                " instead of " + to_string(span_volume(whole)));
    for (const auto &[key, entry] : facet_count) {
        int expected = entry.second ? 1 : 2;
        if (entry.first != expected)
            fail(ErrorCode::InvalidSubdivision,
                 what + ": facet " + to_string(key.front()) + "... is shared by " +
                     std::to_string(entry.first) + " cells");
    }
}

RationalPoint vertex_barycenter(const Polytope &p, const Face &face) {
    RationalPoint c(static_cast<std::size_t>(p.ambient_dim()), Rational(0));
    for (auto v : face.vertex_ids)
        for (std::size_t j = 0; j < c.size(); ++j)
            c[j] += p.vertices()[v][j];
    Rational n(static_cast<long>(face.vertex_ids.size()));
    for (auto &x : c)
        x /= n;
    return c;
}

RationalPoint vertex_barycenter(const Polytope &p) {
    return vertex_barycenter(p, p.faces().back().front());
}

} // namespace nefdisc
