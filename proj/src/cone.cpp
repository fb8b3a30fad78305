#include "nefdisc/cone.hpp"

#include "nefdisc/error.hpp"
#include "bitset.hpp"

#include <algorithm>

namespace nefdisc {
namespace {

using detail::Bitset;

struct Ray {
    IntVector v;
    Bitset zeros;
};

// Extreme rays of {z : B z >= 0} for B of full column rank k.
std::vector<IntVector> pointed_rays(const std::vector<IntVector> &rows, std::size_t k) {
    const std::size_t m = rows.size();

    // Greedy choice of k independent rows for the starting simplicial cone.
    std::vector<std::size_t> basis;
    RationalMatrix chosen;
    for (std::size_t i = 0; i < m && basis.size() < k; ++i) {
        chosen.push_back(to_rational(rows[i]));
        if (rank(chosen, k) == chosen.size())
            basis.push_back(i);
        else
            chosen.pop_back();
    }
    if (basis.size() != k)
        fail(ErrorCode::DimensionMismatch, "constraint matrix is not of full column rank");

    // Rays of the starting cone are the columns of the inverse.
    RationalMatrix aug(k, RationalPoint(2 * k, Rational(0)));
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c)
            aug[r][c] = chosen[r][c];
        aug[r][k + r] = 1;
    }
    Echelon e = rref(aug, 2 * k);

    std::vector<Ray> rays;
    for (std::size_t j = 0; j < k; ++j) {
        RationalPoint col(k);
        for (std::size_t r = 0; r < k; ++r)
            col[r] = e.rows[r][k + j];
        Ray ray{clear_denominators(col), Bitset(m)};
        for (std::size_t t = 0; t < k; ++t)
            if (t != j)
                ray.zeros.set(basis[t]);
        rays.push_back(std::move(ray));
    }

    std::vector<bool> in_basis(m, false);
    for (auto b : basis)
        in_basis[b] = true;

    for (std::size_t idx = 0; idx < m; ++idx) {
        if (in_basis[idx])
            continue;
        const IntVector &h = rows[idx];
        std::vector<Integer> val(rays.size());
        std::vector<std::size_t> pos, neg;
        std::vector<Ray> next;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(std::span<const Integer>(h), std::span<const Integer>(rays[r].v));
            if (val[r] > 0)
                pos.push_back(r);
            else if (val[r] < 0)
                neg.push_back(r);
        }
        if (neg.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r)
                if (val[r] == 0)
                    rays[r].zeros.set(idx);
            continue;
        }
        for (std::size_t r = 0; r < rays.size(); ++r) {
            if (val[r] < 0)
                continue;
            Ray kept = rays[r];
            if (val[r] == 0)
                kept.zeros.set(idx);
            next.push_back(std::move(kept));
        }
        const std::size_t need = k >= 2 ? k - 2 : 0;
        for (auto p : pos) {
            for (auto n : neg) {
                Bitset common = rays[p].zeros & rays[n].zeros;
                if (common.count() < need)
                    continue;
                bool adjacent = true;
                for (std::size_t q = 0; q < rays.size() && adjacent; ++q) {
                    if (q == p || q == n)
                        continue;
                    if (common.subset_of(rays[q].zeros))
                        adjacent = false;
                }
                if (!adjacent)
                    continue;
                IntVector v(k);
                for (std::size_t c = 0; c < k; ++c)
                    v[c] = val[p] * rays[n].v[c] - val[n] * rays[p].v[c];
                Ray created{primitive(std::move(v)), common};
                created.zeros.set(idx);
                next.push_back(std::move(created));
            }
        }
        rays = std::move(next);
    }

    std::vector<IntVector> out;
    out.reserve(rays.size());
    for (auto &r : rays)
        out.push_back(std::move(r.v));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ConeGenerators cone_generators(const std::vector<IntVector> &constraints, std::size_t dim) {
    ConeGenerators gens;
    RationalMatrix a;
    a.reserve(constraints.size());
    for (const auto &row : constraints) {
        if (row.size() != dim)
            fail(ErrorCode::DimensionMismatch, "constraint row of wrong length");
        a.push_back(to_rational(row));
    }
    gens.lineality = kernel(a, dim);
    if (gens.lineality.size() == dim)
        return gens;

    if (gens.lineality.empty()) {
        gens.rays = pointed_rays(constraints, dim);
        return gens;
    }

    // Work in the row space: y = W^T z with W a basis of the row space of A.
    Echelon e = rref(a, dim);
    const std::size_t k = e.pivots.size();
    std::vector<IntVector> w;
    for (const auto &row : e.rows)
        w.push_back(clear_denominators(row));
    std::vector<IntVector> reduced;
    reduced.reserve(constraints.size());
    for (const auto &row : constraints) {
        IntVector r(k);
        for (std::size_t j = 0; j < k; ++j)
            r[j] = dot(std::span<const Integer>(row), std::span<const Integer>(w[j]));
        reduced.push_back(std::move(r));
    }
    for (const auto &z : pointed_rays(reduced, k)) {
        IntVector y(dim, Integer(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t c = 0; c < dim; ++c)
                y[c] += z[j] * w[j][c];
        gens.rays.push_back(primitive(std::move(y)));
    }
    std::sort(gens.rays.begin(), gens.rays.end());
    return gens;
}

} // namespace nefdisc
