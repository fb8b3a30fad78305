#include "nefdisc/census.hpp"

#include "nefdisc/error.hpp"

#include <algorithm>
#include <functional>

namespace nefdisc {
namespace {

Integer binom(long n, long k) {
    if (k < 0 || n < k)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Integer product(const std::vector<int> &ds) {
    Integer p = 1;
    for (int d : ds)
        p *= d;
    return p;
}

void require_dim(const CIDescriptor &ci, int n) {
    if (ci.cy_dim() != n)
        fail(ErrorCode::WrongDimension, "needs a complete intersection of dimension " +
                                            std::to_string(n) + ", got " +
                                            std::to_string(ci.cy_dim()));
}

// All strictly increasing k-tuples from 1..m.
std::vector<std::vector<std::size_t>> combinations(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t x = start; x <= m; ++x) {
            cur.push_back(x);
            rec(x + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

// All alpha vectors with alpha_k in 1..d(k) for k in `used`, 0 elsewhere.
std::vector<std::vector<std::size_t>> alphas(const std::vector<std::size_t> &sizes,
                                             const std::vector<bool> &used) {
    std::vector<std::vector<std::size_t>> out{std::vector<std::size_t>(sizes.size(), 0)};
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (!used[k])
            continue;
        std::vector<std::vector<std::size_t>> next;
        for (const auto &a : out)
            for (std::size_t x = 1; x <= sizes[k]; ++x) {
                auto b = a;
                b[k] = x;
                next.push_back(std::move(b));
            }
        out = std::move(next);
    }
    return out;
}

using Mat = Matrix3;

Mat multiply(const Mat &a, const Mat &b) {
    Mat c{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            c[i][j] = 0;
            for (int k = 0; k < 3; ++k)
                c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

Mat minus_identity(Mat m) {
    for (int i = 0; i < 3; ++i)
        m[i][i] -= 1;
    return m;
}

bool is_zero(const Mat &m) {
    for (const auto &row : m)
        for (const auto &x : row)
            if (x != 0)
                return false;
    return true;
}

bool is_identity(const Mat &m) { return is_zero(minus_identity(m)); }

RationalMatrix to_rows(const Mat &m) {
    RationalMatrix out;
    for (const auto &row : m)
        out.push_back(RationalPoint(row.begin(), row.end()));
    return out;
}

Integer det3(const Mat &m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

} // namespace

CIDescriptor make_ci(int ambient, std::vector<int> degrees) {
    if (degrees.empty())
        fail(ErrorCode::InvalidPartition, "no degrees given");
    int sum = 0;
    for (int d : degrees) {
        if (d < 2)
            fail(ErrorCode::InvalidPartition, "degrees must be at least 2");
        sum += d;
    }
    if (sum != ambient + 1)
        fail(ErrorCode::InvalidPartition, "degrees sum to " + std::to_string(sum) +
                                              ", not N+1 = " + std::to_string(ambient + 1));
    return CIDescriptor{ambient, std::move(degrees)};
}

Integer k3_singular_count(const CIDescriptor &ci) {
    require_dim(ci, 2);
    Integer s = 0;
    for (int d : ci.degrees)
        s += binom(d, 2);
    return s * product(ci.degrees);
}

CurveComponentStats curve_stats(const CIDescriptor &ci, std::size_t group) {
    require_dim(ci, 3);
    if (group < 1 || group > ci.degrees.size())
        fail(ErrorCode::InvalidPartition, "group index out of range");
    const long r = static_cast<long>(ci.degrees.size());
    long sum = 0;
    for (int d : ci.degrees)
        sum += d;
    CurveComponentStats s;
    s.group = group;
    s.degree_product = product(ci.degrees);
    Integer two_g_minus_two = s.degree_product * (sum - r - 2);
    s.genus = two_g_minus_two / 2 + 1;
    s.chi = 2 - 2 * s.genus;
    const int di = ci.degrees[group - 1];
    s.punctures = (di - 2) * s.degree_product;
    s.chi_punctured = s.chi - s.punctures;
    return s;
}

Integer threefold_euler(const CIDescriptor &ci) {
    require_dim(ci, 3);
    const Integer prod = product(ci.degrees);
    Integer e = 0;
    for (int d : ci.degrees)
        e += binom(d, 3) * prod - binom(d, 2) * d * prod;
    return e;
}

std::string_view to_string(StratumKind kind) {
    switch (kind) {
    case StratumKind::X: return "X";
    case StratumKind::C: return "C";
    case StratumKind::P: return "P";
    case StratumKind::Y: return "Y";
    case StratumKind::Z: return "Z";
    case StratumKind::CHat: return "C_hat";
    case StratumKind::PHat: return "P_hat";
    case StratumKind::QHat: return "Q_hat";
    }
    return "?";
}

std::vector<StratumIndex> enumerate_strata(const NefPartition &np,
                                           const std::vector<std::vector<std::size_t>> &simplices) {
    const std::size_t r = np.r();
    const auto sizes = np.part_sizes();
    const std::size_t nv = np.nabla_check.vertices().size();
    for (const auto &s : simplices)
        for (auto v : s)
            if (v >= nv)
                fail(ErrorCode::InvalidPartition, "simplex vertex id out of range");
    std::vector<std::vector<std::size_t>> sorted_simplices = simplices;
    for (auto &s : sorted_simplices)
        std::sort(s.begin(), s.end());

    std::vector<StratumIndex> out;
    auto emit = [&](StratumIndex s) {
        for (std::size_t k = 0; k < r; ++k)
            if (s.alpha[k])
                s.divisors.push_back(np.parts[k][s.alpha[k] - 1]);
        for (auto m : s.mu)
            s.divisors.push_back(np.parts[s.i - 1][m - 1]);
        for (auto m : s.nu)
            s.divisors.push_back(np.parts[s.j - 1][m - 1]);
        std::sort(s.divisors.begin(), s.divisors.end());
        s.nonempty = std::any_of(sorted_simplices.begin(), sorted_simplices.end(),
                                 [&](const std::vector<std::size_t> &simplex) {
                                     return std::includes(simplex.begin(), simplex.end(),
                                                          s.divisors.begin(), s.divisors.end());
                                 });
        out.push_back(std::move(s));
    };
    auto make = [&](StratumKind kind, std::size_t i, std::size_t j, std::vector<std::size_t> mu,
                    std::vector<std::size_t> nu, std::vector<std::size_t> alpha) {
        StratumIndex s;
        s.kind = kind;
        s.i = i;
        s.j = j;
        s.mu = std::move(mu);
        s.nu = std::move(nu);
        s.alpha = std::move(alpha);
        emit(std::move(s));
    };
    const std::vector<bool> all(r, true);
    const std::vector<std::size_t> none(r, 0);

    for (const auto &a : alphas(sizes, all))
        make(StratumKind::X, 0, 0, {}, {}, a);
    for (std::size_t i = 1; i <= r; ++i) {
        for (const auto &mu : combinations(sizes[i - 1], 2))
            make(StratumKind::C, i, 0, mu, {}, none);
        for (const auto &mu : combinations(sizes[i - 1], 3))
            make(StratumKind::P, i, 0, mu, {}, none);
    }
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<bool> others(r, true);
        others[i - 1] = false;
        for (const auto &a : alphas(sizes, others))
            make(StratumKind::Y, i, 0, {}, {}, a);
    }
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = i + 1; j <= r; ++j) {
            std::vector<bool> rest(r, true);
            rest[i - 1] = rest[j - 1] = false;
            for (const auto &a : alphas(sizes, rest))
                make(StratumKind::Z, i, j, {}, {}, a);
        }
    for (std::size_t i = 1; i <= r; ++i) {
        std::vector<bool> others(r, true);
        others[i - 1] = false;
        for (const auto &a : alphas(sizes, others)) {
            for (const auto &mu : combinations(sizes[i - 1], 2))
                make(StratumKind::CHat, i, 0, mu, {}, a);
            for (const auto &mu : combinations(sizes[i - 1], 3))
                make(StratumKind::PHat, i, 0, mu, {}, a);
        }
    }
    for (std::size_t i = 1; i <= r; ++i)
        for (std::size_t j = 1; j <= r; ++j) {
            if (i == j)
                continue;
            std::vector<bool> rest(r, true);
            rest[i - 1] = rest[j - 1] = false;
            for (const auto &a : alphas(sizes, rest))
                for (const auto &mu : combinations(sizes[i - 1], 2))
                    for (const auto &nu : combinations(sizes[j - 1], 2))
                        make(StratumKind::QHat, i, j, mu, nu, a);
        }
    return out;
}

std::vector<std::vector<std::size_t>> boundary_simplices(const Polytope &p) {
    std::vector<std::vector<std::size_t>> out;
    if (p.dim() == 0)
        return out;
    for (const auto &f : p.faces()[static_cast<std::size_t>(p.dim() - 1)]) {
        if (static_cast<int>(f.vertex_ids.size()) != p.dim())
            fail(ErrorCode::InvalidPartition, "polytope is not simplicial; pass a triangulation");
        out.push_back(f.vertex_ids);
    }
    return out;
}

CensusReport census(const CIDescriptor &ci) {
    CensusReport rep;
    rep.ci = ci;
    NefPartition np = projective_partition(ci.degrees);
    rep.strata = enumerate_strata(np, boundary_simplices(np.nabla_check));
    const std::size_t r = ci.degrees.size();
    rep.c_components.assign(r, 0);
    rep.p_components.assign(r, 0);
    for (const auto &s : rep.strata) {
        if (!s.nonempty)
            continue;
        if (s.kind == StratumKind::C)
            ++rep.c_components[s.i - 1];
        if (s.kind == StratumKind::P)
            ++rep.p_components[s.i - 1];
    }
    const Integer prod = product(ci.degrees);
    if (ci.cy_dim() == 2)
        rep.k3_points = k3_singular_count(ci);
    if (ci.cy_dim() == 3) {
        rep.euler_closed_form = threefold_euler(ci);
        rep.euler_from_strata = 0;
        for (std::size_t i = 1; i <= r; ++i) {
            rep.curves.push_back(curve_stats(ci, i));
            Integer per_curve = rep.curves.back().chi_punctured;
            rep.euler_from_strata += Integer(static_cast<unsigned long>(rep.p_components[i - 1])) * prod;
            rep.euler_from_strata += Integer(static_cast<unsigned long>(rep.c_components[i - 1])) * per_curve;
        }
    }
    return rep;
}

MonodromyReport monodromy_check(const std::array<Matrix3, 3> &triple, VertexKind expected) {
    MonodromyReport rep;
    rep.matrices = triple;
    rep.expected = expected;
    RationalMatrix stacked;
    for (std::size_t k = 0; k < 3; ++k) {
        const Mat &m = triple[k];
        Mat n = minus_identity(m);
        if (det3(m) != 1 || !is_zero(multiply(multiply(n, n), n)))
            fail(ErrorCode::NotUnipotent, "matrix " + std::to_string(k + 1) + " is not unipotent");
        RationalMatrix rows = to_rows(n);
        const std::size_t rk = rank(rows, 3);
        rep.fixed_dims[k] = 3 - static_cast<int>(rk);
        Integer g = 0;
        for (const auto &row : n)
            for (const auto &x : row)
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        rep.conjugate_to_standard[k] = rk == 1 && is_zero(multiply(n, n)) && g == 1;
        stacked.insert(stacked.end(), rows.begin(), rows.end());
    }
    rep.product_is_identity = is_identity(multiply(multiply(triple[0], triple[1]), triple[2]));
    if (!rep.product_is_identity)
        fail(ErrorCode::ProductNotIdentity, "M1 M2 M3 is not the identity");
    rep.common_fixed_dim = 3 - static_cast<int>(rank(stacked, 3));
    if (rep.common_fixed_dim == 2)
        rep.consistent_with = VertexKind::Positive;
    else if (rep.common_fixed_dim == 1)
        rep.consistent_with = VertexKind::Negative;
    bool all_standard = std::all_of(rep.conjugate_to_standard.begin(),
                                    rep.conjugate_to_standard.end(), [](bool b) { return b; });
    rep.matches_expected = all_standard && rep.consistent_with == expected;
    return rep;
}

} // namespace nefdisc
