#include "nefdisc/arith.hpp"

#include "nefdisc/error.hpp"

#include <algorithm>
#include <utility>

namespace nefdisc {

Integer pairing(const LatticeVector &m, const LatticeVector &n) {
    if (m.lattice == n.lattice)
        fail(ErrorCode::DimensionMismatch, "pairing requires one N-vector and one M-vector");
    if (m.rank() != n.rank())
        fail(ErrorCode::DimensionMismatch, "pairing of vectors of different rank");
    return dot(std::span<const Integer>(m.coords), std::span<const Integer>(n.coords));
}

Integer gcd(std::span<const Integer> v) {
    Integer g = 0;
    for (const auto &x : v) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1)
            break;
    }
    return g;
}

IntVector primitive(IntVector v) {
    Integer g = gcd(v);
    if (g > 1)
        for (auto &x : v)
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    return v;
}

IntVector clear_denominators(std::span<const Rational> v) {
    Integer l = 1;
    for (const auto &x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        Integer num = x.get_num() * (l / x.get_den());
        out.push_back(std::move(num));
    }
    return primitive(std::move(out));
}

RationalPoint to_rational(std::span<const Integer> v) {
    return RationalPoint(v.begin(), v.end());
}

bool is_integral(std::span<const Rational> v) {
    return std::all_of(v.begin(), v.end(), [](const Rational &x) { return x.get_den() == 1; });
}

IntVector to_integer(std::span<const Rational> v) {
    IntVector out;
    out.reserve(v.size());
    for (const auto &x : v) {
        if (x.get_den() != 1)
            fail(ErrorCode::MalformedInput, "non-integral coordinate " + to_string(x));
        out.push_back(x.get_num());
    }
    return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(std::span<const Integer> a, std::span<const Rational> b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0)
            s += a[i] * b[i];
    return s;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

RationalPoint add(std::span<const Rational> a, std::span<const Rational> b) {
    RationalPoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] + b[i];
    return out;
}

RationalPoint sub(std::span<const Rational> a, std::span<const Rational> b) {
    RationalPoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] - b[i];
    return out;
}

RationalPoint scale(std::span<const Rational> a, const Rational &s) {
    RationalPoint out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a[i] * s;
    return out;
}

Echelon rref(RationalMatrix m, std::size_t cols) {
    Echelon e;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[row], m[p]);
        Rational inv = 1 / m[row][c];
        for (std::size_t k = c; k < cols; ++k)
            m[row][k] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0)
                continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[row][k];
        }
        e.pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    e.rows = std::move(m);
    return e;
}

std::size_t rank(const RationalMatrix &m, std::size_t cols) {
    return rref(m, cols).pivots.size();
}

std::vector<IntVector> kernel(const RationalMatrix &m, std::size_t cols) {
    Echelon e = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<IntVector> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        RationalPoint v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(clear_denominators(v));
    }
    return basis;
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return det;
}

int affine_dimension(std::span<const RationalPoint> points) {
    if (points.empty())
        return -1;
    RationalMatrix diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i)
        diffs.push_back(sub(points[i], points[0]));
    return static_cast<int>(rank(diffs, points[0].size()));
}

std::string to_string(const Rational &q) { return q.get_str(); }

std::string to_string(std::span<const Rational> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

std::string to_string(std::span<const Integer> v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].get_str();
    }
    return s + "]";
}

} // namespace nefdisc
