#pragma once

// Exact scalar and vector types plus the small amount of exact linear algebra
// the rest of the library needs (echelon forms, ranks, kernels).

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace nefdisc {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalPoint = std::vector<Rational>;
using RationalMatrix = std::vector<RationalPoint>;

/// Which side of the dual pair a lattice vector lives on.  Pairings are only
/// meaningful between an N-vector and an M-vector.
enum class Lattice { N, M };

constexpr Lattice opposite(Lattice l) { return l == Lattice::N ? Lattice::M : Lattice::N; }

struct LatticeVector {
    IntVector coords;
    Lattice lattice = Lattice::N;

    std::size_t rank() const { return coords.size(); }
    friend bool operator==(const LatticeVector &, const LatticeVector &) = default;
};

/// Exact <m, n>; throws DimensionMismatch for equal tags or ranks.
Integer pairing(const LatticeVector &m, const LatticeVector &n);

Integer gcd(std::span<const Integer> v);
/// Divides by the gcd of the entries (sign kept).  Zero vectors are returned unchanged.
IntVector primitive(IntVector v);
/// Smallest positive multiple of `v` with integer entries.
IntVector clear_denominators(std::span<const Rational> v);

RationalPoint to_rational(std::span<const Integer> v);
bool is_integral(std::span<const Rational> v);
IntVector to_integer(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Rational dot(std::span<const Integer> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

RationalPoint add(std::span<const Rational> a, std::span<const Rational> b);
RationalPoint sub(std::span<const Rational> a, std::span<const Rational> b);
RationalPoint scale(std::span<const Rational> a, const Rational &s);

struct Echelon {
    RationalMatrix rows; // reduced rows, one per pivot
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form of `m` (rows of equal length `cols`).
Echelon rref(RationalMatrix m, std::size_t cols);
std::size_t rank(const RationalMatrix &m, std::size_t cols);
/// Basis of {x : m x = 0}, each vector made integral and primitive.
std::vector<IntVector> kernel(const RationalMatrix &m, std::size_t cols);
Rational determinant(RationalMatrix m);
/// Affine dimension of a point set (-1 for the empty set).
int affine_dimension(std::span<const RationalPoint> points);

std::string to_string(const Rational &q);
std::string to_string(std::span<const Rational> v);
std::string to_string(std::span<const Integer> v);

} // namespace nefdisc
