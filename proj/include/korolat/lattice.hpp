#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "korolat/numeric.hpp"

namespace korolat {

// Generating vector a = (a_1, ..., a_s) mod N. Components are stored
// canonically in [0, N); signed representatives live only in lattice
// vectors. A vector with every component == 0 is degenerate: kept legal so
// search loops stay total, but flagged by the operations that care.
struct GeneratingVector {
    std::int64_t modulus;
    std::vector<std::int64_t> components;

    GeneratingVector(std::int64_t N, std::vector<std::int64_t> comps);

    int dimension() const { return static_cast<int>(components.size()); }
    bool degenerate() const;
};

using IntegerVector = std::vector<std::int64_t>;

// H(m) = prod max(1, |m_i|).
std::int64_t height(const IntegerVector& m);

// a_1 m_1 + ... + a_s m_s == 0 (mod N)
bool lattice_contains(const GeneratingVector& a, const IntegerVector& m);

// The N points ({a_1 k/N}, ..., {a_s k/N}), k = 1..N, kept as exact
// numerators over N. The point for k = N is the origin.
struct KorobovPointSet {
    GeneratingVector generator;
    std::vector<std::vector<std::int64_t>> numerators;  // N rows, s columns
};

KorobovPointSet korobov_points(const GeneratingVector& a);

struct QResult {
    std::int64_t q;
    IntegerVector witness;  // sign-canonical vector attaining q
    bool degenerate;
};

// Smallest height of a nonzero lattice vector, found by enumerating
// heights h = 1, 2, ... and all vectors of height exactly h (ordered
// factorizations of h plus {-1,0,1} fill). Independent of the
// relative-minima enumeration by construction.
QResult q_min(const GeneratingVector& a);

struct RelativeMinimum {
    IntegerVector m;       // sign-canonical: first nonzero coordinate > 0
    std::int64_t height;
};

struct RelativeMinimaSet {
    GeneratingVector generator;
    std::vector<RelativeMinimum> minima;  // sorted lexicographically
    bool degenerate;
};

// All sign-canonical nonzero lattice vectors whose absolute-value profile
// is not strictly dominated by another lattice vector's profile. Vectors
// sharing a Pareto-minimal profile are all kept. Dispatches to a
// hyperbolic-region sweep for prime N with nonzero components (s <= 3)
// and to the boxed slab enumeration otherwise.
RelativeMinimaSet relative_minima(const GeneratingVector& a);

// The reference route: iterate (m_2, ..., m_s) over [-N, N]^(s-1), solve
// for the pivot coordinate, Pareto-filter the profiles. Always available;
// used by tests to cross-check the fast route.
RelativeMinimaSet relative_minima_boxed(const GeneratingVector& a);

// N * sum over relative minima of 1/H(m), exact.
Rational bykovskii_sum_exact(const GeneratingVector& a);
double bykovskii_sum(const GeneratingVector& a);

} // namespace korolat
