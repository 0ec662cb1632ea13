#pragma once

#include "relent/grid.hpp"

#include <vector>

namespace relent {

/// Certified enclosure of log(Perron root) of a 0/1 matrix. When the walk
/// graph has no cycle the counts eventually die; that is reported with
/// no_growth set and value 0 rather than -infinity.
struct SpectralResult {
    double lo = 0.0;
    double hi = 0.0;
    bool no_growth = false;

    double value() const { return (lo + hi) / 2.0; }
    double width() const { return hi - lo; }
};

/// log of the spectral radius with a Collatz-Wielandt enclosure, computed
/// per strongly connected component (power iteration on block + I, which is
/// primitive, so the enclosure tightens geometrically).
SpectralResult spectral_entropy(const TransitionMatrix& m);

/// Number of grid-cell sequences (c_1..c_{m+1}) realizable as walks of the
/// transition matrix of rasterize(G, n); equals the number of (m+1)-boxes
/// meeting the m-th Mahavier product for bitmap relations, an outer bound
/// otherwise. Arbitrary precision.
Int box_count(const Relation& g, long n, long m);

/// Brute-force oracle: all tuples (x_1..x_{m+1}) over the coordinate values
/// of a finite relation with (x_{k+1}, x_k) in F throughout, lexicographically
/// sorted. Guarded against blow-up.
std::vector<std::vector<Scalar>> mahavier_members(const Relation& finite, long m);

struct EntropyReport {
    long n = 0;
    long m_max = 0;
    std::vector<Int> counts;        // N_1 .. N_{m_max}
    std::vector<double> ratios;     // log(N_m)/m
    double min_ratio = 0.0;         // finite-m estimate (subadditive: limit = inf)
    SpectralResult spectral;
    bool subadditive_ok = true;     // N_{m+k} <= N_m * N_k, exact
    bool obs_bound_ok = true;       // N_m <= n^{m+1}, exact
    bool outer = false;             // true when G had to be rasterized
    bool empty_relation = false;
};

/// Counts, ratio sequence, exact verdict flags and the spectral estimate for
/// G on the n-cell grid. m_max is capped at 32 (counts stay exact integers).
EntropyReport entropy_sequence(const Relation& g, long n, long m_max);

/// Entropy of a finite relation: log spectral radius of the digraph on its
/// distinct coordinate values with an edge x -> y iff (x, y) in F. For covers
/// finer than the minimal coordinate gap the box counts equal walk counts, so
/// this is the exact limit.
SpectralResult finite_entropy(const Relation& finite);

/// box_count(G, n, m) == box_count(G^{-1}, n, m) for every m <= m_max.
bool check_inverse_invariance(const Relation& g, long n, long m_max);

/// Digraph of a finite relation: sorted distinct coordinate values plus
/// adjacency (edge x -> y iff (x, y) in F). Shared by entropy and orbit code.
struct FiniteDigraph {
    std::vector<Scalar> values;
    std::vector<std::vector<long>> out;  // out-neighbours, sorted

    long index_of(const Scalar& v) const;
};

FiniteDigraph finite_digraph(const Relation& finite);

}  // namespace relent
