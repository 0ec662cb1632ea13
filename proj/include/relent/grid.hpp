#pragma once

#include "relent/relation.hpp"

namespace relent {

/// The n equal closed cells of an ambient interval.
struct GridCover {
    Interval ambient;
    long n = 1;

    GridCover(Interval a, long n_) : ambient(std::move(a)), n(n_) {
        if (n < 1) throw std::invalid_argument("grid resolution must be >= 1");
    }
    Scalar width() const { return ambient.length() / Scalar(n); }
    Interval cell(long i) const {
        Scalar w = width();
        return Interval(ambient.lo + Scalar(i) * w, ambient.lo + Scalar(i + 1) * w);
    }
    /// Indices of all closed cells meeting [a, b] (boundary touches count).
    std::pair<long, long> cell_span(const Scalar& a, const Scalar& b) const;
};

/// Outer grid approximation: the bitmap of all closed n x n cells meeting G.
/// Exact for every representation; refining n to 2n refines the bitmap.
Relation rasterize(const Relation& g, long n);

/// Sparse 0/1 cell-compatibility matrix of a grid bitmap: entry (i, j)
/// present iff cell (i, j) is occupied. Walks along entries read the cell
/// sequences of Mahavier members back to front, and the matrix of the
/// inverse relation is the transpose.
struct TransitionMatrix {
    long n = 0;
    std::vector<std::vector<long>> rows;  // rows[i] = sorted j with entry (i, j)

    long entry_count() const {
        size_t c = 0;
        for (const auto& r : rows) c += r.size();
        return static_cast<long>(c);
    }
    bool empty() const { return entry_count() == 0; }
    TransitionMatrix transpose() const;
};

TransitionMatrix transition_matrix(const Relation& bitmap);

/// Sum of all entries of M^m, exact.
Int walk_count(const TransitionMatrix& m, long steps);

}  // namespace relent
