#pragma once

#include "relent/interval.hpp"

#include <set>
#include <utility>
#include <vector>

namespace relent {

using Point = std::pair<Scalar, Scalar>;

/// One affine piece {(x, slope*x + intercept) : x in [xlo, xhi]}.
/// With transposed set, the piece denotes the mirrored set {(y, x)}; after
/// canonicalisation the flag survives only on slope-0 pieces (vertical
/// segments, which arise from inverting horizontal ones).
struct AffineSegment {
    Scalar slope, intercept, xlo, xhi;
    bool transposed = false;

    AffineSegment() = default;
    AffineSegment(Scalar s, Scalar e, Scalar lo, Scalar hi, bool t = false)
        : slope(std::move(s)), intercept(std::move(e)), xlo(std::move(lo)), xhi(std::move(hi)), transposed(t) {
        if (xlo > xhi) throw std::invalid_argument("segment domain out of order");
    }

    Scalar value_at(const Scalar& x) const { return slope * x + intercept; }
    bool is_degenerate() const { return xlo == xhi; }
    /// y-extent of the underlying (untransposed) graph piece.
    Interval y_range() const;
    /// Extent along the given axis of the set itself (respects transposed).
    Interval extent(int axis) const;
    /// Exact membership of (x, y) in the set this piece denotes.
    bool contains(const Scalar& x, const Scalar& y) const;

    friend bool operator==(const AffineSegment& a, const AffineSegment& b) {
        return a.transposed == b.transposed && a.slope == b.slope && a.intercept == b.intercept && a.xlo == b.xlo &&
               a.xhi == b.xhi;
    }
};

enum class RelKind { points, segments, grid };

using Cell = std::pair<long, long>;

/// A closed relation on a compact interval: a closed subset of ambient^2 in
/// one of three representations — a finite point set, a finite union of
/// affine segments, or a grid bitmap of closed cells. All representations are
/// kept in canonical form so equality is plain structural comparison.
class Relation {
public:
    static Relation points(Interval ambient, std::vector<Point> pts);
    static Relation segments(Interval ambient, std::vector<AffineSegment> segs);
    static Relation grid(Interval ambient, long n, std::set<Cell> cells);
    static Relation empty(Interval ambient, RelKind kind);

    const Interval& ambient() const { return ambient_; }
    RelKind kind() const { return kind_; }
    bool is_empty() const;

    const std::vector<Point>& point_data() const;
    const std::vector<AffineSegment>& segment_data() const;
    long grid_n() const;
    const std::set<Cell>& grid_cells() const;

    friend bool operator==(const Relation& a, const Relation& b);
    friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

private:
    Interval ambient_;
    RelKind kind_ = RelKind::points;
    std::vector<Point> points_;
    std::vector<AffineSegment> segments_;
    long n_ = 0;
    std::set<Cell> cells_;
};

/// {(y, x) : (x, y) in G}; same ambient, representation kind preserved.
Relation inverse(const Relation& g);

/// Exact projection onto axis 1 (first coordinate) or 2 (second).
IntervalSet project(const Relation& g, int axis);

/// Exact membership. Precondition: (x, y) inside ambient^2.
bool contains(const Relation& g, const Scalar& x, const Scalar& y);

/// Exact subset test; see relation.cpp for the supported kind combinations.
bool subset(const Relation& h, const Relation& g);

/// Canonical union; both sides must share the ambient and, unless one is
/// empty, the representation kind.
Relation union_of(const Relation& g, const Relation& h);

enum class GraphVerdict { not_graph, graph, surjective_graph };

/// Whether the (closed) relation is the graph of an upper semicontinuous
/// set-valued function on the whole ambient, and whether it is surjective.
GraphVerdict is_usc_graph(const Relation& g);

}  // namespace relent
