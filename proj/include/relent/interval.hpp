#pragma once

#include "relent/scalar.hpp"

#include <optional>
#include <vector>

namespace relent {

/// Closed interval [lo, hi], degenerate (lo == hi) allowed.
struct Interval {
    Scalar lo, hi;

    Interval() = default;
    Interval(Scalar l, Scalar h);

    bool is_point() const { return lo == hi; }
    Scalar length() const { return hi - lo; }
    bool contains(const Scalar& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }
};

/// Intersection of two closed intervals; empty optional when disjoint.
std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Finite union of closed intervals in canonical form: sorted, pairwise
/// disjoint, touching intervals merged. Degenerate members are points, so the
/// same type carries projections of finite point sets and of segment unions.
class IntervalSet {
public:
    IntervalSet() = default;
    explicit IntervalSet(std::vector<Interval> parts);

    static IntervalSet point(Scalar x) { return IntervalSet({Interval(x, x)}); }

    const std::vector<Interval>& parts() const { return parts_; }
    bool is_empty() const { return parts_.empty(); }
    bool contains(const Scalar& x) const;
    bool contains_set(const IntervalSet& other) const;
    bool all_points() const;

    const Scalar& min() const;
    const Scalar& max() const;

    IntervalSet unite(const IntervalSet& other) const;
    IntervalSet intersect_with(const IntervalSet& other) const;
    IntervalSet intersect_with(const Interval& iv) const;

    /// Some point of this \ other, if any (used for violation witnesses).
    std::optional<Scalar> point_outside(const IntervalSet& other) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const IntervalSet& a, const IntervalSet& b) { return !(a == b); }

private:
    std::vector<Interval> parts_;
};

}  // namespace relent
