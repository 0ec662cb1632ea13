#include "relent/interval.hpp"

#include <algorithm>

namespace relent {

Interval::Interval(Scalar l, Scalar h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("interval endpoints out of order");
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    Scalar lo = max(a.lo, b.lo);
    Scalar hi = min(a.hi, b.hi);
    if (lo > hi) return std::nullopt;
    return Interval(lo, hi);
}

IntervalSet::IntervalSet(std::vector<Interval> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) {
        int c = Scalar::cmp(a.lo, b.lo);
        if (c != 0) return c < 0;
        return Scalar::cmp(a.hi, b.hi) < 0;
    });
    std::vector<Interval> merged;
    for (auto& iv : parts_) {
        if (!merged.empty() && iv.lo <= merged.back().hi) {
            if (iv.hi > merged.back().hi) merged.back().hi = iv.hi;
        } else {
            merged.push_back(iv);
        }
    }
    parts_ = std::move(merged);
}

bool IntervalSet::contains(const Scalar& x) const {
    for (const auto& iv : parts_) {
        if (iv.contains(x)) return true;
        if (iv.lo > x) break;
    }
    return false;
}

bool IntervalSet::contains_set(const IntervalSet& other) const {
    // Both canonical: each interval of `other` must fit inside one of ours
    // (ours are separated by nonempty open gaps).
    size_t i = 0;
    for (const auto& iv : other.parts_) {
        while (i < parts_.size() && parts_[i].hi < iv.lo) ++i;
        if (i >= parts_.size() || !parts_[i].contains(iv)) return false;
    }
    return true;
}

bool IntervalSet::all_points() const {
    for (const auto& iv : parts_)
        if (!iv.is_point()) return false;
    return true;
}

const Scalar& IntervalSet::min() const {
    if (parts_.empty()) throw std::domain_error("empty interval set");
    return parts_.front().lo;
}

const Scalar& IntervalSet::max() const {
    if (parts_.empty()) throw std::domain_error("empty interval set");
    return parts_.back().hi;
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
    std::vector<Interval> all = parts_;
    all.insert(all.end(), other.parts_.begin(), other.parts_.end());
    return IntervalSet(std::move(all));
}

IntervalSet IntervalSet::intersect_with(const IntervalSet& other) const {
    std::vector<Interval> out;
    for (const auto& a : parts_) {
        for (const auto& b : other.parts_) {
            if (auto iv = intersect(a, b)) out.push_back(*iv);
        }
    }
    return IntervalSet(std::move(out));
}

IntervalSet IntervalSet::intersect_with(const Interval& iv) const {
    return intersect_with(IntervalSet({iv}));
}

std::optional<Scalar> IntervalSet::point_outside(const IntervalSet& other) const {
    for (const auto& iv : parts_) {
        if (!other.contains(iv.lo)) return iv.lo;
        if (!other.contains(iv.hi)) return iv.hi;
        // Endpoints covered; look for a gap of `other` inside iv.
        for (size_t j = 0; j + 1 < other.parts_.size(); ++j) {
            const Scalar& gap_lo = other.parts_[j].hi;
            const Scalar& gap_hi = other.parts_[j + 1].lo;
            Scalar a = relent::max(gap_lo, iv.lo);
            Scalar b = relent::min(gap_hi, iv.hi);
            if (a < b) return (a + b) / Scalar(2);
        }
    }
    return std::nullopt;
}

}  // namespace relent
