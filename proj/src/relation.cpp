#include "relent/relation.hpp"

#include <algorithm>
#include <map>

namespace relent {

namespace {

int cmp_point(const Point& a, const Point& b) {
    int c = Scalar::cmp(a.first, b.first);
    if (c != 0) return c;
    return Scalar::cmp(a.second, b.second);
}

// Total order on canonical segments: (transposed, slope, intercept, xlo, xhi).
bool seg_less(const AffineSegment& a, const AffineSegment& b) {
    if (a.transposed != b.transposed) return !a.transposed;
    int c = Scalar::cmp(a.slope, b.slope);
    if (c != 0) return c < 0;
    c = Scalar::cmp(a.intercept, b.intercept);
    if (c != 0) return c < 0;
    c = Scalar::cmp(a.xlo, b.xlo);
    if (c != 0) return c < 0;
    return Scalar::cmp(a.xhi, b.xhi) < 0;
}

// A transposed segment with nonzero slope equals a plain one with the
// reciprocal slope; only vertical pieces keep the flag.
AffineSegment normalize_seg(const AffineSegment& s) {
    if (!s.transposed || s.slope.is_zero()) return s;
    Scalar inv_slope = s.slope.reciprocal();
    Scalar lo = s.value_at(s.xlo);
    Scalar hi = s.value_at(s.xhi);
    if (lo > hi) std::swap(lo, hi);
    return AffineSegment(inv_slope, -(s.intercept / s.slope), lo, hi, false);
}

}  // namespace

Interval AffineSegment::y_range() const {
    Scalar a = value_at(xlo);
    Scalar b = value_at(xhi);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

Interval AffineSegment::extent(int axis) const {
    bool first = (axis == 1);
    if (transposed) first = !first;
    return first ? Interval(xlo, xhi) : y_range();
}

bool AffineSegment::contains(const Scalar& x, const Scalar& y) const {
    const Scalar& u = transposed ? y : x;
    const Scalar& v = transposed ? x : y;
    return xlo <= u && u <= xhi && v == value_at(u);
}

Relation Relation::points(Interval ambient, std::vector<Point> pts) {
    Relation r;
    r.ambient_ = ambient;
    r.kind_ = RelKind::points;
    for (const auto& p : pts) {
        if (!ambient.contains(p.first) || !ambient.contains(p.second))
            throw std::invalid_argument("point outside ambient square");
    }
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return cmp_point(a, b) < 0; });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    r.points_ = std::move(pts);
    return r;
}

Relation Relation::segments(Interval ambient, std::vector<AffineSegment> segs) {
    Relation r;
    r.ambient_ = ambient;
    r.kind_ = RelKind::segments;

    std::vector<AffineSegment> canon;
    canon.reserve(segs.size());
    for (const auto& raw : segs) {
        AffineSegment s = normalize_seg(raw);
        Interval ex1 = s.extent(1), ex2 = s.extent(2);
        if (!ambient.contains(ex1.lo) || !ambient.contains(ex1.hi) || !ambient.contains(ex2.lo) ||
            !ambient.contains(ex2.hi))
            throw std::invalid_argument("segment leaves ambient square");
        canon.push_back(std::move(s));
    }

    // Merge same-line pieces into maximal intervals.
    std::sort(canon.begin(), canon.end(), seg_less);
    std::vector<AffineSegment> merged;
    for (auto& s : canon) {
        if (!merged.empty()) {
            AffineSegment& t = merged.back();
            if (t.transposed == s.transposed && t.slope == s.slope && t.intercept == s.intercept && s.xlo <= t.xhi) {
                if (s.xhi > t.xhi) t.xhi = s.xhi;
                continue;
            }
        }
        merged.push_back(std::move(s));
    }

    // Degenerate pieces absorbed by any other piece are redundant.
    std::vector<AffineSegment> final_segs;
    for (size_t i = 0; i < merged.size(); ++i) {
        if (merged[i].is_degenerate()) {
            const Scalar x = merged[i].transposed ? merged[i].value_at(merged[i].xlo) : merged[i].xlo;
            const Scalar y = merged[i].transposed ? merged[i].xlo : merged[i].value_at(merged[i].xlo);
            bool covered = false;
            for (size_t j = 0; j < merged.size() && !covered; ++j)
                if (j != i && merged[j].contains(x, y)) covered = true;
            if (covered) continue;
        }
        final_segs.push_back(merged[i]);
    }
    r.segments_ = std::move(final_segs);
    return r;
}

Relation Relation::grid(Interval ambient, long n, std::set<Cell> cells) {
    if (n < 1) throw std::invalid_argument("grid resolution must be >= 1");
    for (const auto& c : cells) {
        if (c.first < 0 || c.first >= n || c.second < 0 || c.second >= n)
            throw std::invalid_argument("grid cell out of range");
    }
    Relation r;
    r.ambient_ = ambient;
    r.kind_ = RelKind::grid;
    r.n_ = n;
    r.cells_ = std::move(cells);
    return r;
}

Relation Relation::empty(Interval ambient, RelKind kind) {
    switch (kind) {
        case RelKind::points: return points(ambient, {});
        case RelKind::segments: return segments(ambient, {});
        case RelKind::grid: return grid(ambient, 1, {});
    }
    throw std::logic_error("unreachable");
}

bool Relation::is_empty() const {
    switch (kind_) {
        case RelKind::points: return points_.empty();
        case RelKind::segments: return segments_.empty();
        case RelKind::grid: return cells_.empty();
    }
    return true;
}

const std::vector<Point>& Relation::point_data() const {
    if (kind_ != RelKind::points) throw std::invalid_argument("relation is not a finite point set");
    return points_;
}

const std::vector<AffineSegment>& Relation::segment_data() const {
    if (kind_ != RelKind::segments) throw std::invalid_argument("relation is not a segment union");
    return segments_;
}

long Relation::grid_n() const {
    if (kind_ != RelKind::grid) throw std::invalid_argument("relation is not a grid bitmap");
    return n_;
}

const std::set<Cell>& Relation::grid_cells() const {
    if (kind_ != RelKind::grid) throw std::invalid_argument("relation is not a grid bitmap");
    return cells_;
}

bool operator==(const Relation& a, const Relation& b) {
    if (a.ambient_ != b.ambient_ || a.kind_ != b.kind_) return false;
    switch (a.kind_) {
        case RelKind::points: return a.points_ == b.points_;
        case RelKind::segments: return a.segments_ == b.segments_;
        case RelKind::grid: return a.n_ == b.n_ && a.cells_ == b.cells_;
    }
    return false;
}

Relation inverse(const Relation& g) {
    switch (g.kind()) {
        case RelKind::points: {
            std::vector<Point> pts;
            pts.reserve(g.point_data().size());
            for (const auto& p : g.point_data()) pts.emplace_back(p.second, p.first);
            return Relation::points(g.ambient(), std::move(pts));
        }
        case RelKind::segments: {
            std::vector<AffineSegment> segs;
            segs.reserve(g.segment_data().size());
            for (auto s : g.segment_data()) {
                s.transposed = !s.transposed;
                segs.push_back(std::move(s));
            }
            return Relation::segments(g.ambient(), std::move(segs));
        }
        case RelKind::grid: {
            std::set<Cell> cells;
            for (const auto& c : g.grid_cells()) cells.emplace(c.second, c.first);
            return Relation::grid(g.ambient(), g.grid_n(), std::move(cells));
        }
    }
    throw std::logic_error("unreachable");
}

IntervalSet project(const Relation& g, int axis) {
    if (axis != 1 && axis != 2) throw std::invalid_argument("axis must be 1 or 2");
    std::vector<Interval> parts;
    switch (g.kind()) {
        case RelKind::points:
            for (const auto& p : g.point_data()) {
                const Scalar& v = axis == 1 ? p.first : p.second;
                parts.emplace_back(v, v);
            }
            break;
        case RelKind::segments:
            for (const auto& s : g.segment_data()) parts.push_back(s.extent(axis));
            break;
        case RelKind::grid: {
            const Scalar w = g.ambient().length() / Scalar(g.grid_n());
            std::set<long> idx;
            for (const auto& c : g.grid_cells()) idx.insert(axis == 1 ? c.first : c.second);
            for (long i : idx)
                parts.emplace_back(g.ambient().lo + Scalar(i) * w, g.ambient().lo + Scalar(i + 1) * w);
            break;
        }
    }
    return IntervalSet(std::move(parts));
}

bool contains(const Relation& g, const Scalar& x, const Scalar& y) {
    if (!g.ambient().contains(x) || !g.ambient().contains(y))
        throw std::domain_error("point outside ambient square");
    switch (g.kind()) {
        case RelKind::points: {
            Point p{x, y};
            return std::binary_search(g.point_data().begin(), g.point_data().end(), p,
                                      [](const Point& a, const Point& b) { return cmp_point(a, b) < 0; });
        }
        case RelKind::segments:
            for (const auto& s : g.segment_data())
                if (s.contains(x, y)) return true;
            return false;
        case RelKind::grid: {
            const long n = g.grid_n();
            const Scalar w = g.ambient().length() / Scalar(n);
            auto cell_indices = [&](const Scalar& v) {
                // Closed-cell semantics: v on a cell boundary belongs to both
                // neighbours.
                Scalar u = (v - g.ambient().lo) / w;
                Int f = u.floor();
                std::vector<long> out;
                long fi = f.convert_to<long>();
                if (Scalar(Rat(f)) == u && fi - 1 >= 0 && fi - 1 < n) out.push_back(fi - 1);
                if (fi >= 0 && fi < n) out.push_back(fi);
                return out;
            };
            for (long i : cell_indices(x))
                for (long j : cell_indices(y))
                    if (g.grid_cells().count({i, j})) return true;
            return false;
        }
    }
    return false;
}

namespace {

// Union, over segments of g sharing this exact line, of their x-domains
// (domains of the underlying parameter for transposed lines).
IntervalSet same_line_cover(const Relation& g, const AffineSegment& line) {
    std::vector<Interval> parts;
    for (const auto& s : g.segment_data()) {
        if (s.transposed == line.transposed && s.slope == line.slope && s.intercept == line.intercept)
            parts.emplace_back(s.xlo, s.xhi);
    }
    return IntervalSet(std::move(parts));
}

}  // namespace

bool subset(const Relation& h, const Relation& g) {
    if (h.ambient() != g.ambient()) throw std::domain_error("subset requires a common ambient interval");
    if (h.is_empty()) return true;
    if (g.is_empty()) return false;

    if (h.kind() == RelKind::points) {
        for (const auto& p : h.point_data())
            if (!contains(g, p.first, p.second)) return false;
        return true;
    }
    if (h.kind() == RelKind::segments) {
        if (g.kind() == RelKind::segments) {
            for (const auto& s : h.segment_data()) {
                if (s.is_degenerate()) {
                    const Scalar x = s.transposed ? s.value_at(s.xlo) : s.xlo;
                    const Scalar y = s.transposed ? s.xlo : s.value_at(s.xlo);
                    if (!contains(g, x, y)) return false;
                    continue;
                }
                // A nondegenerate segment can only be covered along its own
                // line: distinct lines meet it in at most one point each.
                if (!same_line_cover(g, s).contains_set(IntervalSet({Interval(s.xlo, s.xhi)}))) return false;
            }
            return true;
        }
        if (g.kind() == RelKind::points) {
            for (const auto& s : h.segment_data()) {
                if (!s.is_degenerate()) return false;  // infinite vs finite
                const Scalar x = s.transposed ? s.value_at(s.xlo) : s.xlo;
                const Scalar y = s.transposed ? s.xlo : s.value_at(s.xlo);
                if (!contains(g, x, y)) return false;
            }
            return true;
        }
        throw std::invalid_argument("subset: segments vs grid is not supported");
    }
    // h is a grid bitmap.
    if (g.kind() == RelKind::grid) {
        if (h.grid_n() != g.grid_n()) throw std::invalid_argument("subset: grid resolutions differ");
        return std::includes(g.grid_cells().begin(), g.grid_cells().end(), h.grid_cells().begin(),
                             h.grid_cells().end());
    }
    return false;  // a nonempty cell has interior, points/segments do not
}

Relation union_of(const Relation& g, const Relation& h) {
    if (g.ambient() != h.ambient()) throw std::domain_error("union requires a common ambient interval");
    if (g.is_empty()) return h;
    if (h.is_empty()) return g;
    if (g.kind() != h.kind()) throw std::invalid_argument("mixed representation kinds; convert first");
    switch (g.kind()) {
        case RelKind::points: {
            std::vector<Point> pts = g.point_data();
            pts.insert(pts.end(), h.point_data().begin(), h.point_data().end());
            return Relation::points(g.ambient(), std::move(pts));
        }
        case RelKind::segments: {
            std::vector<AffineSegment> segs = g.segment_data();
            segs.insert(segs.end(), h.segment_data().begin(), h.segment_data().end());
            return Relation::segments(g.ambient(), std::move(segs));
        }
        case RelKind::grid: {
            if (g.grid_n() != h.grid_n()) throw std::invalid_argument("union: grid resolutions differ");
            std::set<Cell> cells = g.grid_cells();
            cells.insert(h.grid_cells().begin(), h.grid_cells().end());
            return Relation::grid(g.ambient(), g.grid_n(), std::move(cells));
        }
    }
    throw std::logic_error("unreachable");
}

GraphVerdict is_usc_graph(const Relation& g) {
    if (g.is_empty()) throw std::domain_error("empty relation is not a graph");
    IntervalSet whole({Interval(g.ambient().lo, g.ambient().hi)});
    if (project(g, 1) != whole) return GraphVerdict::not_graph;
    return project(g, 2) == whole ? GraphVerdict::surjective_graph : GraphVerdict::graph;
}

}  // namespace relent
