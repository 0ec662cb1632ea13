#include "relent/wellaligned.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace relent {

namespace {

// ---------------------------------------------------------------------------
// Per-piece coordinate views.
//
// Along its parameter u, a stored segment has affine coordinates
//   plain:       x(u) = u,            y(u) = s u + e
//   transposed:  x(u) = s u + e,      y(u) = u        (vertical pieces)
// so every split and sign test below reduces to affine endpoint algebra.
// ---------------------------------------------------------------------------

struct CoordView {
    Scalar ax, bx;  // x(u) = ax u + bx
    Scalar ay, by;  // y(u) = ay u + by
};

CoordView view_of(const AffineSegment& s) {
    if (s.transposed) return {s.slope, s.intercept, Scalar(1), Scalar(0)};
    return {Scalar(1), Scalar(0), s.slope, s.intercept};
}

Point point_at(const AffineSegment& s, const Scalar& u) {
    CoordView v = view_of(s);
    return {v.ax * u + v.bx, v.ay * u + v.by};
}

struct YSplit {
    std::vector<AffineSegment> ge, le, on;          // exact closed parts
    std::vector<AffineSegment> gt_closure, lt_closure;  // closures of nonempty strict parts
};

AffineSegment sub_piece(const AffineSegment& s, const Scalar& lo, const Scalar& hi) {
    return AffineSegment(s.slope, s.intercept, lo, hi, s.transposed);
}

YSplit split_segment_by_y(const AffineSegment& s, const Scalar& b) {
    YSplit out;
    CoordView v = view_of(s);
    Scalar ylo = v.ay * s.xlo + v.by;
    Scalar yhi = v.ay * s.xhi + v.by;

    if (v.ay.is_zero()) {
        int c = Scalar::cmp(ylo, b);
        if (c > 0) {
            out.ge.push_back(s);
            out.gt_closure.push_back(s);
        } else if (c < 0) {
            out.le.push_back(s);
            out.lt_closure.push_back(s);
        } else {
            out.ge.push_back(s);
            out.le.push_back(s);
            out.on.push_back(s);
        }
        return out;
    }

    Scalar ymin = min(ylo, yhi), ymax = max(ylo, yhi);
    Scalar ustar = (b - v.by) / v.ay;  // y(ustar) = b
    auto clamp = [&](const Scalar& u) { return max(s.xlo, min(s.xhi, u)); };

    if (ymax >= b) {
        // {y >= b} is one closed parameter interval ending at the max side.
        Scalar lo = v.ay.sign() > 0 ? clamp(ustar) : s.xlo;
        Scalar hi = v.ay.sign() > 0 ? s.xhi : clamp(ustar);
        out.ge.push_back(sub_piece(s, lo, hi));
        if (ymax > b) out.gt_closure.push_back(out.ge.back());
    }
    if (ymin <= b) {
        Scalar lo = v.ay.sign() > 0 ? s.xlo : clamp(ustar);
        Scalar hi = v.ay.sign() > 0 ? clamp(ustar) : s.xhi;
        out.le.push_back(sub_piece(s, lo, hi));
        if (ymin < b) out.lt_closure.push_back(out.le.back());
    }
    if (ymin <= b && b <= ymax) out.on.push_back(sub_piece(s, ustar, ustar));
    return out;
}

// Minimum of y - x over a closed piece, with the argmin point.
std::pair<Scalar, Point> min_diag_excess(const AffineSegment& s) {
    CoordView v = view_of(s);
    Scalar d_lo = (v.ay - v.ax) * s.xlo + (v.by - v.bx);
    Scalar d_hi = (v.ay - v.ax) * s.xhi + (v.by - v.bx);
    return d_lo <= d_hi ? std::make_pair(d_lo, point_at(s, s.xlo)) : std::make_pair(d_hi, point_at(s, s.xhi));
}

// ---------------------------------------------------------------------------
// Fiber envelopes: r_G (max of the fiber) and ell_G (min) as piecewise affine
// functions of the height t, plus isolated overrides from horizontal pieces.
// ---------------------------------------------------------------------------

struct Contribution {
    Interval range;   // heights t it covers
    Scalar a, c;      // fiber value a t + c on that range
};

struct EnvOverride {
    Scalar t, value;
};

void fiber_contributions(const Relation& g, std::vector<Contribution>& affine, std::vector<EnvOverride>& both_ends_lo,
                         std::vector<EnvOverride>& both_ends_hi) {
    if (g.kind() == RelKind::points) {
        for (const auto& p : g.point_data()) {
            both_ends_lo.push_back({p.second, p.first});
            both_ends_hi.push_back({p.second, p.first});
        }
        return;
    }
    for (const auto& s : g.segment_data()) {
        if (!s.transposed && s.slope.is_zero()) {
            // Horizontal: a full interval fiber at one height.
            both_ends_lo.push_back({s.intercept, s.xlo});
            both_ends_hi.push_back({s.intercept, s.xhi});
            continue;
        }
        if (s.transposed) {
            // Transposed: the height is the parameter, x(t) = s t + e.
            affine.push_back({Interval(s.xlo, s.xhi), s.slope, s.intercept});
            continue;
        }
        Interval yr = s.y_range();
        Scalar inv = s.slope.reciprocal();
        affine.push_back({yr, inv, -(s.intercept / s.slope)});
    }
}

// Exact extreme of the fiber {x : (x, t) in G}; empty fiber throws.
Scalar fiber_extreme(const Relation& g, const Scalar& t, bool want_max) {
    if (g.kind() == RelKind::grid) {
        bool found = false;
        Scalar best;
        GridCover gc(g.ambient(), g.grid_n());
        auto [ja, jb] = gc.cell_span(t, t);
        for (const auto& cell : g.grid_cells()) {
            if (cell.second < ja || cell.second > jb) continue;
            Interval cx = gc.cell(cell.first);
            Scalar v = want_max ? cx.hi : cx.lo;
            if (!found || (want_max ? v > best : v < best)) best = v, found = true;
        }
        if (!found) throw std::domain_error("outside range projection");
        return best;
    }
    std::vector<Contribution> affine;
    std::vector<EnvOverride> lo_ends, hi_ends;
    fiber_contributions(g, affine, lo_ends, hi_ends);
    bool found = false;
    Scalar best;
    auto consider = [&](const Scalar& v) {
        if (!found || (want_max ? v > best : v < best)) best = v, found = true;
    };
    for (const auto& ct : affine)
        if (ct.range.contains(t)) consider(ct.a * t + ct.c);
    for (const auto& o : (want_max ? hi_ends : lo_ends))
        if (o.t == t) consider(o.value);
    if (!found) throw std::domain_error("outside range projection");
    return best;
}

// Candidate heights where either envelope of g can change shape: range
// endpoints, override heights, pairwise crossings of the affine pieces.
std::vector<Scalar> envelope_breakpoints(const Relation& g) {
    std::vector<Contribution> affine;
    std::vector<EnvOverride> lo_ends, hi_ends;
    fiber_contributions(g, affine, lo_ends, hi_ends);
    std::vector<Scalar> out;
    for (const auto& ct : affine) {
        out.push_back(ct.range.lo);
        out.push_back(ct.range.hi);
    }
    for (const auto& o : lo_ends) out.push_back(o.t);
    for (size_t i = 0; i < affine.size(); ++i) {
        for (size_t j = i + 1; j < affine.size(); ++j) {
            if (affine[i].a == affine[j].a) continue;
            Scalar t = (affine[j].c - affine[i].c) / (affine[i].a - affine[j].a);
            if (affine[i].range.contains(t) && affine[j].range.contains(t)) out.push_back(t);
        }
    }
    std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Heights t with r_G(t) equal to a given value (region boundaries for psi).
void upper_envelope_preimage(const Relation& g, const Scalar& value, std::vector<Scalar>& out) {
    std::vector<Contribution> affine;
    std::vector<EnvOverride> lo_ends, hi_ends;
    fiber_contributions(g, affine, lo_ends, hi_ends);
    for (const auto& ct : affine) {
        if (ct.a.is_zero()) {
            if (ct.c == value) {
                out.push_back(ct.range.lo);
                out.push_back(ct.range.hi);
            }
            continue;
        }
        Scalar t = (value - ct.c) / ct.a;
        if (ct.range.contains(t)) out.push_back(t);
    }
    for (const auto& o : hi_ends)
        if (o.value == value) out.push_back(o.t);
}

Point point_with_coordinate(const Relation& g, int axis, const Scalar& w) {
    if (g.kind() == RelKind::points) {
        for (const auto& p : g.point_data())
            if ((axis == 1 ? p.first : p.second) == w) return p;
    } else if (g.kind() == RelKind::segments) {
        for (const auto& s : g.segment_data()) {
            CoordView v = view_of(s);
            Scalar a = axis == 1 ? v.ax : v.ay;
            Scalar c = axis == 1 ? v.bx : v.by;
            if (a.is_zero()) {
                if (c == w) return point_at(s, s.xlo);
                continue;
            }
            Scalar u = (w - c) / a;
            if (s.xlo <= u && u <= s.xhi) return point_at(s, u);
        }
    }
    throw std::logic_error("no point with the requested coordinate");
}

}  // namespace

DeltaSplit delta_split(const Relation& a, const Scalar& b) {
    if (a.kind() == RelKind::grid) throw std::invalid_argument("delta_split does not support grid bitmaps");
    if (!(a.ambient().lo < b && b < a.ambient().hi))
        throw std::domain_error("split level must lie strictly inside the ambient interval");

    if (a.kind() == RelKind::points) {
        std::vector<Point> plus, minus, on;
        for (const auto& p : a.point_data()) {
            int c = Scalar::cmp(p.second, b);
            (c > 0 ? plus : c < 0 ? minus : on).push_back(p);
        }
        return DeltaSplit{Relation::points(a.ambient(), std::move(plus)),
                          Relation::points(a.ambient(), std::move(minus)),
                          Relation::points(a.ambient(), std::move(on))};
    }

    std::vector<AffineSegment> plus, minus, on;
    for (const auto& s : a.segment_data()) {
        YSplit ys = split_segment_by_y(s, b);
        plus.insert(plus.end(), ys.gt_closure.begin(), ys.gt_closure.end());
        minus.insert(minus.end(), ys.lt_closure.begin(), ys.lt_closure.end());
        on.insert(on.end(), ys.on.begin(), ys.on.end());
    }
    return DeltaSplit{Relation::segments(a.ambient(), std::move(plus)),
                      Relation::segments(a.ambient(), std::move(minus)),
                      Relation::segments(a.ambient(), std::move(on))};
}

std::pair<Scalar, Scalar> r_ell(const Relation& g, const Scalar& t) {
    Scalar lo = fiber_extreme(g, t, false);
    Scalar hi = fiber_extreme(g, t, true);
    return {lo, hi};
}

namespace {

// The y >= b / y <= b parts of a relation, as relations.
Relation part_ge(const Relation& g, const Scalar& b) {
    if (g.kind() == RelKind::points) {
        std::vector<Point> pts;
        for (const auto& p : g.point_data())
            if (p.second >= b) pts.push_back(p);
        return Relation::points(g.ambient(), std::move(pts));
    }
    std::vector<AffineSegment> segs;
    for (const auto& s : g.segment_data()) {
        YSplit ys = split_segment_by_y(s, b);
        segs.insert(segs.end(), ys.ge.begin(), ys.ge.end());
    }
    return Relation::segments(g.ambient(), std::move(segs));
}

Relation part_le(const Relation& g, const Scalar& b) {
    if (g.kind() == RelKind::points) {
        std::vector<Point> pts;
        for (const auto& p : g.point_data())
            if (p.second <= b) pts.push_back(p);
        return Relation::points(g.ambient(), std::move(pts));
    }
    std::vector<AffineSegment> segs;
    for (const auto& s : g.segment_data()) {
        YSplit ys = split_segment_by_y(s, b);
        segs.insert(segs.end(), ys.le.begin(), ys.le.end());
    }
    return Relation::segments(g.ambient(), std::move(segs));
}

// Closure of the strict part {y > b} (empty when the strict part is empty).
Relation part_gt_closure(const Relation& g, const Scalar& b) {
    if (g.kind() == RelKind::points) {
        std::vector<Point> pts;
        for (const auto& p : g.point_data())
            if (p.second > b) pts.push_back(p);
        return Relation::points(g.ambient(), std::move(pts));
    }
    std::vector<AffineSegment> segs;
    for (const auto& s : g.segment_data()) {
        YSplit ys = split_segment_by_y(s, b);
        segs.insert(segs.end(), ys.gt_closure.begin(), ys.gt_closure.end());
    }
    return Relation::segments(g.ambient(), std::move(segs));
}

Relation part_lt_closure(const Relation& g, const Scalar& b) {
    if (g.kind() == RelKind::points) {
        std::vector<Point> pts;
        for (const auto& p : g.point_data())
            if (p.second < b) pts.push_back(p);
        return Relation::points(g.ambient(), std::move(pts));
    }
    std::vector<AffineSegment> segs;
    for (const auto& s : g.segment_data()) {
        YSplit ys = split_segment_by_y(s, b);
        segs.insert(segs.end(), ys.lt_closure.begin(), ys.lt_closure.end());
    }
    return Relation::segments(g.ambient(), std::move(segs));
}

// Strict diagonal checks over one relation; returns a violating point.
std::optional<Point> find_not_strictly_above(const Relation& g) {
    if (g.kind() == RelKind::points) {
        for (const auto& p : g.point_data())
            if (!(p.second > p.first)) return p;
        return std::nullopt;
    }
    for (const auto& s : g.segment_data()) {
        auto [d, w] = min_diag_excess(s);
        if (!(d > Scalar(0))) return w;
    }
    return std::nullopt;
}

std::optional<Point> find_below_diagonal(const Relation& g) {
    if (g.kind() == RelKind::points) {
        for (const auto& p : g.point_data())
            if (p.second < p.first) return p;
        return std::nullopt;
    }
    for (const auto& s : g.segment_data()) {
        auto [d, w] = min_diag_excess(s);
        if (d < Scalar(0)) return w;
    }
    return std::nullopt;
}

std::optional<Point> find_not_strictly_below(const Relation& g) {
    if (g.kind() == RelKind::points) {
        for (const auto& p : g.point_data())
            if (!(p.second < p.first)) return p;
        return std::nullopt;
    }
    for (const auto& s : g.segment_data()) {
        CoordView v = view_of(s);
        // max of y - x over the piece
        Scalar d_lo = (v.ay - v.ax) * s.xlo + (v.by - v.bx);
        Scalar d_hi = (v.ay - v.ax) * s.xhi + (v.by - v.bx);
        if (!(max(d_lo, d_hi) < Scalar(0))) return point_at(s, d_lo >= d_hi ? s.xlo : s.xhi);
    }
    return std::nullopt;
}

}  // namespace

AlignmentCheck check_well_aligned(const Relation& l, const Relation& r, const Scalar& b) {
    if (l.is_empty() || r.is_empty()) throw std::domain_error("well-alignedness needs nonempty relations");
    if (l.ambient() != r.ambient()) throw std::domain_error("well-alignedness needs a common ambient interval");
    AlignmentCheck out;
    auto fail = [&](int clause, std::optional<Point> w) {
        out.ok = false;
        out.violated_clause = clause;
        out.witness = std::move(w);
        return out;
    };

    IntervalSet l_p2 = project(l, 2);
    IntervalSet r_p2 = project(r, 2);

    // (1) L_b^+ and L_b^- ∪ L_b nonempty; R entirely at or below b.
    if (!(l_p2.max() > b)) return fail(1, std::nullopt);
    if (!(l_p2.min() <= b)) return fail(1, std::nullopt);
    if (r_p2.max() > b) {
        Scalar t = r_p2.max();
        return fail(1, point_with_coordinate(r, 2, t));
    }

    // (2) strict/weak diagonal conditions on the split parts.
    Relation l_ge = part_ge(l, b);
    if (auto w = find_not_strictly_above(l_ge)) return fail(2, *w);
    Relation l_lt = part_lt_closure(l, b);
    if (auto w = find_below_diagonal(l_lt)) return fail(2, *w);
    if (auto w = find_not_strictly_below(r)) return fail(2, *w);

    // (3) p2(L_{<=b}) ∪ p1(L_{<=b}) ⊆ p2(R).
    Relation l_le = part_le(l, b);
    IntervalSet le_proj = project(l_le, 2).unite(project(l_le, 1));
    if (auto w = le_proj.point_outside(r_p2)) {
        Point wit = project(l_le, 2).contains(*w) ? point_with_coordinate(l_le, 2, *w)
                                                  : point_with_coordinate(l_le, 1, *w);
        return fail(3, wit);
    }

    // (4) p1(L_b^+) ∪ p1(R) ⊆ p2(L).
    Relation l_gt = part_gt_closure(l, b);
    IntervalSet lhs = project(l_gt, 1).unite(project(r, 1));
    if (auto w = lhs.point_outside(l_p2)) {
        Point wit = project(l_gt, 1).contains(*w) ? point_with_coordinate(l_gt, 1, *w)
                                                  : point_with_coordinate(r, 1, *w);
        return fail(4, wit);
    }
    return out;
}

namespace {

// Worst contraction ratio a_max = sup r_L(t)/t over p2(L) ∩ [b, inf) and the
// smallest k with a_max^k <= b. Requires the region to stay positive and
// a_max < 1 (guaranteed by clause 2 for well-aligned triples).
std::pair<Scalar, long> uniform_iteration_bound(const Relation& l, const Scalar& b) {
    IntervalSet region = project(l, 2).intersect_with(Interval(b, l.ambient().hi));
    if (region.is_empty()) throw std::domain_error("no heights at or above the split level");
    if (!(region.min() > Scalar(0)))
        throw std::domain_error("contraction bound needs strictly positive heights");

    std::vector<Scalar> cands = envelope_breakpoints(l);
    cands.push_back(b);
    for (const auto& part : region.parts()) {
        cands.push_back(part.lo);
        cands.push_back(part.hi);
    }
    bool found = false;
    Scalar a_max;
    for (const auto& t : cands) {
        if (!region.contains(t)) continue;
        Scalar ratio = fiber_extreme(l, t, true) / t;
        if (!found || ratio > a_max) a_max = ratio, found = true;
    }
    if (!found) throw std::logic_error("no ratio candidates");
    if (!(a_max < Scalar(1))) throw std::domain_error("L_b+ ∪ L_b touches the diagonal");

    Scalar pw = a_max;
    long k = 1;
    while (pw > b) {
        pw = pw * a_max;
        if (++k > 10000) throw std::logic_error("contraction bound failed to close");
    }
    return {a_max, k};
}

}  // namespace

long psi_value(const Relation& l, const Scalar& b, const Scalar& t) {
    IntervalSet p2 = project(l, 2);
    if (!p2.contains(t)) throw std::domain_error("outside range projection");
    if (t <= b) return 0;
    long guard = uniform_iteration_bound(l, b).second;
    Scalar u = t;
    long k = 0;
    while (true) {
        if (!p2.contains(u)) throw std::logic_error("alignment invariant broken: iterate left p2(L)");
        u = fiber_extreme(l, u, true);
        ++k;
        if (u <= b) return k;
        if (k > guard) throw std::logic_error("alignment invariant broken: iteration exceeded uniform bound");
    }
}

std::pair<long, long> psi_max(const Relation& l, const Scalar& b) {
    auto [a_max, uniform_k] = uniform_iteration_bound(l, b);
    IntervalSet p2 = project(l, 2);

    if (l.kind() == RelKind::points) {
        long best = 0;
        for (const auto& p : l.point_data()) best = std::max(best, psi_value(l, b, p.second));
        return {best, uniform_k};
    }

    // psi is constant between consecutive heights at which some iterate of
    // r_L meets an envelope breakpoint or the level b, so propagate those
    // thresholds backwards and sample every region once.
    std::vector<Scalar> boundary = envelope_breakpoints(l);
    boundary.push_back(b);
    std::vector<Scalar> frontier = boundary;
    for (long depth = 0; depth < uniform_k; ++depth) {
        std::vector<Scalar> next;
        for (const auto& v : frontier) upper_envelope_preimage(l, v, next);
        std::sort(next.begin(), next.end(), [](const Scalar& a, const Scalar& c) { return Scalar::cmp(a, c) < 0; });
        next.erase(std::unique(next.begin(), next.end()), next.end());
        boundary.insert(boundary.end(), next.begin(), next.end());
        if (boundary.size() > 200000) throw std::length_error("psi threshold propagation exceeded guard");
        frontier = std::move(next);
    }
    for (const auto& part : p2.parts()) {
        boundary.push_back(part.lo);
        boundary.push_back(part.hi);
    }
    std::sort(boundary.begin(), boundary.end(),
              [](const Scalar& a, const Scalar& c) { return Scalar::cmp(a, c) < 0; });
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

    std::vector<Scalar> cands;
    for (size_t i = 0; i < boundary.size(); ++i) {
        if (p2.contains(boundary[i])) cands.push_back(boundary[i]);
        if (i + 1 < boundary.size()) {
            Scalar mid = (boundary[i] + boundary[i + 1]) / Scalar(2);
            if (p2.contains(mid)) cands.push_back(mid);
        }
    }
    long best = 0;
    for (const auto& t : cands) best = std::max(best, psi_value(l, b, t));
    return {best, uniform_k};
}

Scalar epsilon_gap(const Relation& l, const Relation& r) {
    IntervalSet common = project(l, 2).intersect_with(project(r, 2));
    if (common.is_empty()) throw std::domain_error("range projections do not meet");

    std::vector<Scalar> cands;
    for (const auto& part : common.parts()) {
        cands.push_back(part.lo);
        cands.push_back(part.hi);
    }
    for (const auto& t : envelope_breakpoints(l)) cands.push_back(t);
    for (const auto& t : envelope_breakpoints(r)) cands.push_back(t);

    bool found = false;
    Scalar best;
    for (const auto& t : cands) {
        if (!common.contains(t)) continue;
        Scalar gap = fiber_extreme(r, t, false) - fiber_extreme(l, t, true);
        if (!found || gap < best) best = gap, found = true;
    }
    if (!found) throw std::logic_error("no gap candidates");
    return best;
}

namespace {

std::optional<Certificate> certify_one_side(const Relation& g, const std::vector<Scalar>& hints, bool on_inverse) {
    // Candidate split levels: hints plus representation breakpoints, kept
    // strictly inside (max(lo, 0), hi) — the machinery needs positive heights.
    std::vector<Scalar> bs = hints;
    if (g.kind() == RelKind::points) {
        std::vector<Scalar> ys;
        for (const auto& p : g.point_data()) ys.push_back(p.second);
        std::sort(ys.begin(), ys.end(), [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
        ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
        for (size_t i = 0; i < ys.size(); ++i) {
            bs.push_back(ys[i]);
            if (i + 1 < ys.size()) bs.push_back((ys[i] + ys[i + 1]) / Scalar(2));
        }
    } else {
        for (const auto& s : g.segment_data()) {
            Interval yr = s.extent(2);
            bs.push_back(yr.lo);
            bs.push_back(yr.hi);
            // Height of the diagonal crossing, if the piece meets it.
            CoordView v = view_of(s);
            Scalar da = v.ay - v.ax, dc = v.by - v.bx;
            if (!da.is_zero()) {
                Scalar u = -(dc / da);
                if (s.xlo <= u && u <= s.xhi) bs.push_back(v.ay * u + v.by);
            }
        }
    }
    Scalar lo_open = max(g.ambient().lo, Scalar(0));
    std::vector<Scalar> filtered;
    for (const auto& b : bs)
        if (lo_open < b && b < g.ambient().hi) filtered.push_back(b);
    std::sort(filtered.begin(), filtered.end(),
              [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    filtered.erase(std::unique(filtered.begin(), filtered.end()), filtered.end());

    auto finish = [&](Relation l, Relation r, const Scalar& b) -> std::optional<Certificate> {
        AlignmentCheck chk = check_well_aligned(l, r, b);
        if (!chk.ok) return std::nullopt;
        Scalar eps = epsilon_gap(l, r);
        if (!(eps > Scalar(0))) return std::nullopt;
        auto [psi, k] = psi_max(l, b);
        Certificate cert;
        cert.b = b;
        cert.l = std::move(l);
        cert.r = std::move(r);
        cert.on_inverse = on_inverse;
        cert.psi = psi;
        cert.uniform_k = k;
        cert.epsilon = eps;
        cert.lower_bound = std::log(2.0) / static_cast<double>(psi + 2);
        cert.l_b_nonempty = !delta_split(cert.l, b).on.is_empty();
        return cert;
    };

    if (g.kind() == RelKind::segments) {
        for (const auto& b : filtered) {
            // Maximal candidates: pieces weakly above the diagonal for L,
            // pieces strictly below with heights <= b for R.
            std::vector<AffineSegment> l_pieces, r_pieces;
            for (const auto& s : g.segment_data()) {
                YSplit ys = split_segment_by_y(s, b);
                std::vector<AffineSegment> parts = ys.ge;
                parts.insert(parts.end(), ys.le.begin(), ys.le.end());
                for (const auto& piece : parts) {
                    // Split once more at the diagonal crossing.
                    CoordView v = view_of(piece);
                    Scalar da = v.ay - v.ax, dc = v.by - v.bx;
                    std::vector<AffineSegment> halves;
                    Scalar u;
                    bool crosses = false;
                    if (!da.is_zero()) {
                        u = -(dc / da);
                        crosses = piece.xlo < u && u < piece.xhi;
                    }
                    if (crosses) {
                        halves.push_back(sub_piece(piece, piece.xlo, u));
                        halves.push_back(sub_piece(piece, u, piece.xhi));
                    } else {
                        halves.push_back(piece);
                    }
                    for (const auto& h : halves) {
                        auto [dmin, wmin] = min_diag_excess(h);
                        CoordView hv = view_of(h);
                        Scalar d_lo = (hv.ay - hv.ax) * h.xlo + (hv.by - hv.bx);
                        Scalar d_hi = (hv.ay - hv.ax) * h.xhi + (hv.by - hv.bx);
                        Scalar dmax = max(d_lo, d_hi);
                        Interval yr = h.extent(2);
                        if (dmin >= Scalar(0)) l_pieces.push_back(h);
                        if (dmax < Scalar(0) && yr.hi <= b) r_pieces.push_back(h);
                    }
                }
            }
            if (l_pieces.empty() || r_pieces.empty()) continue;
            Relation lr = Relation::segments(g.ambient(), l_pieces);
            Relation rr = Relation::segments(g.ambient(), r_pieces);
            if (auto cert = finish(std::move(lr), std::move(rr), b)) return cert;
        }
        return std::nullopt;
    }

    // Finite relations: exhaustive over admissible subsets.
    const auto& pts = g.point_data();
    if (pts.size() > 12) throw std::length_error("finite certificate search is guarded at 12 points");
    for (const auto& b : filtered) {
        std::vector<Point> pl, pr;
        for (const auto& p : pts) {
            if (p.second >= b ? p.second > p.first : p.second >= p.first) pl.push_back(p);
            if (p.second <= b && p.second < p.first) pr.push_back(p);
        }
        if (pl.empty() || pr.empty()) continue;
        for (unsigned long lm = 1; lm < (1ul << pl.size()); ++lm) {
            std::vector<Point> lsel;
            for (size_t i = 0; i < pl.size(); ++i)
                if (lm & (1ul << i)) lsel.push_back(pl[i]);
            for (unsigned long rm = 1; rm < (1ul << pr.size()); ++rm) {
                std::vector<Point> rsel;
                for (size_t i = 0; i < pr.size(); ++i)
                    if (rm & (1ul << i)) rsel.push_back(pr[i]);
                if (auto cert = finish(Relation::points(g.ambient(), lsel), Relation::points(g.ambient(), rsel), b))
                    return cert;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Certificate> certify(const Relation& g, const std::vector<Scalar>& hints) {
    if (g.kind() == RelKind::grid) throw std::invalid_argument("certify supports finite and segment relations");
    if (g.is_empty()) return std::nullopt;
    if (auto cert = certify_one_side(g, hints, false)) return cert;
    return certify_one_side(inverse(g), hints, true);
}

std::vector<Scalar> concat(const std::vector<std::vector<Scalar>>& parts) {
    std::vector<Scalar> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

BranchingStep branching_step(const Relation& l, const Relation& r, const Scalar& b, const Scalar& t) {
    long psi = psi_value(l, b, t);
    BranchingStep step;
    step.block.push_back(t);
    Scalar u = t;
    for (long i = 0; i < psi; ++i) {
        u = fiber_extreme(l, u, true);
        step.block.push_back(u);
    }
    step.t0 = fiber_extreme(l, u, true);
    step.t1 = fiber_extreme(r, u, false);
    return step;
}

std::vector<std::vector<Scalar>> replay_branching(const Relation& g, const Certificate& cert, const Scalar& t,
                                                  int depth) {
    if (depth < 1 || depth > 16) throw std::invalid_argument("replay depth out of range");
    const Relation target = cert.on_inverse ? inverse(g) : g;
    const Relation& l = cert.l;
    const Relation& r = cert.r;
    IntervalSet l_p2 = project(l, 2);
    IntervalSet r_p2 = project(r, 2);
    if (!(t > cert.b) || !l_p2.contains(t)) throw std::domain_error("start height must lie in p2(L_b+)");

    struct Node {
        std::vector<Scalar> prefix;  // ends with the last branching value
        Scalar anchor;               // height whose descent block was just emitted
        bool leaf_pending;           // prefix currently ends at a bare branching value
    };

    BranchingStep first = branching_step(l, r, cert.b, t);
    std::vector<Node> level;
    level.push_back({first.block, t, false});

    for (int d = 0; d < depth; ++d) {
        std::vector<Node> next;
        next.reserve(level.size() * 2);
        for (const auto& node : level) {
            BranchingStep st = branching_step(l, r, cert.b, node.anchor);
            if (!(st.t1 - st.t0 >= cert.epsilon)) throw std::logic_error("branching gap fell below epsilon");
            // 0-child: append t0, then the block of ell_R(t0).
            Node c0;
            c0.prefix = node.prefix;
            c0.prefix.push_back(st.t0);
            Scalar a0 = fiber_extreme(r, st.t0, false);
            BranchingStep b0 = branching_step(l, r, cert.b, a0);
            c0.prefix.insert(c0.prefix.end(), b0.block.begin(), b0.block.end());
            c0.anchor = a0;
            c0.leaf_pending = false;
            // 1-child: append the block of t1 (which starts with t1).
            Node c1;
            c1.prefix = node.prefix;
            BranchingStep b1 = branching_step(l, r, cert.b, st.t1);
            c1.prefix.insert(c1.prefix.end(), b1.block.begin(), b1.block.end());
            c1.anchor = st.t1;
            c1.leaf_pending = false;
            next.push_back(std::move(c0));
            next.push_back(std::move(c1));
        }
        level = std::move(next);
    }

    // Pad to a common length with valid continuations: from a height in
    // p2(L) descend along r_L, otherwise jump through ell_R (clauses 3 and 4
    // keep this closed).
    size_t target_len = 0;
    for (const auto& node : level) target_len = std::max(target_len, node.prefix.size());
    std::vector<std::vector<Scalar>> out;
    for (auto& node : level) {
        std::vector<Scalar> seq = std::move(node.prefix);
        Scalar cur = seq.back();
        while (seq.size() < target_len) {
            if (l_p2.contains(cur)) {
                cur = fiber_extreme(l, cur, true);
            } else if (r_p2.contains(cur)) {
                cur = fiber_extreme(r, cur, false);
            } else {
                throw std::logic_error("padding left both range projections");
            }
            seq.push_back(cur);
        }
        for (size_t i = 0; i + 1 < seq.size(); ++i) {
            if (!contains(target, seq[i + 1], seq[i])) throw std::logic_error("replayed prefix is not a Mahavier member");
        }
        out.push_back(std::move(seq));
    }
    return out;
}

}  // namespace relent
