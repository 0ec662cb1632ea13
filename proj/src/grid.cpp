#include "relent/grid.hpp"

#include <algorithm>

namespace relent {

std::pair<long, long> GridCover::cell_span(const Scalar& a, const Scalar& b) const {
    // Cell i = [lo + i w, lo + (i+1) w] meets [a, b] iff i w <= b - lo and
    // (i+1) w >= a - lo. With u = (a - lo)/w and v = (b - lo)/w that is
    // i in [u - 1, v], i.e. i from ceil(u - 1) = (u integral ? u - 1 : floor u)
    // to floor(v), clamped to [0, n).
    Scalar w = width();
    Scalar u = (a - ambient.lo) / w;
    Scalar v = (b - ambient.lo) / w;
    Int uf = u.floor();
    long lo_idx = (Scalar(Rat(uf)) == u) ? uf.convert_to<long>() - 1 : uf.convert_to<long>();
    long hi_idx = v.floor().convert_to<long>();
    lo_idx = std::max(lo_idx, 0L);
    hi_idx = std::min(hi_idx, n - 1);
    return {lo_idx, hi_idx};
}

namespace {

void add_box(const GridCover& gc, const Scalar& x0, const Scalar& x1, const Scalar& y0, const Scalar& y1,
             std::set<Cell>& cells) {
    auto [ia, ib] = gc.cell_span(x0, x1);
    auto [ja, jb] = gc.cell_span(y0, y1);
    for (long i = ia; i <= ib; ++i)
        for (long j = ja; j <= jb; ++j) cells.emplace(i, j);
}

void rasterize_plain_segment(const GridCover& gc, const AffineSegment& s, std::set<Cell>& cells) {
    auto [ia, ib] = gc.cell_span(s.xlo, s.xhi);
    for (long i = ia; i <= ib; ++i) {
        Interval col = gc.cell(i);
        Scalar a = max(s.xlo, col.lo);
        Scalar b = min(s.xhi, col.hi);
        if (a > b) continue;
        Scalar ya = s.value_at(a);
        Scalar yb = s.value_at(b);
        if (ya > yb) std::swap(ya, yb);
        auto [ja, jb] = gc.cell_span(ya, yb);
        for (long j = ja; j <= jb; ++j) cells.emplace(i, j);
    }
}

}  // namespace

Relation rasterize(const Relation& g, long n) {
    GridCover gc(g.ambient(), n);
    std::set<Cell> cells;
    switch (g.kind()) {
        case RelKind::points:
            for (const auto& p : g.point_data()) add_box(gc, p.first, p.first, p.second, p.second, cells);
            break;
        case RelKind::segments:
            for (const auto& s : g.segment_data()) {
                if (!s.transposed) {
                    rasterize_plain_segment(gc, s, cells);
                } else {
                    std::set<Cell> sub;
                    AffineSegment plain = s;
                    plain.transposed = false;
                    rasterize_plain_segment(gc, plain, sub);
                    for (const auto& c : sub) cells.emplace(c.second, c.first);
                }
            }
            break;
        case RelKind::grid: {
            if (g.grid_n() == n) return g;
            GridCover src(g.ambient(), g.grid_n());
            for (const auto& c : g.grid_cells()) {
                Interval cx = src.cell(c.first);
                Interval cy = src.cell(c.second);
                add_box(gc, cx.lo, cx.hi, cy.lo, cy.hi, cells);
            }
            break;
        }
    }
    return Relation::grid(g.ambient(), n, std::move(cells));
}

TransitionMatrix TransitionMatrix::transpose() const {
    TransitionMatrix t;
    t.n = n;
    t.rows.assign(n, {});
    for (long i = 0; i < n; ++i)
        for (long j : rows[i]) t.rows[j].push_back(i);
    for (auto& r : t.rows) std::sort(r.begin(), r.end());
    return t;
}

TransitionMatrix transition_matrix(const Relation& bitmap) {
    TransitionMatrix m;
    m.n = bitmap.grid_n();
    m.rows.assign(m.n, {});
    for (const auto& c : bitmap.grid_cells()) m.rows[c.first].push_back(c.second);
    for (auto& r : m.rows) std::sort(r.begin(), r.end());
    return m;
}

Int walk_count(const TransitionMatrix& m, long steps) {
    std::vector<Int> v(m.n, 1);
    for (long s = 0; s < steps; ++s) {
        std::vector<Int> next(m.n, 0);
        for (long i = 0; i < m.n; ++i) {
            Int acc = 0;
            for (long j : m.rows[i]) acc += v[j];
            next[i] = std::move(acc);
        }
        v = std::move(next);
    }
    Int total = 0;
    for (const auto& x : v) total += x;
    return total;
}

}  // namespace relent
