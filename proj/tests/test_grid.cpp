#include "relent/grid.hpp"

#include "relent/gallery.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace relent;
using relent::testing::rat;
using relent::testing::unit;

namespace {

// Independent occupancy oracle: does the closed cell meet the segment?
// Restrict to the x-overlap and compare the y-interval of the piece there
// with the cell's y-extent, all in exact arithmetic.
bool cell_meets_segment(const Interval& cx, const Interval& cy, const AffineSegment& s) {
    REQUIRE(!s.transposed);
    Scalar a = max(cx.lo, s.xlo);
    Scalar b = min(cx.hi, s.xhi);
    if (a > b) return false;
    Scalar ya = s.value_at(a), yb = s.value_at(b);
    if (ya > yb) std::swap(ya, yb);
    return !(yb < cy.lo || ya > cy.hi);
}

}  // namespace

TEST_CASE("tent at n=2 fills the square") {
    Relation bm = rasterize(gallery("tent"), 2);
    CHECK(bm.grid_cells() == std::set<Cell>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("single corner point occupies one cell") {
    Relation p = Relation::points(unit(), {{Scalar(0), Scalar(1)}});
    CHECK(rasterize(p, 4).grid_cells() == std::set<Cell>{{0, 3}});
}

TEST_CASE("H_ab at n=4 against the exact cell oracle") {
    Relation g = gallery("H_ab");
    Relation bm = rasterize(g, 4);
    GridCover gc(unit(), 4);
    std::set<Cell> expect;
    for (long i = 0; i < 4; ++i) {
        for (long j = 0; j < 4; ++j) {
            for (const auto& s : g.segment_data())
                if (cell_meets_segment(gc.cell(i), gc.cell(j), s)) expect.emplace(i, j);
        }
    }
    CHECK(bm.grid_cells() == expect);
    CHECK(expect.size() == 10);
    // Both branches' derived cells, including the corner touch at (3/4, 1/4).
    std::set<Cell> derived{{0, 0}, {0, 1}, {0, 2}, {1, 2}, {1, 3},
                           {1, 0}, {2, 0}, {2, 1}, {3, 0}, {3, 1}};
    CHECK(expect == derived);
}

TEST_CASE("rasterization refines under grid doubling") {
    for (const auto& name : gallery_names()) {
        Relation g = gallery(name);
        Relation coarse = rasterize(g, 8);
        Relation fine = rasterize(g, 16);
        for (const auto& c : fine.grid_cells()) {
            CHECK(coarse.grid_cells().count({c.first / 2, c.second / 2}) == 1);
        }
    }
}

TEST_CASE("rasterize covers the relation") {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        Relation g = relent::testing::random_finite(rng);
        Relation bm = rasterize(g, 8);
        for (const auto& p : g.point_data()) CHECK(contains(bm, p.first, p.second));
    }
}

TEST_CASE("transition matrices") {
    TransitionMatrix tent2 = transition_matrix(rasterize(gallery("tent"), 2));
    CHECK(tent2.entry_count() == 4);
    TransitionMatrix f4 = transition_matrix(rasterize(gallery("F4"), 2));
    CHECK(f4.entry_count() == 4);
    TransitionMatrix empty = transition_matrix(Relation::grid(unit(), 4, {}));
    CHECK(empty.entry_count() == 0);
    CHECK(empty.empty());
}

TEST_CASE("matrix of the inverse is the transpose") {
    for (const auto& name : gallery_names()) {
        Relation g = gallery(name);
        TransitionMatrix m = transition_matrix(rasterize(g, 8));
        TransitionMatrix mi = transition_matrix(rasterize(inverse(g), 8));
        TransitionMatrix mt = m.transpose();
        CHECK(mi.rows == mt.rows);
    }
}

TEST_CASE("rebinning a bitmap keeps coverage") {
    Relation bm = rasterize(gallery("counterexample"), 4);
    Relation re = rasterize(bm, 8);
    CHECK(re.grid_n() == 8);
    Relation gc = gallery("counterexample");
    for (const auto& p : gc.point_data()) CHECK(contains(re, p.first, p.second));
}
