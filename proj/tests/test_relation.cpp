#include "relent/relation.hpp"

#include "relent/gallery.hpp"
#include "relent/grid.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace relent;
using relent::testing::rat;
using relent::testing::unit;

namespace {

const Relation& hab() {
    static Relation g = gallery("H_ab");
    return g;
}

// The steep branch of H_ab (canonical order puts the slope-b branch first).
Relation hab_L() { return Relation::segments(unit(), {hab().segment_data()[1]}); }
Relation hab_R() { return Relation::segments(unit(), {hab().segment_data()[0]}); }

}  // namespace

TEST_CASE("inverse examples") {
    Relation p = Relation::points(unit(), {{Scalar(0), Scalar(1)}});
    CHECK(inverse(p) == Relation::points(unit(), {{Scalar(1), Scalar(0)}}));

    // segment y = ax on [u, v] inverts to y = x/a on [au, av]
    Scalar a = default_a_hab();
    Relation s = Relation::segments(unit(), {AffineSegment(a, Scalar(0), rat(1, 8), rat(1, 4))});
    Relation expect = Relation::segments(
        unit(), {AffineSegment(a.reciprocal(), Scalar(0), a * rat(1, 8), a * rat(1, 4))});
    CHECK(inverse(s) == expect);
}

TEST_CASE("inverse is an involution on every representation") {
    for (const auto& name : gallery_names()) {
        Relation g = gallery(name);
        CHECK(inverse(inverse(g)) == g);
        Relation bm = rasterize(g, 8);
        CHECK(inverse(inverse(bm)) == bm);
    }
    // Horizontal pieces invert to vertical (transposed) ones and back.
    Relation h = Relation::segments(unit(), {AffineSegment(Scalar(0), rat(1, 2), Scalar(0), rat(1, 4))});
    Relation v = inverse(h);
    CHECK(v.segment_data().at(0).transposed);
    CHECK(inverse(v) == h);
    CHECK(contains(v, rat(1, 2), rat(1, 8)));
    CHECK(!contains(v, rat(1, 2), rat(1, 2)));
}

TEST_CASE("projection examples") {
    Scalar a = default_a_hab();
    Scalar b = default_b_hab();
    // L-part of H_ab projects onto [b/a, 1] along the second axis
    CHECK(project(hab_L(), 2) == IntervalSet({Interval(b / a, Scalar(1))}));

    Relation pts = Relation::points(unit(), {{Scalar(0), Scalar(1)}, {rat(3, 4), Scalar(0)}});
    IntervalSet p1 = project(pts, 1);
    CHECK(p1 == IntervalSet({Interval(Scalar(0), Scalar(0)), Interval(rat(3, 4), rat(3, 4))}));

    std::set<Cell> all;
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) all.emplace(i, j);
    Relation full = Relation::grid(unit(), 4, all);
    CHECK(project(full, 2) == IntervalSet({Interval(Scalar(0), Scalar(1))}));
}

TEST_CASE("projection of the inverse swaps axes exactly") {
    for (const auto& name : gallery_names()) {
        Relation g = gallery(name);
        CHECK(project(inverse(g), 1) == project(g, 2));
        CHECK(project(inverse(g), 2) == project(g, 1));
    }
}

TEST_CASE("membership examples") {
    Relation h2 = gallery("H_thm2");
    Scalar a = default_a_hab();
    CHECK(contains(h2, a.reciprocal(), Scalar(1)));       // y = a x at x = 1/a
    CHECK(!contains(h2, rat(1, 2), rat(1, 2)));           // neither branch fixes 1/2
    CHECK_THROWS_AS(contains(h2, Scalar(2), Scalar(0)), std::domain_error);
}

TEST_CASE("subset examples") {
    CHECK(subset(hab_L(), hab()));
    CHECK(subset(hab(), gallery("H_thm11")));
    CHECK(subset(hab(), gallery("H_thm2")));
    CHECK(!subset(gallery("H_thm2"), hab()));  // (0,0) separates them
    // A nondegenerate segment is never inside a finite point set.
    Relation pts = Relation::points(unit(), {{Scalar(0), Scalar(0)}});
    CHECK(!subset(hab_L(), pts));
    // Split pieces of one line are still covered by the whole line.
    Relation split = Relation::segments(
        unit(), {AffineSegment(Scalar(2), Scalar(0), Scalar(0), rat(1, 8)),
                 AffineSegment(Scalar(2), Scalar(0), rat(1, 8), rat(1, 4))});
    Relation whole = Relation::segments(unit(), {AffineSegment(Scalar(2), Scalar(0), Scalar(0), rat(1, 2))});
    CHECK(subset(split, whole));
    CHECK(!subset(whole, split));
}

TEST_CASE("subset is a partial order on canonical finite relations") {
    std::mt19937 rng(23);
    std::vector<Relation> rels;
    for (int i = 0; i < 24; ++i) rels.push_back(relent::testing::random_finite(rng, 5));
    for (const auto& g : rels) CHECK(subset(g, g));
    for (const auto& g : rels)
        for (const auto& h : rels) {
            if (subset(g, h) && subset(h, g)) CHECK(g == h);
            for (const auto& k : rels)
                if (subset(g, h) && subset(h, k)) CHECK(subset(g, k));
        }
}

TEST_CASE("union examples") {
    CHECK(union_of(hab_L(), hab_R()) == hab());
    Relation empty = Relation::empty(unit(), RelKind::segments);
    CHECK(union_of(hab(), empty) == hab());
    CHECK(union_of(empty, hab()) == hab());
    CHECK_THROWS_AS(union_of(hab(), gallery("F4")), std::invalid_argument);

    Relation g1 = Relation::grid(unit(), 2, {{0, 0}});
    Relation g2 = Relation::grid(unit(), 2, {{1, 1}});
    CHECK(union_of(g1, g2) == Relation::grid(unit(), 2, {{0, 0}, {1, 1}}));
    CHECK(union_of(g1, g1) == g1);
    CHECK(union_of(g1, g2) == union_of(g2, g1));
}

TEST_CASE("usc graph verdicts") {
    CHECK(is_usc_graph(gallery("H_thm11")) == GraphVerdict::graph);
    CHECK(is_usc_graph(gallery("H_thm2")) == GraphVerdict::surjective_graph);
    CHECK(is_usc_graph(gallery("taletoti")) == GraphVerdict::surjective_graph);
    CHECK(is_usc_graph(gallery("H_ab")) == GraphVerdict::not_graph);
    CHECK(is_usc_graph(gallery("tent")) == GraphVerdict::surjective_graph);
    CHECK_THROWS_AS(is_usc_graph(Relation::empty(unit(), RelKind::points)), std::domain_error);
}

TEST_CASE("canonical form merges collinear pieces and absorbs covered points") {
    Relation merged = Relation::segments(
        unit(), {AffineSegment(Scalar(1), Scalar(0), Scalar(0), rat(1, 2)),
                 AffineSegment(Scalar(1), Scalar(0), rat(1, 2), Scalar(1)),
                 AffineSegment(rat(1, 4), rat(1, 4), rat(1, 3), rat(1, 3))});  // point on the diagonal
    CHECK(merged == Relation::segments(unit(), {AffineSegment(Scalar(1), Scalar(0), Scalar(0), Scalar(1))}));
}
