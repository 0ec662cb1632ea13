#include "relent/conjugacy.hpp"

#include "relent/gallery.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace relent;
using relent::testing::rat;
using relent::testing::unit;

TEST_CASE("phi maps B onto A branch by branch") {
    Relation a = gallery("A_joj5");
    Relation b = gallery("B_joj5");
    Homeomorphism phi = joj5_phi();

    Relation image = apply_homeo(b, phi);
    CHECK(image == a);
    CHECK(are_conjugate(b, a, phi));

    // The shallow branch maps onto y = ((b+1)/2) x on [0, 1].
    Scalar bb = default_b_taletoti();
    Scalar slope = (bb + Scalar(1)) / Scalar(2);
    Relation shallow = Relation::segments(b.ambient(),
                                          {AffineSegment(slope, (bb - Scalar(1)) / Scalar(2), Scalar(-1), Scalar(1))});
    Relation mapped = apply_homeo(shallow, phi);
    CHECK(mapped == Relation::segments(unit(), {AffineSegment(slope, Scalar(0), Scalar(0), Scalar(1))}));
}

TEST_CASE("applying a homeomorphism always yields a conjugate") {
    Homeomorphism shift = Homeomorphism::affine(unit(), Interval(Scalar(3), Scalar(5)));
    Homeomorphism joj = joj5_phi().inverse();  // [0,1] -> [-1,1]
    for (const auto& name : gallery_names()) {
        Relation g = gallery(name);
        if (g.ambient() != unit()) continue;
        CHECK(are_conjugate(g, apply_homeo(g, shift), shift));
        CHECK(are_conjugate(g, apply_homeo(g, joj), joj));
    }
    Relation bm = rasterize(gallery("tent"), 8);
    CHECK(are_conjugate(bm, apply_homeo(bm, shift), shift));
}

TEST_CASE("identity conjugacy and a negative case") {
    Relation hab = gallery("H_ab");
    Homeomorphism id = Homeomorphism::identity(unit());
    CHECK(apply_homeo(hab, id) == hab);
    CHECK(are_conjugate(hab, hab, id));
    CHECK(!are_conjugate(hab, gallery("H_thm2"), id));
}

TEST_CASE("functoriality of piecewise application") {
    // A genuinely two-piece self-homeomorphism of [0, 1].
    Homeomorphism phi(unit(), unit(),
                      {Homeomorphism::Piece{Scalar(0), rat(1, 2), rat(1, 2), Scalar(0)},
                       Homeomorphism::Piece{rat(1, 2), Scalar(1), rat(3, 2), rat(-1, 2)}});
    Homeomorphism twice = phi.compose(phi);
    for (const char* name : {"H_ab", "tent", "counterexample"}) {
        Relation g = gallery(name);
        CHECK(apply_homeo(apply_homeo(g, phi), phi) == apply_homeo(g, twice));
    }
    // Inverse really inverts.
    Relation g = gallery("tent");
    CHECK(apply_homeo(apply_homeo(g, phi), phi.inverse()) == g);
}

TEST_CASE("orbit transfer") {
    Relation a = gallery("A_joj5");
    Relation b = gallery("B_joj5");
    Homeomorphism phi_inv = joj5_phi().inverse();  // [0,1] -> [-1,1]

    Census ca = find_periodic_orbits(a, 8);
    REQUIRE(ca.orbits.size() == 1);
    PeriodicOrbit moved = conjugate_orbit(ca.orbits[0], phi_inv, b);
    CHECK(moved.period == 1);
    CHECK(moved.points[0] == Scalar(-1));

    PeriodicOrbit same = conjugate_orbit(ca.orbits[0], Homeomorphism::identity(unit()), a);
    CHECK(same.points == ca.orbits[0].points);

    // A broken target is detected.
    CHECK_THROWS_AS(conjugate_orbit(ca.orbits[0], Homeomorphism::identity(unit()), gallery("H_ab")),
                    std::logic_error);
}

TEST_CASE("orbit transfer preserves periods on random finite relations") {
    std::mt19937 rng(83);
    for (int i = 0; i < 30; ++i) {
        Relation f = relent::testing::random_finite(rng, 5);
        Homeomorphism phi = Homeomorphism::affine(unit(), Interval(Scalar(2), Scalar(7)));
        Relation image = apply_homeo(f, phi);
        Census cf = find_periodic_orbits(f, 5);
        Census ci = find_periodic_orbits(image, 5);
        std::vector<int> pf, pi;
        for (const auto& o : cf.orbits) pf.push_back(o.period);
        for (const auto& o : ci.orbits) pi.push_back(o.period);
        std::sort(pf.begin(), pf.end());
        std::sort(pi.begin(), pi.end());
        CHECK(pf == pi);
        for (const auto& o : cf.orbits) (void)conjugate_orbit(o, phi, image);  // throws on any violation
    }
}

TEST_CASE("exact entropy transfer across the joj5 conjugacy") {
    Relation a = gallery("A_joj5");
    Relation b = gallery("B_joj5");
    TransferReport rep = entropy_transfer_check(b, a, joj5_phi(), 4, 8);
    CHECK(rep.exact_mode);
    CHECK(rep.counts_equal);
    for (const auto& [cb, ca] : rep.counts) CHECK(cb == ca);
    CHECK(rep.within_tolerance);

    CHECK_THROWS_AS(entropy_transfer_check(b, gallery("H_ab"), joj5_phi(), 4, 4), std::domain_error);
}

TEST_CASE("decreasing affine maps flip bitmaps cell for cell") {
    Homeomorphism flip(unit(), unit(), {Homeomorphism::Piece{Scalar(0), Scalar(1), Scalar(-1), Scalar(1)}});
    Relation bm = rasterize(gallery("tent"), 8);
    Relation once = apply_homeo(bm, flip);
    CHECK(apply_homeo(once, flip) == bm);
    CHECK(once.grid_cells().size() == bm.grid_cells().size());
    // Multi-piece maps refuse bitmaps.
    Homeomorphism bent(unit(), unit(),
                       {Homeomorphism::Piece{Scalar(0), rat(1, 2), rat(1, 2), Scalar(0)},
                        Homeomorphism::Piece{rat(1, 2), Scalar(1), rat(3, 2), rat(-1, 2)}});
    CHECK_THROWS_AS(apply_homeo(bm, bent), std::invalid_argument);
}

TEST_CASE("finite subsets transfer with their digraph") {
    Relation gc = gallery("counterexample");
    Homeomorphism phi = Homeomorphism::affine(unit(), Interval(rat(1, 2), Scalar(1)));
    Relation image = finitely_generated_transfer(gc, phi);
    CHECK(image.point_data().size() == 4);
    CHECK(finite_entropy(image).value() == doctest::Approx(finite_entropy(gc).value()).epsilon(1e-9));

    Census orig = find_periodic_orbits(gc, 4);
    Census moved = find_periodic_orbits(image, 4);
    CHECK(orig.orbits.size() == moved.orbits.size());

    Relation single = Relation::points(unit(), {{rat(1, 4), rat(1, 2)}});
    CHECK(finitely_generated_transfer(single, phi).point_data().size() == 1);

    Relation f4 = gallery("F4");
    Relation f4img = finitely_generated_transfer(f4, phi);
    for (long m = 1; m <= 4; ++m) {
        FiniteDigraph d1 = finite_digraph(f4);
        FiniteDigraph d2 = finite_digraph(f4img);
        CHECK(d1.out == d2.out);  // complete digraph is preserved verbatim
    }
}
