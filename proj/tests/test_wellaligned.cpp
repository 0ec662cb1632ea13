#include "relent/wellaligned.hpp"

#include "relent/gallery.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace relent;
using relent::testing::rat;
using relent::testing::unit;

namespace {

Relation hab() { return gallery("H_ab"); }
Scalar a() { return default_a_hab(); }
Scalar b() { return default_b_hab(); }
Relation hab_L() { return Relation::segments(unit(), {hab().segment_data()[1]}); }
Relation hab_R() { return Relation::segments(unit(), {hab().segment_data()[0]}); }

bool is_prefix_member(const Relation& g, const std::vector<Scalar>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!contains(g, seq[i + 1], seq[i])) return false;
    return true;
}

}  // namespace

TEST_CASE("delta split of the steep branch") {
    DeltaSplit ds = delta_split(hab_L(), b());
    // strict-above part closes to x in [b/a, 1/a], the y = b slice is the
    // single parameter b/a, the strict-below part closes to [b/a^2, b/a].
    Scalar ba = b() / a();
    Scalar ba2 = b() / (a() * a());
    CHECK(ds.plus == Relation::segments(unit(), {AffineSegment(a(), Scalar(0), ba, a().reciprocal())}));
    CHECK(ds.on == Relation::segments(unit(), {AffineSegment(a(), Scalar(0), ba, ba)}));
    CHECK(ds.minus == Relation::segments(unit(), {AffineSegment(a(), Scalar(0), ba2, ba)}));
}

TEST_CASE("delta split of the diagonal and of a finite relation") {
    Relation diag = Relation::segments(unit(), {AffineSegment(Scalar(1), Scalar(0), Scalar(0), Scalar(1))});
    DeltaSplit ds = delta_split(diag, rat(1, 2));
    CHECK(ds.plus == Relation::segments(unit(), {AffineSegment(Scalar(1), Scalar(0), rat(1, 2), Scalar(1))}));
    CHECK(ds.minus == Relation::segments(unit(), {AffineSegment(Scalar(1), Scalar(0), Scalar(0), rat(1, 2))}));

    DeltaSplit gc = delta_split(gallery("counterexample"), rat(1, 2));
    CHECK(gc.plus == Relation::points(unit(), {{Scalar(0), Scalar(1)}, {Scalar(0), rat(3, 4)}}));
    CHECK(gc.minus == Relation::points(unit(), {{rat(3, 4), Scalar(0)}, {Scalar(1), Scalar(0)}}));
    CHECK(gc.on.is_empty());

    // A horizontal piece at exactly y = b has no strict parts at all.
    Relation flat = Relation::segments(unit(), {AffineSegment(Scalar(0), rat(1, 2), Scalar(0), Scalar(1))});
    DeltaSplit fs = delta_split(flat, rat(1, 2));
    CHECK(fs.plus.is_empty());
    CHECK(fs.minus.is_empty());
    CHECK(fs.on == flat);

    CHECK_THROWS_AS(delta_split(flat, Scalar(1)), std::domain_error);
}

TEST_CASE("fiber extremes") {
    auto [l1, r1] = r_ell(hab_L(), Scalar(1));
    CHECK(l1 == a().reciprocal());
    CHECK(r1 == a().reciprocal());

    auto [l2, r2] = r_ell(hab(), rat(3, 10));
    CHECK(l2 == rat(3, 10) / a());
    CHECK(r2 == rat(9, 10));

    auto [l3, r3] = r_ell(gallery("counterexample"), Scalar(0));
    CHECK(l3 == rat(3, 4));
    CHECK(r3 == Scalar(1));

    // Bitmap fibers return cell extremes.
    auto [l4, r4] = r_ell(rasterize(gallery("tent"), 2), rat(1, 4));
    CHECK(l4 == Scalar(0));
    CHECK(r4 == Scalar(1));

    CHECK_THROWS_AS(r_ell(hab_L(), rat(1, 100)), std::domain_error);
}

TEST_CASE("well-alignedness of the two-branch witness") {
    AlignmentCheck ok = check_well_aligned(hab_L(), hab_R(), b());
    CHECK(ok.ok);

    // Clause 3 holds with equality: both projections fill p2(R) exactly.
    Relation l_le = delta_split(hab_L(), b()).minus;  // closure of the strict part
    IntervalSet lhs = project(l_le, 2).unite(project(l_le, 1)).unite(IntervalSet::point(b()));
    CHECK(project(hab_R(), 2).contains_set(lhs));

    // Swapping L and R violates clause 2 (the new R sits above the diagonal)
    // but clause 1 already fails first: the new L has nothing above b and the
    // new R exceeds b. The first violated clause is reported.
    AlignmentCheck swapped = check_well_aligned(hab_R(), hab_L(), b());
    CHECK(!swapped.ok);
    CHECK(swapped.violated_clause == 1);
    // An R that passes clause 1 but touches the diagonal trips clause 2.
    Relation diag_r = Relation::segments(
        unit(), {AffineSegment(Scalar(1), Scalar(0), b() / (a() * a()), b())});
    AlignmentCheck on_diag = check_well_aligned(hab_L(), diag_r, b());
    CHECK(!on_diag.ok);
    CHECK(on_diag.violated_clause == 2);

    AlignmentCheck high = check_well_aligned(hab_L(), hab_R(), rat(9, 10));
    CHECK(!high.ok);
    CHECK(high.violated_clause == 3);
    REQUIRE(high.witness.has_value());
}

TEST_CASE("psi values and the exact maximum") {
    Relation l = hab_L();
    CHECK(psi_value(l, b(), Scalar(1)) == 2);
    CHECK(psi_value(l, b(), rat(2, 5)) == 1);
    CHECK(psi_value(l, b(), rat(3, 10)) == 0);
    CHECK_THROWS_AS(psi_value(l, b(), rat(1, 100)), std::domain_error);

    auto [psi, k] = psi_max(l, b());
    CHECK(psi == 2);
    CHECK(k == 2);
}

TEST_CASE("psi stays within the uniform bound on dense samples") {
    Relation l = hab_L();
    auto [psi, k] = psi_max(l, b());
    IntervalSet p2 = project(l, 2);
    long best = 0;
    for (long i = 0; i <= 10000; ++i) {
        Scalar t = rat(i, 10000);
        if (!p2.contains(t)) continue;
        long v = psi_value(l, b(), t);
        CHECK(v <= k);
        best = std::max(best, v);
    }
    CHECK(best == psi);
}

TEST_CASE("taletoti psi by thresholds agrees with sampling") {
    Relation tal = gallery("taletoti");
    Scalar bb = default_b_taletoti();
    Relation l = Relation::segments(unit(), {tal.segment_data()[1]});  // steep branch
    auto [psi, k] = psi_max(l, bb);
    CHECK(psi == 2);
    CHECK(k == 3);
    IntervalSet p2 = project(l, 2);
    long best = 0;
    for (long i = 0; i <= 10000; ++i) {
        Scalar t = rat(i, 10000);
        if (!p2.contains(t)) continue;
        best = std::max(best, psi_value(l, bb, t));
    }
    CHECK(best == psi);
}

TEST_CASE("separation gap") {
    Scalar eps = epsilon_gap(hab_L(), hab_R());
    Scalar expect = (Scalar(5) * Scalar::sqrt_term(Rat(1), 2) - Scalar(6)) / Scalar(3);
    CHECK(eps == expect);

    Relation diag = Relation::segments(unit(), {AffineSegment(Scalar(1), Scalar(0), Scalar(0), Scalar(1))});
    CHECK(epsilon_gap(diag, diag) == Scalar(0));

    Relation low = Relation::points(unit(), {{rat(1, 2), rat(1, 8)}});
    Relation high = Relation::points(unit(), {{rat(1, 2), rat(7, 8)}});
    CHECK_THROWS_AS(epsilon_gap(low, high), std::domain_error);
}

TEST_CASE("certificates on the gallery") {
    auto cert = certify(hab());
    REQUIRE(cert.has_value());
    CHECK(cert->b == b());
    CHECK(cert->psi == 2);
    CHECK(cert->uniform_k == 2);
    CHECK(!cert->on_inverse);
    CHECK(cert->epsilon == (Scalar(5) * Scalar::sqrt_term(Rat(1), 2) - Scalar(6)) / Scalar(3));
    CHECK(cert->lower_bound == doctest::Approx(std::log(2.0) / 4).epsilon(1e-14));
    CHECK(cert->l == hab_L());
    CHECK(cert->r == hab_R());

    CHECK(!certify(gallery("counterexample")).has_value());
    CHECK(!certify(inverse(gallery("counterexample"))).has_value());

    auto tal = certify(gallery("taletoti"));
    REQUIRE(tal.has_value());
    CHECK(tal->b == default_b_taletoti());
    CHECK(tal->psi == 2);
    CHECK(tal->uniform_k == 3);
    Relation steep = Relation::segments(unit(), {gallery("taletoti").segment_data()[1]});
    Relation shallow = Relation::segments(unit(), {gallery("taletoti").segment_data()[0]});
    CHECK(tal->l == steep);
    CHECK(tal->r == shallow);
}

TEST_CASE("certificate hints steer the search") {
    auto cert = certify(hab(), {b()});
    REQUIRE(cert.has_value());
    CHECK(cert->b == b());
}

TEST_CASE("concatenation") {
    std::vector<Scalar> a1{Scalar(1), Scalar(2)}, a2{Scalar(3)}, empty;
    CHECK(concat({a1, a2}) == std::vector<Scalar>{Scalar(1), Scalar(2), Scalar(3)});
    CHECK(concat({empty, a2}) == a2);
    CHECK(concat({concat({a1, a2}), empty}) == concat({a1, concat({a2, empty})}));
}

TEST_CASE("the branching construction replays inside the relation") {
    auto cert = certify(hab());
    REQUIRE(cert.has_value());
    IntervalSet p2 = project(cert->l, 2);
    int checked = 0;
    for (long i = 1; i <= 100; ++i) {
        Scalar t = b() + rat(i, 101) * (Scalar(1) - b());
        if (!(t > cert->b) || !p2.contains(t)) continue;
        BranchingStep st = branching_step(cert->l, cert->r, cert->b, t);
        std::vector<Scalar> with0 = st.block, with1 = st.block;
        with0.push_back(st.t0);
        with1.push_back(st.t1);
        CHECK(is_prefix_member(hab(), with0));
        CHECK(is_prefix_member(hab(), with1));
        CHECK(st.t1 - st.t0 >= cert->epsilon);
        ++checked;
    }
    CHECK(checked == 100);
}

TEST_CASE("replay produces exponentially many distinct prefixes") {
    auto cert = certify(hab());
    REQUIRE(cert.has_value());
    auto seqs = replay_branching(hab(), *cert, Scalar(1), 5);
    CHECK(seqs.size() == 32);
    std::set<std::string> uniq;
    size_t len = seqs.front().size();
    for (const auto& s : seqs) {
        CHECK(s.size() == len);
        CHECK(is_prefix_member(hab(), s));
        std::string key;
        for (const auto& x : s) key += x.str() + "|";
        uniq.insert(key);
    }
    CHECK(uniq.size() == 32);
}

TEST_CASE("certified bound floors the outer spectral estimate") {
    auto cert = certify(hab());
    REQUIRE(cert.has_value());
    for (long n : {64L, 256L, 1024L}) {
        SpectralResult s = spectral_entropy(transition_matrix(rasterize(hab(), n)));
        CHECK(s.value() >= cert->lower_bound);
    }
    auto tal = certify(gallery("taletoti"));
    REQUIRE(tal.has_value());
    for (long n : {64L, 256L}) {
        SpectralResult s = spectral_entropy(transition_matrix(rasterize(gallery("taletoti"), n)));
        CHECK(s.value() >= tal->lower_bound);
    }
}

TEST_CASE("a certificate on a subset forces growth on every superset") {
    auto cert = certify(hab());
    REQUIRE(cert.has_value());
    for (const char* name : {"H_thm11", "H_thm2"}) {
        SpectralResult s = spectral_entropy(transition_matrix(rasterize(gallery(name), 64)));
        CHECK(!s.no_growth);
        CHECK(s.value() >= cert->lower_bound);
    }
}
