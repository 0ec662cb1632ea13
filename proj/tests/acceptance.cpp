// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include "relent/classify.hpp"
#include "relent/conjugacy.hpp"
#include "relent/gallery.hpp"
#include "relent/io.hpp"

#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

using namespace relent;

namespace {

int failures = 0;
std::ostringstream detail;

void expect(bool ok, const std::string& what) {
    if (!ok) detail << "    failed: " << what << "\n";
    if (!ok) throw std::runtime_error("criterion check failed");
}

void soft_expect(bool ok, const std::string& what) {
    if (!ok) detail << "    failed: " << what << "\n";
    if (!ok) throw std::runtime_error("criterion check failed");
}

void run(int number, const std::string& name, const std::function<void()>& body) {
    detail.str("");
    bool ok = true;
    try {
        body();
    } catch (const std::exception& e) {
        ok = false;
        if (detail.str().empty()) detail << "    exception: " << e.what() << "\n";
    }
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name << "\n";
    if (!ok) {
        std::cout << detail.str();
        ++failures;
    }
}

Scalar rat(long p, long q) { return Scalar(Rat(Int(p), Int(q))); }

const double kLog2 = std::log(2.0);

double spectral_at(const Relation& g, long n) {
    return spectral_entropy(transition_matrix(rasterize(g, n))).value();
}

std::string key_of(const std::vector<Scalar>& seq) {
    std::string k;
    for (const auto& x : seq) k += x.str() + "|";
    return k;
}

bool prefix_member(const Relation& g, const std::vector<Scalar>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (!contains(g, seq[i + 1], seq[i])) return false;
    return true;
}

Relation random_finite(std::mt19937& rng, int max_points) {
    std::uniform_int_distribution<int> npts(2, max_points);
    std::uniform_int_distribution<int> coord(0, 8);
    std::vector<Point> pts;
    int n = npts(rng);
    Interval unit(Scalar(0), Scalar(1));
    for (int i = 0; i < n; ++i) pts.emplace_back(rat(coord(rng), 8), rat(coord(rng), 8));
    return Relation::points(unit, std::move(pts));
}

void criterion1() {
    SpectralResult s = finite_entropy(gallery("F4"));
    expect(s.width() <= 1e-9, "F4 enclosure width <= 1e-9");
    expect(s.lo <= kLog2 && kLog2 <= s.hi, "log 2 inside the F4 enclosure");
    Relation f4 = gallery("F4");
    for (long m = 1; m <= 10; ++m) {
        expect(box_count(f4, 2, m) == Int(1) << (m + 1), "box_count(F4,2," + std::to_string(m) + ") = 2^{m+1}");
    }
}

void criterion2() {
    Relation gc = gallery("counterexample");
    SpectralResult s = finite_entropy(gc);
    expect(std::abs(s.value() - 0.5 * kLog2) <= 1e-9, "finite_entropy(G_c) = log(2)/2 within 1e-9");
    expect(!certify(gc).has_value(), "certify(G_c) finds nothing (exhaustive)");
    expect(!certify(inverse(gc)).has_value(), "certify(G_c^{-1}) finds nothing (exhaustive)");
    auto cycles = cycles_of_finite(gc);
    expect(cycles.size() >= 2, "G_c has at least two cycles");
    std::set<std::string> distinct;
    for (const auto& c : cycles) distinct.insert(key_of(build_periodic_from_cycle(gc, c).points));
    expect(distinct.size() >= 2, "at least two distinct periodic points are generated");
}

void criterion3() {
    Relation hab = gallery("H_ab");
    auto cert = certify(hab);
    expect(cert.has_value(), "H_ab has a certificate");
    expect(cert->b == rat(1, 3), "certificate level b = 1/3");
    expect(cert->psi == 2, "psi = 2");
    Scalar eps_expect = (Scalar(5) * Scalar::sqrt_term(Rat(1), 2) - Scalar(6)) / Scalar(3);
    expect(cert->epsilon == eps_expect, "epsilon = (5 sqrt 2 - 6)/3, exactly");
    expect(std::abs(cert->lower_bound - kLog2 / 4) < 1e-15, "lower bound = log(2)/4");
    expect(find_periodic_orbits(hab, 12).orbits.empty(), "no periodic orbits up to period 12");
    OrbitCensus census = orbit_census(hab, 12);
    expect(census.proof == ProofLevel::proven, "census proof level proven");
    double sp = spectral_at(hab, 256);
    expect(sp >= cert->lower_bound, "spectral estimate at n=256 >= log(2)/4 (got " + std::to_string(sp) + ")");
}

void criterion4() {
    Relation h2 = gallery("H_thm2");
    OrbitCensus census = orbit_census(h2, 12);
    expect(census.census.orbits.size() == 1, "exactly one periodic orbit");
    expect(census.census.orbits[0].period == 1 && census.census.orbits[0].points[0] == Scalar(0),
           "the orbit is the fixed point at 0");
    expect(census.proof == ProofLevel::proven, "proof level proven");
    NoOrbitProof pr = prove_no_nonzero_periodic(h2);
    expect(pr.proven && pr.fixed_value == Scalar(0), "conjugate-magnitude certificate applies");
    Relation hab_inv = inverse(gallery("H_ab"));
    for (long m = 1; m <= 8; ++m) {
        expect(box_count(h2, 64, m) >= box_count(hab_inv, 64, m),
               "box_count(H_thm2,64,m) >= box_count(H_ab^{-1},64,m) at m=" + std::to_string(m));
    }
}

void criterion5() {
    Relation h11 = gallery("H_thm11");
    expect(is_usc_graph(h11) == GraphVerdict::graph, "H_thm11 is a usc graph (not surjective)");
    expect(find_periodic_orbits(h11, 12).orbits.empty(), "no periodic orbits up to period 12");
    Relation hab = gallery("H_ab");
    expect(subset(hab, h11), "H_ab is a subset of H_thm11");
    expect(certify(hab).has_value(), "the H_ab certificate exists to inherit");
    for (long n : {16L, 64L}) {
        for (long m = 1; m <= 8; ++m) {
            expect(box_count(hab, n, m) <= box_count(h11, n, m), "count inequality inherited at n=" +
                                                                     std::to_string(n) + ", m=" + std::to_string(m));
        }
    }
}

void criterion6() {
    Relation tal = gallery("taletoti");
    Scalar a = default_a_taletoti();
    Scalar b = default_b_taletoti();
    expect(is_usc_graph(tal) == GraphVerdict::surjective_graph, "taletoti is a surjective usc graph");
    expect(b > (a - Scalar(1)) / (a + Scalar(1)), "b > (a-1)/(a+1), exactly");
    expect((Scalar(1) - b) / (Scalar(1) + b) < a.reciprocal(), "(1-b)/(1+b) < 1/a, exactly");

    auto cert = certify(tal);
    expect(cert.has_value(), "taletoti has a certificate");
    Relation steep = Relation::segments(tal.ambient(), {tal.segment_data()[1]});
    Relation shallow = Relation::segments(tal.ambient(), {tal.segment_data()[0]});
    expect(cert->l == steep && cert->r == shallow, "the two segments are L and R");

    expect(find_periodic_orbits(tal, 12).orbits.empty(), "no periodic orbits up to period 12, exact");

    // The reduction behind the proven verdict: taletoti sits inside the
    // conjugate copy of the through-origin pair, whose only periodic value
    // pulls back to -1, and -1 is not in p2(taletoti).
    Relation a_rel = gallery("A_joj5");
    Relation b_rel = gallery("B_joj5");
    expect(are_conjugate(b_rel, a_rel, joj5_phi()), "B and A are conjugate under phi");
    for (const auto& seg : tal.segment_data()) {
        bool inside = false;
        for (const auto& big : b_rel.segment_data()) {
            if (big.slope == seg.slope && big.intercept == seg.intercept && big.xlo <= seg.xlo &&
                seg.xhi <= big.xhi)
                inside = true;
        }
        expect(inside, "each taletoti branch lies inside the corresponding B branch");
    }
    NoOrbitProof pr = prove_no_nonzero_periodic(a_rel);
    expect(pr.proven && pr.fixed_value == Scalar(0), "through-origin pair admits the certificate");
    Scalar pulled = joj5_phi().inverse()(Scalar(0));
    expect(pulled == Scalar(-1), "the fixed value pulls back to -1");
    expect(!project(tal, 2).contains(Scalar(-1)), "-1 is not in p2(taletoti)");
    expect(orbit_census(tal, 12).proof == ProofLevel::proven, "census proof level proven");
}

void criterion7() {
    Relation a = gallery("A_joj5");
    Relation b = gallery("B_joj5");
    Homeomorphism phi = joj5_phi();
    expect(are_conjugate(b, a, phi), "are_conjugate(B, A, phi), exactly");
    for (long n : {4L, 16L, 64L}) {
        for (long m = 1; m <= 10; ++m) {
            expect(box_count(b, 2 * n, m) == box_count(a, 2 * n, m),
                   "count equality at matched 2n-grid, n=" + std::to_string(n) + ", m=" + std::to_string(m));
        }
    }
    Census cb = find_periodic_orbits(b, 8);
    Census ca = find_periodic_orbits(a, 8);
    expect(cb.orbits.size() == ca.orbits.size(), "census sizes agree");
    std::set<std::string> images;
    for (const auto& o : cb.orbits) {
        PeriodicOrbit moved = conjugate_orbit(o, phi, a);
        expect(moved.period == o.period, "periods preserved");
        images.insert(key_of(moved.points));
    }
    std::set<std::string> target;
    for (const auto& o : ca.orbits) target.insert(key_of(o.points));
    expect(images == target, "transferred census equals A's census");
}

void criterion8() {
    std::vector<std::pair<std::string, std::string>> subset_pairs = {
        {"H_ab", "H_thm11"}, {"H_ab", "H_thm2"}};
    for (const auto& name : gallery_names()) {
        Relation g = gallery(name);
        for (long n : {16L, 64L}) {
            std::vector<Int> counts;
            Relation inv = inverse(g);
            Int bound = Int(n) * Int(n);
            for (long m = 1; m <= 10; ++m) {
                counts.push_back(box_count(g, n, m));
                expect(counts.back() <= bound, name + ": obs bound at n=" + std::to_string(n));
                bound *= Int(n);
                expect(counts.back() == box_count(inv, n, m), name + ": inverse invariance");
                expect(box_count(g, 2 * n, m) >= counts.back(), name + ": refinement monotonicity");
            }
            for (long m = 1; m <= 10; ++m)
                for (long k = 1; m + k <= 10; ++k)
                    expect(counts[m + k - 1] <= counts[m - 1] * counts[k - 1], name + ": subadditivity");
        }
    }
    for (const auto& [small, large] : subset_pairs) {
        Relation h = gallery(small), g = gallery(large);
        expect(subset(h, g), small + " inside " + large);
        for (long n : {16L, 64L})
            for (long m = 1; m <= 10; ++m)
                expect(box_count(h, n, m) <= box_count(g, n, m), "subset monotonicity " + small + " vs " + large);
    }
}

void criterion9() {
    Relation tent = gallery("tent");
    std::vector<double> sweep;
    for (long n : {64L, 128L, 256L, 512L}) sweep.push_back(spectral_at(tent, n));
    std::ostringstream seen;
    for (double v : sweep) seen << v << " ";
    soft_expect(sweep.back() >= kLog2 - 1e-9 && sweep.back() <= kLog2 + 0.25,
                "spectral estimate at n=512 in [log 2 - 1e-9, log 2 + 0.25] (sweep: " + seen.str() + ")");
    for (size_t i = 1; i < sweep.size(); ++i)
        soft_expect(sweep[i] <= sweep[i - 1] + 1e-6, "sweep non-increasing toward log 2 (sweep: " + seen.str() + ")");
}

void criterion10() {
    std::mt19937 rng(2024);
    for (int i = 0; i < 200; ++i) {
        Relation f = random_finite(rng, 6);
        FiniteDigraph dg = finite_digraph(f);
        TransitionMatrix tm;
        tm.n = static_cast<long>(dg.values.size());
        tm.rows = dg.out;
        for (long m = 1; m <= 6; ++m) {
            expect(Int(mahavier_members(f, m).size()) == walk_count(tm, m),
                   "member count equals walk count (trial " + std::to_string(i) + ")");
        }
    }
    for (int i = 0; i < 100; ++i) {
        Relation f = random_finite(rng, 6);
        bool cycles = !cycles_of_finite(f).empty();
        expect(cycles == infinite_product_nonempty(f), "cycles iff nonempty infinite product");
        expect(cycles == !find_periodic_orbits(f, 6).orbits.empty(), "cycles iff nonempty census");
    }
}

void criterion11() {
    Relation hab = gallery("H_ab");
    auto cert = certify(hab);
    expect(cert.has_value(), "certificate exists");
    IntervalSet p2 = project(cert->l, 2);
    Scalar b = cert->b;
    int sampled = 0;
    for (long i = 1; i <= 100; ++i) {
        Scalar t = b + rat(i, 101) * (Scalar(1) - b);
        if (!(t > b) || !p2.contains(t)) continue;
        BranchingStep st = branching_step(cert->l, cert->r, b, t);
        std::vector<Scalar> w0 = st.block, w1 = st.block;
        w0.push_back(st.t0);
        w1.push_back(st.t1);
        expect(prefix_member(hab, w0), "left continuation is a Mahavier prefix");
        expect(prefix_member(hab, w1), "right continuation is a Mahavier prefix");
        expect(st.t1 - st.t0 >= cert->epsilon, "separation at least epsilon, exactly");
        ++sampled;
    }
    expect(sampled == 100, "sampled 100 heights in p2(L_b^+)");

    auto seqs = replay_branching(hab, *cert, Scalar(1), 8);
    std::set<std::string> uniq;
    for (const auto& s : seqs) {
        expect(prefix_member(hab, s), "replayed prefix is a Mahavier member");
        uniq.insert(key_of(s));
    }
    expect(uniq.size() >= 256, "at least 2^8 distinct prefixes");
}

}  // namespace

int main() {
    run(1, "full shift: entropy log 2 and counts 2^{m+1}", criterion1);
    run(2, "counterexample: entropy log(2)/2, no certificate, two periodic points", criterion2);
    run(3, "H_ab: exact certificate, empty census (proven), spectral floor", criterion3);
    run(4, "H_thm2: single proven fixed orbit, count domination", criterion4);
    run(5, "H_thm11: usc graph, empty census, inherited certificate", criterion5);
    run(6, "taletoti: surjective usc graph, certificate, proven empty census", criterion6);
    run(7, "joj5 conjugacy: exact count transfer and orbit bijection", criterion7);
    run(8, "count theorems: subadditive, refinement, subset, bound, inverse", criterion8);
    run(9, "tent map: outer spectral sweep toward log 2", criterion9);
    run(10, "random finite relations: oracle and census agreement", criterion10);
    run(11, "branching replay on H_ab: separated prefixes, 2^8 distinct", criterion11);

    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << " criterion(s) failed\n";
    }
    return failures == 0 ? 0 : 1;
}
