#include "relent/gallery.hpp"

namespace relent {

namespace {

Scalar rat(long n, long d) { return Scalar(Rat(Int(n), Int(d))); }
const Scalar kZero(0);
const Scalar kOne(1);

Interval unit() { return Interval(Scalar(0), Scalar(1)); }

Scalar sqrt2() { return Scalar::sqrt_term(Rat(1), 2); }

void require(bool ok, const std::string& message) {
    if (!ok) throw std::invalid_argument(message);
}

// "a^k irrational for every positive integer k" holds exactly when both the
// rational and the radical part of a are nonzero (conjugate-magnitude test).
void require_power_irrational(const Scalar& a, const std::string& who) {
    require(!a.is_rational() && !a.rational_part().is_zero() && !a.radical_part().is_zero(),
            who + " must have every power irrational (nonzero rational and radical parts)");
}

struct HabParams {
    Scalar a, b;
};

HabParams hab_params(const GalleryParams& p) {
    Scalar a = p.a.value_or(default_a_hab());
    Scalar b = p.b.value_or(default_b_hab());
    require(a > kOne, "requires a > 1");
    require_power_irrational(a, "a");
    require(b.is_rational(), "b must be rational");
    require(kZero < b && b < kOne, "requires b in (0,1)");
    require(b < a.reciprocal(), "requires 1/a > b");
    return {a, b};
}

struct TaleParams {
    Scalar a, b;
};

TaleParams taletoti_params(const GalleryParams& p, bool joj5_window) {
    Scalar a = p.a.value_or(default_a_taletoti());
    Scalar b = p.b.value_or(default_b_taletoti());
    require(kOne < a && a < sqrt2(), "a must be in (1, sqrt(2))");
    Scalar slope = (Scalar(2) * a) / (kOne + a);
    require_power_irrational(slope, "2a/(1+a)");
    require(b.is_rational(), "b must be rational");
    Scalar lo = a / (a + kOne);
    Scalar hi = joj5_window ? (kOne + a) / (Scalar(2) * a) : a.reciprocal();
    require(lo < b && b < hi,
            joj5_window ? "b must be in (a/(a+1), (1+a)/(2a))" : "b must be in (a/(a+1), 1/a)");
    // Window consistency (holds for every a in (1, sqrt 2)).
    require((a - kOne) / (a + kOne) < a.reciprocal(), "window check failed: (a-1)/(a+1) < 1/a");
    require(a / (a + kOne) < (kOne + a) / (Scalar(2) * a), "window check failed: a/(a+1) < (1+a)/(2a)");
    return {a, b};
}

Relation build_hab(const GalleryParams& p) {
    auto [a, b] = hab_params(p);
    Scalar inv_a = a.reciprocal();
    Scalar inv_a2 = inv_a * inv_a;
    return Relation::segments(unit(), {
                                          AffineSegment(a, kZero, b * inv_a2, inv_a),
                                          AffineSegment(b, kZero, inv_a2, kOne),
                                      });
}

Relation build_thm11(const GalleryParams& p) {
    auto [a, b] = hab_params(p);
    Scalar inv_a = a.reciprocal();
    Scalar inv_a2 = inv_a * inv_a;
    return Relation::segments(unit(), {
                                          AffineSegment(a, kZero, b * inv_a2, inv_a),
                                          AffineSegment(b, kZero, inv_a2, kOne),
                                          AffineSegment(kZero, b * inv_a, kZero, b * inv_a2),
                                      });
}

Relation build_thm2(const GalleryParams& p) {
    auto [a, b] = hab_params(p);
    return Relation::segments(unit(), {
                                          AffineSegment(a, kZero, kZero, a.reciprocal()),
                                          AffineSegment(b, kZero, kZero, kOne),
                                      });
}

Relation build_taletoti(const GalleryParams& p) {
    auto [a, b] = taletoti_params(p, false);
    Scalar sl = (Scalar(2) * a) / (a + kOne);
    Scalar el = (a - kOne) / (a + kOne);
    Scalar sr = (b + kOne) / Scalar(2);
    Scalar er = (b - kOne) / Scalar(2);
    return Relation::segments(unit(), {
                                          AffineSegment(sl, el, kZero, a.reciprocal()),
                                          AffineSegment(sr, er, (kOne - b) / (kOne + b), kOne),
                                      });
}

Relation build_a_joj5(const GalleryParams& p) {
    auto [a, b] = taletoti_params(p, true);
    Scalar sl = (Scalar(2) * a) / (a + kOne);
    Scalar sr = (b + kOne) / Scalar(2);
    return Relation::segments(unit(), {
                                          AffineSegment(sl, kZero, kZero, (a + kOne) / (Scalar(2) * a)),
                                          AffineSegment(sr, kZero, kZero, kOne),
                                      });
}

Relation build_b_joj5(const GalleryParams& p) {
    auto [a, b] = taletoti_params(p, true);
    Interval amb(Scalar(-1), Scalar(1));
    Scalar sl = (Scalar(2) * a) / (a + kOne);
    Scalar el = (a - kOne) / (a + kOne);
    Scalar sr = (b + kOne) / Scalar(2);
    Scalar er = (b - kOne) / Scalar(2);
    return Relation::segments(amb, {
                                       AffineSegment(sl, el, Scalar(-1), a.reciprocal()),
                                       AffineSegment(sr, er, Scalar(-1), kOne),
                                   });
}

Relation build_counterexample() {
    return Relation::points(unit(), {
                                        {Scalar(0), Scalar(1)},
                                        {Scalar(0), rat(3, 4)},
                                        {rat(3, 4), Scalar(0)},
                                        {Scalar(1), Scalar(0)},
                                    });
}

Relation build_tent() {
    return Relation::segments(unit(), {
                                          AffineSegment(Scalar(2), kZero, kZero, rat(1, 2)),
                                          AffineSegment(Scalar(-2), Scalar(2), rat(1, 2), kOne),
                                      });
}

Relation build_f4() {
    return Relation::points(unit(), {
                                        {Scalar(0), Scalar(0)},
                                        {Scalar(0), Scalar(1)},
                                        {Scalar(1), Scalar(0)},
                                        {Scalar(1), Scalar(1)},
                                    });
}

}  // namespace

Scalar default_a_hab() { return Scalar(Rat(1), Rat(1), 2); }          // 1 + sqrt 2
Scalar default_b_hab() { return rat(1, 3); }
Scalar default_a_taletoti() { return Scalar::sqrt_term(Rat(Int(6), Int(7)), 2); }  // 6 sqrt 2 / 7
Scalar default_b_taletoti() { return rat(2, 3); }

Homeomorphism joj5_phi() { return Homeomorphism::affine(Interval(Scalar(-1), Scalar(1)), unit()); }

std::vector<std::string> gallery_names() {
    return {"H_ab", "H_thm11", "H_thm2", "taletoti", "A_joj5", "B_joj5", "counterexample", "tent", "F4"};
}

Relation gallery(const std::string& name, const GalleryParams& params) {
    try {
        if (name == "H_ab") return build_hab(params);
        if (name == "H_thm11") return build_thm11(params);
        if (name == "H_thm2") return build_thm2(params);
        if (name == "taletoti") return build_taletoti(params);
        if (name == "A_joj5") return build_a_joj5(params);
        if (name == "B_joj5") return build_b_joj5(params);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("gallery entry '" + name + "': " + e.what());
    }
    if (name == "counterexample") return build_counterexample();
    if (name == "tent") return build_tent();
    if (name == "F4") return build_f4();
    throw std::invalid_argument("unknown gallery entry '" + name + "'");
}

}  // namespace relent
