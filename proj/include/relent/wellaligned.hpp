#pragma once

#include "relent/entropy.hpp"
#include "relent/relation.hpp"

#include <optional>
#include <vector>

namespace relent {

/// Split of a relation by second coordinate against the level b. The strict
/// parts are returned as closures of {y > b} / {y < b} and a piece appears
/// only when its strict part is nonempty; the `on` part is the exact y = b
/// slice. Every downstream check either has a closed right-hand side (where
/// closure(S) ⊆ C ⟺ S ⊆ C) or is a strict sign test on piece endpoints, so
/// closure semantics lose no exactness.
struct DeltaSplit {
    Relation plus, minus, on;
};

DeltaSplit delta_split(const Relation& a, const Scalar& b);

/// Exact (min, max) of the x-fiber {x : (x, t) in G}.
/// Throws when t is outside the second-coordinate projection.
std::pair<Scalar, Scalar> r_ell(const Relation& g, const Scalar& t);

struct AlignmentCheck {
    bool ok = true;
    int violated_clause = 0;  // 1..4 when !ok
    std::optional<Point> witness;
};

/// Exact verification of the four well-alignedness clauses for (L, R, b):
///  (1) L has points above and not above b, and R lies at or below b;
///  (2) the y>=b part of L is strictly above the diagonal, the y<b part
///      weakly above, and R strictly below;
///  (3) both projections of the y<=b part of L land inside p2(R);
///  (4) p1 of the y>b part of L and p1(R) land inside p2(L).
AlignmentCheck check_well_aligned(const Relation& l, const Relation& r, const Scalar& b);

/// Number of r_L iterations needed to fall to or below b (0 when t <= b).
/// Precondition: (L, R, b) well-aligned and t in p2(L).
long psi_value(const Relation& l, const Scalar& b, const Scalar& t);

/// Exact maximum of psi over p2(L), via backward propagation of the level-b
/// thresholds through the piecewise-affine fiber maximum, together with the
/// uniform iteration bound (smallest k with a_max^k <= b for the worst
/// contraction ratio a_max = sup r_L(t)/t < 1).
std::pair<long, long> psi_max(const Relation& l, const Scalar& b);

/// Exact infimum of ell_R(t) - r_L(t) over p2(L) ∩ p2(R) (piecewise linear,
/// evaluated on the breakpoints of both fiber envelopes). Throws when the
/// projections do not meet; a non-positive value is returned, not thrown.
Scalar epsilon_gap(const Relation& l, const Relation& r);

/// A verified entropy certificate: well-aligned (L, R, b) inside the target
/// (the relation or its inverse), the psi maximum with its uniform bound, the
/// positive separation gap, and the resulting bound log 2 / (psi + 2).
struct Certificate {
    Scalar b;
    Relation l, r;
    bool on_inverse = false;
    long psi = 0;
    long uniform_k = 0;
    Scalar epsilon;
    double lower_bound = 0.0;
    bool l_b_nonempty = false;  // the y = b slice of L is nonempty (clause-overlap audit flag)
};

/// Searches for a certificate on G, then on G^{-1}. Candidate b values are
/// the hints plus representation breakpoints (y-range endpoints and diagonal
/// crossings for segments; the distinct y values and their midpoints for
/// finite relations); for segment unions the candidate L/R are the maximal
/// piece unions weakly above / strictly below the diagonal, for finite
/// relations all admissible point subsets are tried (guarded at 12 points).
/// Absence of a certificate is a value, not an error.
std::optional<Certificate> certify(const Relation& g, const std::vector<Scalar>& hints = {});

/// Flat concatenation of finite sequences; associative.
std::vector<Scalar> concat(const std::vector<std::vector<Scalar>>& parts);

/// One branching step of the entropy lower-bound construction at height t:
/// the descent block T(t) = (t, r_L(t), ..., r_L^psi(t)(t)) and its two
/// continuations t0 = r_L^{psi+1}(t), t1 = ell_R(r_L^psi(t)), which differ by
/// at least the certificate gap.
struct BranchingStep {
    std::vector<Scalar> block;
    Scalar t0, t1;
};

BranchingStep branching_step(const Relation& l, const Relation& r, const Scalar& b, const Scalar& t);

/// Replays the branching construction to the given depth inside the
/// certificate's target relation, returning 2^depth pairwise distinct
/// Mahavier prefixes of equal length (each verified pair by pair).
std::vector<std::vector<Scalar>> replay_branching(const Relation& g, const Certificate& cert, const Scalar& t,
                                                  int depth);

}  // namespace relent
