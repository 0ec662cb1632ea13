#pragma once

#include "relent/entropy.hpp"
#include "relent/relation.hpp"

#include <optional>
#include <vector>

namespace relent {

/// Sequence of segment indices selecting one branch per step.
struct BranchWord {
    std::vector<int> word;
};

/// A cycle (x_1..x_p): (x_{(i mod p)+1}, x_i) is in G for every i, p minimal.
struct PeriodicOrbit {
    int period = 0;
    std::vector<Scalar> points;
    BranchWord branch;  // segment indices for segment relations, empty for finite ones
};

/// Identity branch composition: every x in the interval closes up into a
/// period-p cycle (occurs when slope products collapse to 1).
struct OrbitFamily {
    int period = 0;
    Interval range;
    BranchWord branch;
};

struct AffineMap {
    Scalar c, e;  // x -> c*x + e
    Scalar operator()(const Scalar& x) const { return c * x + e; }
};

struct BranchComposition {
    AffineMap map;                  // x_1 -> x_{p+1} along the inverse branch maps
    std::optional<Interval> domain; // exact set of admissible x_1 (nullopt = empty)
};

/// Composition of the inverse branch maps x_{k+1} = (x_k - e)/s along the
/// word, with the exact x_1-domain on which every intermediate point lies in
/// its segment's x-range. Throws on slope-0 branches (not invertible); the
/// orbit search below handles those by forward constraint propagation.
BranchComposition branch_compose(const Relation& segs, const BranchWord& w);

struct Census {
    std::vector<PeriodicOrbit> orbits;
    std::vector<OrbitFamily> families;
};

/// Complete, exact list of periodic orbits of period <= max_period, rotations
/// deduplicated and periods minimal. Segment unions are searched by exhaustive
/// branch words with interval pruning; finite relations by closed-walk
/// enumeration of the coordinate digraph.
Census find_periodic_orbits(const Relation& g, int max_period);

struct NoOrbitProof {
    bool proven = false;
    Scalar fixed_value;  // the only admissible periodic value when proven
};

/// Algebraic certificate that every periodic point of a segment union is the
/// constant sequence at the common diagonal fixed point of its branch lines
/// (a^k irrational arguments and magnitude arguments on slope products).
/// Returns proven=false (not applicable) outside the certified class.
NoOrbitProof prove_no_nonzero_periodic(const Relation& segs);

/// All simple cycles of the digraph of a finite relation, one representative
/// per rotation class, as vertex value lists following edges x -> y.
std::vector<std::vector<Scalar>> cycles_of_finite(const Relation& finite);

/// Periodic orbit whose infinite repetition lies in the infinite Mahavier
/// product; re-verified by checking the shift on a 3p-prefix.
PeriodicOrbit build_periodic_from_cycle(const Relation& finite, const std::vector<Scalar>& cycle);

/// The infinite Mahavier product of a finite relation is nonempty iff its
/// digraph has a cycle.
bool infinite_product_nonempty(const Relation& finite);

/// Restriction of G to C x C with C = p1(G) ∩ p2(G). Every coordinate of a
/// periodic sequence lies in both projections, so periodic orbits are
/// preserved; used to normalise relations before the no-orbit prover.
Relation restrict_to_core(const Relation& g);

enum class ProofLevel { proven, bounded_search };

struct OrbitCensus {
    int max_period = 0;
    Census census;
    ProofLevel proof = ProofLevel::bounded_search;
};

/// find_periodic_orbits plus the proof upgrade: a finite relation with an
/// acyclic digraph, or a segment union whose core restriction admits the
/// algebraic no-orbit certificate, yields a census valid for all periods.
OrbitCensus orbit_census(const Relation& g, int max_period);

}  // namespace relent
