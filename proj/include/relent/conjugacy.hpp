#pragma once

#include "relent/homeo.hpp"
#include "relent/orbits.hpp"
#include "relent/relation.hpp"

namespace relent {

/// Image relation {(phi(x), phi(y)) : (x, y) in G} on phi's target. Points
/// map pointwise, segments split at phi's breakpoints (in x and in y) and map
/// piece by piece, grids map cell to cell for single-piece (affine) phi only.
Relation apply_homeo(const Relation& g, const Homeomorphism& phi);

/// Exact conjugacy test: apply_homeo(G, phi) equals H canonically.
bool are_conjugate(const Relation& g, const Relation& h, const Homeomorphism& phi);

/// Pointwise image of an orbit of G under phi, re-verified against H.
PeriodicOrbit conjugate_orbit(const PeriodicOrbit& orbit, const Homeomorphism& phi, const Relation& h);

struct TransferReport {
    bool exact_mode = false;    // single-piece phi: matched grids map bijectively
    bool counts_equal = true;   // exact mode: integer equality of all counts
    std::vector<std::pair<Int, Int>> counts;  // (N_m(G), N_m(H)) at the matched 2n-grids
    SpectralResult spectral_g, spectral_h;
    double spectral_diff = 0.0;
    bool within_tolerance = true;
    double tolerance = 0.0;
};

/// Entropy transfer across a conjugacy: in exact mode (affine phi) the
/// 2n-grid box counts of G and H must agree integer for integer; otherwise
/// the spectral estimates are compared within the given tolerance.
TransferReport entropy_transfer_check(const Relation& g, const Relation& h, const Homeomorphism& phi, long n,
                                      long m_max, double tolerance = 0.05);

/// Image of a finite subset F of G under phi; the digraph on the image is
/// isomorphic to the digraph of F (verified edge by edge).
Relation finitely_generated_transfer(const Relation& f, const Homeomorphism& phi);

}  // namespace relent
