#include "relent/classify.hpp"

namespace relent {

EmbeddingVerdict classify_embedding(const Relation& g, int max_period, long n, long m_max) {
    (void)m_max;
    EmbeddingVerdict v;
    v.grid_n = n;
    if (g.is_empty()) {
        v.kind = EmbeddingKind::neither;  // ent = 0 by definition
        v.entropy = EvidenceLevel::proven;
        v.periodic = ProofLevel::proven;
        return v;
    }
    if (g.kind() == RelKind::grid) {
        // Periodic points of bitmaps are out of scope; entropy evidence only.
        v.spectral = spectral_entropy(transition_matrix(g));
        v.entropy = (!v.spectral.no_growth && v.spectral.lo > 1e-12) ? EvidenceLevel::evidence : EvidenceLevel::none;
        v.kind = EmbeddingKind::inconclusive;
        return v;
    }

    v.census = orbit_census(g, max_period);
    v.periodic = v.census.proof;
    v.certificate = certify(g);
    v.spectral = spectral_entropy(transition_matrix(rasterize(g, n)));
    if (v.certificate) {
        v.entropy = EvidenceLevel::proven;
    } else if (!v.spectral.no_growth && v.spectral.lo > 1e-12) {
        v.entropy = EvidenceLevel::evidence;
    } else {
        v.entropy = EvidenceLevel::none;
    }

    const size_t orbit_count = v.census.census.orbits.size() + (v.census.census.families.empty() ? 0 : 2);
    if (orbit_count >= 2) {
        // Two or more verified periodic points rule out both notions.
        v.kind = EmbeddingKind::neither;
        return v;
    }
    if (v.entropy == EvidenceLevel::none) {
        v.kind = EmbeddingKind::inconclusive;
        return v;
    }
    v.kind = orbit_count == 0 ? EmbeddingKind::i_embedded : EmbeddingKind::almost_i_embedded;
    return v;
}

}  // namespace relent
