#pragma once

#include "relent/orbits.hpp"
#include "relent/wellaligned.hpp"

#include <optional>

namespace relent {

enum class EmbeddingKind { i_embedded, almost_i_embedded, neither, inconclusive };

enum class EvidenceLevel { none, evidence, proven };

/// Combined verdict: positive-entropy evidence (certificate when found,
/// otherwise a positive spectral estimate) against the periodic census with
/// its proof level.
struct EmbeddingVerdict {
    EmbeddingKind kind = EmbeddingKind::inconclusive;
    EvidenceLevel entropy = EvidenceLevel::none;
    ProofLevel periodic = ProofLevel::bounded_search;
    std::optional<Certificate> certificate;
    SpectralResult spectral;
    OrbitCensus census;
    long grid_n = 0;
};

EmbeddingVerdict classify_embedding(const Relation& g, int max_period, long n, long m_max);

}  // namespace relent
