#pragma once

#include "relent/classify.hpp"
#include "relent/conjugacy.hpp"
#include "relent/gallery.hpp"

#include <json.hpp>

#include <string>

namespace relent {

using Json = nlohmann::ordered_json;

// Relation files: {"ambient": [lo, hi], "d": d, "kind": ..., "data": ...}
// with scalars as canonical "p/q" / "p/q±r/s*sqrt(d)" strings. Writing is
// canonical, so write∘read∘write is byte-stable.
Json relation_to_json(const Relation& g);
Relation relation_from_json(const Json& j);

Json homeo_to_json(const Homeomorphism& phi);
Homeomorphism homeo_from_json(const Json& j);

Json spectral_to_json(const SpectralResult& s);
Json entropy_report_to_json(const EntropyReport& rep);
std::string entropy_report_to_csv(const EntropyReport& rep);

Json certificate_to_json(const Certificate& cert);
Json census_to_json(const OrbitCensus& census);
Json transfer_report_to_json(const TransferReport& rep);
Json verdict_to_json(const EmbeddingVerdict& verdict);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& body);

Relation read_relation_file(const std::string& path);
void write_relation_file(const std::string& path, const Relation& g);
Homeomorphism read_homeo_file(const std::string& path);

}  // namespace relent
