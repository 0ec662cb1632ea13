#include "relent/io.hpp"

#include <fstream>
#include <sstream>

namespace relent {

namespace {

long disc_of(const Scalar& s, long acc) {
    if (s.disc() == 0) return acc;
    if (acc != 0 && acc != s.disc()) throw FieldMismatch{};
    return s.disc();
}

long relation_disc(const Relation& g) {
    long d = 0;
    d = disc_of(g.ambient().lo, d);
    d = disc_of(g.ambient().hi, d);
    switch (g.kind()) {
        case RelKind::points:
            for (const auto& p : g.point_data()) {
                d = disc_of(p.first, d);
                d = disc_of(p.second, d);
            }
            break;
        case RelKind::segments:
            for (const auto& s : g.segment_data()) {
                d = disc_of(s.slope, d);
                d = disc_of(s.intercept, d);
                d = disc_of(s.xlo, d);
                d = disc_of(s.xhi, d);
            }
            break;
        case RelKind::grid:
            break;
    }
    return d;
}

}  // namespace

Json relation_to_json(const Relation& g) {
    Json j;
    j["ambient"] = Json::array({g.ambient().lo.str(), g.ambient().hi.str()});
    j["d"] = relation_disc(g);
    switch (g.kind()) {
        case RelKind::points: {
            j["kind"] = "points";
            Json data = Json::array();
            for (const auto& p : g.point_data()) data.push_back(Json::array({p.first.str(), p.second.str()}));
            j["data"] = std::move(data);
            break;
        }
        case RelKind::segments: {
            j["kind"] = "segments";
            Json data = Json::array();
            for (const auto& s : g.segment_data()) {
                Json seg;
                seg["slope"] = s.slope.str();
                seg["intercept"] = s.intercept.str();
                seg["xlo"] = s.xlo.str();
                seg["xhi"] = s.xhi.str();
                if (s.transposed) seg["transposed"] = true;
                data.push_back(std::move(seg));
            }
            j["data"] = std::move(data);
            break;
        }
        case RelKind::grid: {
            j["kind"] = "grid";
            Json cells = Json::array();
            for (const auto& c : g.grid_cells()) cells.push_back(Json::array({c.first, c.second}));
            j["data"] = Json{{"n", g.grid_n()}, {"cells", std::move(cells)}};
            break;
        }
    }
    return j;
}

Relation relation_from_json(const Json& j) {
    const long d = j.at("d").get<long>();
    auto scalar = [&](const Json& v) { return Scalar::parse(v.get<std::string>(), d); };
    Interval ambient(scalar(j.at("ambient").at(0)), scalar(j.at("ambient").at(1)));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "points") {
        std::vector<Point> pts;
        for (const auto& p : j.at("data")) pts.emplace_back(scalar(p.at(0)), scalar(p.at(1)));
        return Relation::points(ambient, std::move(pts));
    }
    if (kind == "segments") {
        std::vector<AffineSegment> segs;
        for (const auto& s : j.at("data")) {
            bool transposed = s.value("transposed", false);
            segs.emplace_back(scalar(s.at("slope")), scalar(s.at("intercept")), scalar(s.at("xlo")),
                              scalar(s.at("xhi")), transposed);
        }
        return Relation::segments(ambient, std::move(segs));
    }
    if (kind == "grid") {
        const auto& data = j.at("data");
        std::set<Cell> cells;
        for (const auto& c : data.at("cells")) cells.emplace(c.at(0).get<long>(), c.at(1).get<long>());
        return Relation::grid(ambient, data.at("n").get<long>(), std::move(cells));
    }
    throw std::invalid_argument("unknown relation kind '" + kind + "'");
}

Json homeo_to_json(const Homeomorphism& phi) {
    Json j;
    j["source"] = Json::array({phi.source().lo.str(), phi.source().hi.str()});
    j["target"] = Json::array({phi.target().lo.str(), phi.target().hi.str()});
    Json pieces = Json::array();
    for (const auto& p : phi.pieces()) {
        Json piece;
        piece["dom"] = Json::array({p.xlo.str(), p.xhi.str()});
        piece["slope"] = p.slope.str();
        piece["intercept"] = p.intercept.str();
        pieces.push_back(std::move(piece));
    }
    j["pieces"] = std::move(pieces);
    return j;
}

Homeomorphism homeo_from_json(const Json& j) {
    auto scalar = [](const Json& v) { return Scalar::parse(v.get<std::string>()); };
    Interval source(scalar(j.at("source").at(0)), scalar(j.at("source").at(1)));
    Interval target(scalar(j.at("target").at(0)), scalar(j.at("target").at(1)));
    std::vector<Homeomorphism::Piece> pieces;
    for (const auto& p : j.at("pieces")) {
        pieces.push_back(Homeomorphism::Piece{scalar(p.at("dom").at(0)), scalar(p.at("dom").at(1)),
                                              scalar(p.at("slope")), scalar(p.at("intercept"))});
    }
    return Homeomorphism(source, target, std::move(pieces));
}

Json spectral_to_json(const SpectralResult& s) {
    Json j;
    j["value"] = s.value();
    j["lo"] = s.lo;
    j["hi"] = s.hi;
    j["no_growth"] = s.no_growth;
    return j;
}

Json entropy_report_to_json(const EntropyReport& rep) {
    Json j;
    j["n"] = rep.n;
    j["m_max"] = rep.m_max;
    Json counts = Json::array();
    for (const auto& c : rep.counts) counts.push_back(c.str());
    j["counts"] = std::move(counts);
    j["ratios"] = rep.ratios;
    j["min_ratio"] = rep.min_ratio;
    j["spectral"] = spectral_to_json(rep.spectral);
    j["subadditive_ok"] = rep.subadditive_ok;
    j["obs_bound_ok"] = rep.obs_bound_ok;
    j["outer"] = rep.outer;
    j["empty_relation"] = rep.empty_relation;
    return j;
}

std::string entropy_report_to_csv(const EntropyReport& rep) {
    std::ostringstream out;
    out << "m,N_m,a_m_over_m\n";
    for (size_t i = 0; i < rep.counts.size(); ++i) {
        out << (i + 1) << "," << rep.counts[i].str() << "," << rep.ratios[i] << "\n";
    }
    return out.str();
}

Json certificate_to_json(const Certificate& cert) {
    Json j;
    j["b"] = cert.b.str();
    j["psi"] = cert.psi;
    j["uniform_k"] = cert.uniform_k;
    j["epsilon"] = cert.epsilon.str();
    j["lower_bound"] = cert.lower_bound;
    j["target"] = cert.on_inverse ? "G_inverse" : "G";
    j["l_b_nonempty"] = cert.l_b_nonempty;
    j["L"] = relation_to_json(cert.l);
    j["R"] = relation_to_json(cert.r);
    return j;
}

Json census_to_json(const OrbitCensus& census) {
    Json j;
    j["max_period"] = census.max_period;
    j["proof_level"] = census.proof == ProofLevel::proven ? "proven" : "bounded_search";
    Json orbits = Json::array();
    for (const auto& o : census.census.orbits) {
        Json jo;
        jo["period"] = o.period;
        Json pts = Json::array();
        for (const auto& x : o.points) pts.push_back(x.str());
        jo["points"] = std::move(pts);
        jo["branch"] = o.branch.word;
        orbits.push_back(std::move(jo));
    }
    j["orbits"] = std::move(orbits);
    Json families = Json::array();
    for (const auto& f : census.census.families) {
        Json jf;
        jf["period"] = f.period;
        jf["range"] = Json::array({f.range.lo.str(), f.range.hi.str()});
        jf["branch"] = f.branch.word;
        families.push_back(std::move(jf));
    }
    j["families"] = std::move(families);
    return j;
}

Json transfer_report_to_json(const TransferReport& rep) {
    Json j;
    j["exact_mode"] = rep.exact_mode;
    j["counts_equal"] = rep.counts_equal;
    Json counts = Json::array();
    for (const auto& [a, b] : rep.counts) counts.push_back(Json::array({a.str(), b.str()}));
    j["counts"] = std::move(counts);
    j["spectral_G"] = spectral_to_json(rep.spectral_g);
    j["spectral_H"] = spectral_to_json(rep.spectral_h);
    j["spectral_diff"] = rep.spectral_diff;
    j["within_tolerance"] = rep.within_tolerance;
    j["tolerance"] = rep.tolerance;
    return j;
}

Json verdict_to_json(const EmbeddingVerdict& verdict) {
    Json j;
    switch (verdict.kind) {
        case EmbeddingKind::i_embedded: j["verdict"] = "i_embedded"; break;
        case EmbeddingKind::almost_i_embedded: j["verdict"] = "almost_i_embedded"; break;
        case EmbeddingKind::neither: j["verdict"] = "neither"; break;
        case EmbeddingKind::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    Json entropy;
    entropy["status"] = verdict.entropy == EvidenceLevel::proven    ? "proven"
                        : verdict.entropy == EvidenceLevel::evidence ? "evidence"
                                                                     : "none";
    if (verdict.certificate) entropy["certificate"] = certificate_to_json(*verdict.certificate);
    entropy["spectral"] = spectral_to_json(verdict.spectral);
    entropy["grid_n"] = verdict.grid_n;
    j["entropy"] = std::move(entropy);
    j["periodic"] = census_to_json(verdict.census);
    return j;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << body;
}

Relation read_relation_file(const std::string& path) {
    return relation_from_json(Json::parse(read_text_file(path)));
}

void write_relation_file(const std::string& path, const Relation& g) {
    write_text_file(path, relation_to_json(g).dump(2) + "\n");
}

Homeomorphism read_homeo_file(const std::string& path) {
    return homeo_from_json(Json::parse(read_text_file(path)));
}

}  // namespace relent
