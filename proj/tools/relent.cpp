// relent — exact entropy, orbit, certificate and conjugacy analysis for
// closed relations on compact intervals.

#include "relent/io.hpp"
#include "relent/svg.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace relent;

struct CommonOpts {
    std::string relation;
    long grid = 64;
    long max_m = 8;
    int max_period = 12;
    std::string out;
    std::string format = "json";
    long d = 2;
    std::vector<std::string> params;
};

GalleryParams parse_params(const CommonOpts& o) {
    GalleryParams gp;
    for (const auto& kv : o.params) {
        auto eq = kv.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--param expects key=value");
        std::string key = kv.substr(0, eq);
        Scalar val = Scalar::parse(kv.substr(eq + 1));
        if (key == "a") {
            gp.a = val;
        } else if (key == "b") {
            gp.b = val;
        } else {
            throw CLI::ValidationError("unknown parameter '" + key + "' (expected a or b)");
        }
    }
    return gp;
}

Relation load_relation(const CommonOpts& o) {
    const std::string prefix = "gallery:";
    if (o.relation.rfind(prefix, 0) == 0) return gallery(o.relation.substr(prefix.size()), parse_params(o));
    return read_relation_file(o.relation);
}

void emit(const CommonOpts& o, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        if (!body.empty() && body.back() != '\n') std::cout << "\n";
    } else {
        write_text_file(o.out, body);
    }
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_relation = true) {
    auto rel = cmd->add_option("--relation", o.relation, "relation file path or gallery:<name>");
    if (needs_relation) rel->required();
    cmd->add_option("--grid", o.grid, "grid resolution n");
    cmd->add_option("--max-m", o.max_m, "largest Mahavier length m");
    cmd->add_option("--max-period", o.max_period, "largest orbit period searched");
    cmd->add_option("--out", o.out, "output path (stdout when omitted)");
    cmd->add_option("--format", o.format, "json | csv | svg");
    cmd->add_option("--d", o.d, "quadratic discriminant for parsed scalars");
    cmd->add_option("--param", o.params, "gallery parameter override, e.g. --param a=1/1+1/1*sqrt(2)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact entropy and periodic-orbit analysis of closed relations on intervals"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string homeo_spec, against, gallery_name;
    std::vector<std::string> hint_strs;
    int mahavier_m = 0;

    auto* c_entropy = app.add_subcommand("entropy", "box counts, ratio sequence and spectral estimate");
    add_common(c_entropy, o);

    auto* c_orbits = app.add_subcommand("orbits", "exact periodic-orbit census");
    add_common(c_orbits, o);

    auto* c_certify = app.add_subcommand("certify", "search for a well-alignedness entropy certificate");
    add_common(c_certify, o);
    c_certify->add_option("--b", hint_strs, "candidate split level hint (repeatable)");

    auto* c_conjugate = app.add_subcommand("conjugate", "map a relation through a homeomorphism");
    add_common(c_conjugate, o);
    c_conjugate->add_option("--homeo", homeo_spec, "homeomorphism file path or gallery:joj5_phi")->required();
    c_conjugate->add_option("--check-against", against,
                            "relation expected to equal the image (adds a transfer report)");

    auto* c_plot = app.add_subcommand("plot", "deterministic SVG rendering");
    add_common(c_plot, o);
    c_plot->add_option("--mahavier-m", mahavier_m, "scatter the m-prefix projections (finite relations, m <= 3)");

    auto* c_report = app.add_subcommand("report", "combined embedding classification");
    add_common(c_report, o);

    auto* c_gallery = app.add_subcommand("gallery", "list gallery entries or emit one as a relation file");
    add_common(c_gallery, o, false);
    c_gallery->add_option("name", gallery_name, "entry to emit (lists all when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_entropy->parsed()) {
            Relation g = load_relation(o);
            EntropyReport rep = entropy_sequence(g, o.grid, o.max_m);
            emit(o, o.format == "csv" ? entropy_report_to_csv(rep) : entropy_report_to_json(rep).dump(2));
            return 0;
        }
        if (c_orbits->parsed()) {
            Relation g = load_relation(o);
            OrbitCensus census = orbit_census(g, o.max_period);
            emit(o, census_to_json(census).dump(2));
            return 0;
        }
        if (c_certify->parsed()) {
            Relation g = load_relation(o);
            std::vector<Scalar> hints;
            for (const auto& h : hint_strs) hints.push_back(Scalar::parse(h));
            auto cert = certify(g, hints);
            emit(o, cert ? certificate_to_json(*cert).dump(2) : Json{{"certificate", nullptr}}.dump(2));
            return 0;
        }
        if (c_conjugate->parsed()) {
            Relation g = load_relation(o);
            Homeomorphism phi = homeo_spec == "gallery:joj5_phi" ? joj5_phi() : read_homeo_file(homeo_spec);
            Relation image = apply_homeo(g, phi);
            Json out;
            out["image"] = relation_to_json(image);
            if (!against.empty()) {
                CommonOpts o2 = o;
                o2.relation = against;
                Relation h = load_relation(o2);
                out["conjugate"] = are_conjugate(g, h, phi);
                if (out["conjugate"].get<bool>())
                    out["transfer"] = transfer_report_to_json(entropy_transfer_check(g, h, phi, o.grid, o.max_m));
            }
            emit(o, out.dump(2));
            return 0;
        }
        if (c_plot->parsed()) {
            Relation g = load_relation(o);
            PlotOptions popts;
            popts.mahavier_m = mahavier_m;
            emit(o, render_svg(g, popts));
            return 0;
        }
        if (c_report->parsed()) {
            Relation g = load_relation(o);
            EmbeddingVerdict v = classify_embedding(g, o.max_period, o.grid, o.max_m);
            emit(o, verdict_to_json(v).dump(2));
            return v.kind == EmbeddingKind::inconclusive ? 2 : 0;
        }
        if (c_gallery->parsed()) {
            if (gallery_name.empty()) {
                Json names = Json::array();
                for (const auto& n : gallery_names()) names.push_back(n);
                emit(o, Json{{"entries", names}}.dump(2));
            } else {
                emit(o, relation_to_json(gallery(gallery_name, parse_params(o))).dump(2));
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
