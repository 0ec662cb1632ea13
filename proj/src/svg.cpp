#include "relent/svg.hpp"

#include "relent/entropy.hpp"

#include <cstdio>
#include <sstream>

namespace relent {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

}  // namespace

std::string render_svg(const Relation& g, const PlotOptions& opts) {
    const double lo = g.ambient().lo.to_double();
    const double hi = g.ambient().hi.to_double();
    const double span = hi - lo;
    const double inner = static_cast<double>(opts.size - 2 * opts.margin);
    auto px = [&](double v) { return opts.margin + (v - lo) / span * inner; };
    auto py = [&](double v) { return opts.size - opts.margin - (v - lo) / span * inner; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.size << "\" height=\"" << opts.size
        << "\" viewBox=\"0 0 " << opts.size << " " << opts.size << "\">\n";
    svg << "<rect width=\"" << opts.size << "\" height=\"" << opts.size << "\" fill=\"white\"/>\n";
    svg << "<rect x=\"" << fmt(px(lo)) << "\" y=\"" << fmt(py(hi)) << "\" width=\"" << fmt(inner) << "\" height=\""
        << fmt(inner) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << fmt(px(lo)) << "\" y1=\"" << fmt(py(lo)) << "\" x2=\"" << fmt(px(hi)) << "\" y2=\""
        << fmt(py(hi)) << "\" stroke=\"#bbbbbb\" stroke-dasharray=\"4 4\" stroke-width=\"1\"/>\n";

    switch (g.kind()) {
        case RelKind::points:
            for (const auto& p : g.point_data()) {
                svg << "<circle cx=\"" << fmt(px(p.first.to_double())) << "\" cy=\"" << fmt(py(p.second.to_double()))
                    << "\" r=\"4\" fill=\"#c22\"/>\n";
            }
            break;
        case RelKind::segments:
            for (const auto& s : g.segment_data()) {
                double ua = s.xlo.to_double(), ub = s.xhi.to_double();
                double x1 = s.transposed ? s.slope.to_double() * ua + s.intercept.to_double() : ua;
                double y1 = s.transposed ? ua : s.slope.to_double() * ua + s.intercept.to_double();
                double x2 = s.transposed ? s.slope.to_double() * ub + s.intercept.to_double() : ub;
                double y2 = s.transposed ? ub : s.slope.to_double() * ub + s.intercept.to_double();
                svg << "<line x1=\"" << fmt(px(x1)) << "\" y1=\"" << fmt(py(y1)) << "\" x2=\"" << fmt(px(x2))
                    << "\" y2=\"" << fmt(py(y2)) << "\" stroke=\"#1f4e9c\" stroke-width=\"2.5\"/>\n";
                if (s.is_degenerate())
                    svg << "<circle cx=\"" << fmt(px(x1)) << "\" cy=\"" << fmt(py(y1))
                        << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
            }
            break;
        case RelKind::grid: {
            double w = span / static_cast<double>(g.grid_n());
            for (const auto& c : g.grid_cells()) {
                double x = lo + static_cast<double>(c.first) * w;
                double y = lo + static_cast<double>(c.second + 1) * w;
                svg << "<rect x=\"" << fmt(px(x)) << "\" y=\"" << fmt(py(y)) << "\" width=\"" << fmt(w / span * inner)
                    << "\" height=\"" << fmt(w / span * inner) << "\" fill=\"#1f4e9c\" fill-opacity=\"0.6\"/>\n";
            }
            break;
        }
    }

    if (opts.mahavier_m >= 1 && opts.mahavier_m <= 3 && g.kind() == RelKind::points) {
        for (const auto& seq : mahavier_members(g, opts.mahavier_m)) {
            svg << "<circle cx=\"" << fmt(px(seq[0].to_double())) << "\" cy=\"" << fmt(py(seq[1].to_double()))
                << "\" r=\"2\" fill=\"#2a8c2a\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace relent
