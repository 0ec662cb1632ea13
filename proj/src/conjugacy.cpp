#include "relent/conjugacy.hpp"

#include <algorithm>
#include <cmath>

namespace relent {

namespace {

// Map one plain segment piece by piece. The image of y = sx + e under
// (x, y) -> (phi(x), phi(y)) is affine only while x and y each stay inside
// one phi piece, so the x-domain is cut at phi's breakpoints and at the
// preimages of phi's breakpoints under the segment map.
void map_plain_segment(const AffineSegment& seg, const Homeomorphism& phi, std::vector<AffineSegment>& out) {
    std::vector<Scalar> cuts{seg.xlo, seg.xhi};
    for (const auto& piece : phi.pieces()) {
        for (const Scalar& bp : {piece.xlo, piece.xhi}) {
            if (seg.xlo < bp && bp < seg.xhi) cuts.push_back(bp);
            if (!seg.slope.is_zero()) {
                Scalar u = (bp - seg.intercept) / seg.slope;
                if (seg.xlo < u && u < seg.xhi) cuts.push_back(u);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end(), [](const Scalar& a, const Scalar& b) { return Scalar::cmp(a, b) < 0; });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    auto piece_at = [&](const Scalar& a, const Scalar& b) -> const Homeomorphism::Piece& {
        Scalar mid = (a + b) / Scalar(2);
        for (const auto& p : phi.pieces())
            if (p.xlo <= mid && mid <= p.xhi) return p;
        throw std::logic_error("value escaped the homeomorphism pieces");
    };

    auto emit = [&](const Scalar& a, const Scalar& b) {
        const auto& px = piece_at(a, b);
        Scalar ylo = seg.value_at(a), yhi = seg.value_at(b);
        const auto& py = piece_at(min(ylo, yhi), max(ylo, yhi));
        // X = px(x), Y = py(y) = py(s x + e)  =>  Y as a function of X.
        Scalar new_slope = py.slope * seg.slope / px.slope;
        Scalar new_intercept = py.slope * seg.intercept + py.intercept - new_slope * px.intercept;
        Scalar xa = px.at(a), xb = px.at(b);
        if (xa > xb) std::swap(xa, xb);
        out.emplace_back(new_slope, new_intercept, xa, xb, false);
    };
    if (cuts.size() == 1) {
        emit(cuts[0], cuts[0]);
    } else {
        for (size_t i = 0; i + 1 < cuts.size(); ++i) emit(cuts[i], cuts[i + 1]);
    }
}

}  // namespace

Relation apply_homeo(const Relation& g, const Homeomorphism& phi) {
    if (phi.source() != g.ambient()) throw std::domain_error("homeomorphism source must equal the ambient");
    switch (g.kind()) {
        case RelKind::points: {
            std::vector<Point> pts;
            pts.reserve(g.point_data().size());
            for (const auto& p : g.point_data()) pts.emplace_back(phi(p.first), phi(p.second));
            return Relation::points(phi.target(), std::move(pts));
        }
        case RelKind::segments: {
            std::vector<AffineSegment> out;
            for (const auto& s : g.segment_data()) {
                if (!s.transposed) {
                    map_plain_segment(s, phi, out);
                } else {
                    // (x, y) in T(seg) iff (y, x) in seg; images transpose too.
                    std::vector<AffineSegment> sub;
                    AffineSegment plain = s;
                    plain.transposed = false;
                    map_plain_segment(plain, phi, sub);
                    for (auto& m : sub) {
                        m.transposed = true;
                        out.push_back(std::move(m));
                    }
                }
            }
            return Relation::segments(phi.target(), std::move(out));
        }
        case RelKind::grid: {
            if (!phi.is_affine()) throw std::invalid_argument("rasterize after mapping instead");
            const long n = g.grid_n();
            std::set<Cell> cells;
            for (const auto& c : g.grid_cells()) {
                long i = phi.increasing() ? c.first : n - 1 - c.first;
                long j = phi.increasing() ? c.second : n - 1 - c.second;
                cells.emplace(i, j);
            }
            return Relation::grid(phi.target(), n, std::move(cells));
        }
    }
    throw std::logic_error("unreachable");
}

bool are_conjugate(const Relation& g, const Relation& h, const Homeomorphism& phi) {
    if (phi.source() != g.ambient() || phi.target() != h.ambient())
        throw std::domain_error("homeomorphism endpoints must match the ambients");
    return apply_homeo(g, phi) == h;
}

PeriodicOrbit conjugate_orbit(const PeriodicOrbit& orbit, const Homeomorphism& phi, const Relation& h) {
    PeriodicOrbit out;
    out.period = orbit.period;
    out.points.reserve(orbit.points.size());
    for (const auto& x : orbit.points) out.points.push_back(phi(x));
    const size_t p = out.points.size();
    for (size_t i = 0; i < p; ++i) {
        if (!contains(h, out.points[(i + 1) % p], out.points[i]))
            throw std::logic_error("conjugacy broken: transferred orbit is not an orbit of H");
    }
    return out;
}

TransferReport entropy_transfer_check(const Relation& g, const Relation& h, const Homeomorphism& phi, long n,
                                      long m_max, double tolerance) {
    if (!are_conjugate(g, h, phi)) throw std::domain_error("relations are not conjugate under phi");
    TransferReport rep;
    rep.tolerance = tolerance;
    rep.exact_mode = phi.is_affine();
    const long nn = 2 * n;
    if (rep.exact_mode) {
        for (long m = 1; m <= m_max; ++m) {
            Int cg = box_count(g, nn, m);
            Int ch = box_count(h, nn, m);
            if (cg != ch) rep.counts_equal = false;
            rep.counts.emplace_back(std::move(cg), std::move(ch));
        }
    }
    rep.spectral_g = spectral_entropy(transition_matrix(rasterize(g, nn)));
    rep.spectral_h = spectral_entropy(transition_matrix(rasterize(h, nn)));
    rep.spectral_diff = std::abs(rep.spectral_g.value() - rep.spectral_h.value());
    rep.within_tolerance = rep.spectral_diff <= tolerance;
    return rep;
}

Relation finitely_generated_transfer(const Relation& f, const Homeomorphism& phi) {
    Relation image = apply_homeo(f, phi);
    // phi is injective, so vertices correspond one to one; confirm the edge
    // sets match under that correspondence.
    for (const auto& p : f.point_data()) {
        if (!contains(image, phi(p.first), phi(p.second))) throw std::logic_error("edge lost in transfer");
    }
    if (image.point_data().size() != f.point_data().size()) throw std::logic_error("vertex collision in transfer");
    return image;
}

}  // namespace relent
