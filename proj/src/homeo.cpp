#include "relent/homeo.hpp"

#include <algorithm>

namespace relent {

Homeomorphism::Homeomorphism(Interval source, Interval target, std::vector<Piece> pieces)
    : source_(std::move(source)), target_(std::move(target)), pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw std::invalid_argument("homeomorphism needs at least one piece");
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return Scalar::cmp(a.xlo, b.xlo) < 0; });
    int sgn = pieces_.front().slope.sign();
    if (sgn == 0) throw std::invalid_argument("homeomorphism pieces must have nonzero slope");
    increasing_ = sgn > 0;
    if (pieces_.front().xlo != source_.lo || pieces_.back().xhi != source_.hi)
        throw std::invalid_argument("pieces do not cover the source interval");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        const Piece& p = pieces_[i];
        if (p.xlo >= p.xhi) throw std::invalid_argument("degenerate homeomorphism piece");
        if (p.slope.sign() != sgn) throw std::invalid_argument("homeomorphism must be strictly monotone");
        if (i > 0) {
            const Piece& q = pieces_[i - 1];
            if (q.xhi != p.xlo) throw std::invalid_argument("pieces do not cover the source interval");
            if (q.at(q.xhi) != p.at(p.xlo)) throw std::invalid_argument("pieces disagree at a shared endpoint");
        }
    }
    Scalar img_a = pieces_.front().at(source_.lo);
    Scalar img_b = pieces_.back().at(source_.hi);
    if (!increasing_) std::swap(img_a, img_b);
    if (img_a != target_.lo || img_b != target_.hi)
        throw std::invalid_argument("homeomorphism image does not equal the target interval");
}

Homeomorphism Homeomorphism::identity(const Interval& iv) {
    return Homeomorphism(iv, iv, {Piece{iv.lo, iv.hi, Scalar(1), Scalar(0)}});
}

Homeomorphism Homeomorphism::affine(const Interval& source, const Interval& target) {
    Scalar slope = target.length() / source.length();
    Scalar intercept = target.lo - slope * source.lo;
    return Homeomorphism(source, target, {Piece{source.lo, source.hi, slope, intercept}});
}

Scalar Homeomorphism::operator()(const Scalar& x) const {
    if (!source_.contains(x)) throw std::domain_error("argument outside homeomorphism source");
    for (const auto& p : pieces_) {
        if (x <= p.xhi) return p.at(x);
    }
    return pieces_.back().at(x);
}

Homeomorphism Homeomorphism::inverse() const {
    std::vector<Piece> inv;
    inv.reserve(pieces_.size());
    for (const auto& p : pieces_) {
        Scalar s = p.slope.reciprocal();
        Scalar e = -(p.intercept / p.slope);
        Scalar a = p.at(p.xlo), b = p.at(p.xhi);
        if (a > b) std::swap(a, b);
        inv.push_back(Piece{a, b, s, e});
    }
    return Homeomorphism(target_, source_, std::move(inv));
}

Homeomorphism Homeomorphism::compose(const Homeomorphism& inner) const {
    if (inner.target_ != source_) throw std::domain_error("composition domains do not match");
    // Split inner's pieces wherever their image crosses one of our breakpoints.
    std::vector<Scalar> cuts;
    for (const auto& q : inner.pieces_) cuts.push_back(q.xlo);
    cuts.push_back(inner.source_.hi);
    Homeomorphism inner_inv = inner.inverse();
    for (size_t i = 0; i + 1 < pieces_.size(); ++i) cuts.push_back(inner_inv(pieces_[i].xhi));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> out;
    for (size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Scalar& a = cuts[i];
        const Scalar& b = cuts[i + 1];
        Scalar mid_img = inner((a + b) / Scalar(2));
        const Piece* qp = nullptr;
        for (const auto& q : inner.pieces_)
            if (q.xlo <= a && b <= q.xhi) qp = &q;
        const Piece* pp = nullptr;
        for (const auto& p : pieces_)
            if (p.xlo <= mid_img && mid_img <= p.xhi) pp = &p;
        if (!qp || !pp) throw std::logic_error("composition pieces misaligned");
        out.push_back(Piece{a, b, pp->slope * qp->slope, pp->slope * qp->intercept + pp->intercept});
    }
    return Homeomorphism(inner.source_, target_, std::move(out));
}

bool operator==(const Homeomorphism& a, const Homeomorphism& b) {
    if (a.source_ != b.source_ || a.target_ != b.target_ || a.pieces_.size() != b.pieces_.size()) return false;
    for (size_t i = 0; i < a.pieces_.size(); ++i) {
        const auto& p = a.pieces_[i];
        const auto& q = b.pieces_[i];
        if (p.xlo != q.xlo || p.xhi != q.xhi || p.slope != q.slope || p.intercept != q.intercept) return false;
    }
    return true;
}

}  // namespace relent
