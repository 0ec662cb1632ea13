#pragma once

#include "relent/interval.hpp"

#include <vector>

namespace relent {

/// Piecewise-affine homeomorphism between two closed intervals. Pieces cover
/// the source contiguously, agree at shared endpoints, all slopes share one
/// nonzero sign, and the image equals the target; the inverse is in closed
/// form.
class Homeomorphism {
public:
    struct Piece {
        Scalar xlo, xhi;   // domain of this piece, xlo < xhi
        Scalar slope, intercept;
        Scalar at(const Scalar& x) const { return slope * x + intercept; }
    };

    Homeomorphism(Interval source, Interval target, std::vector<Piece> pieces);

    static Homeomorphism identity(const Interval& iv);
    /// The unique increasing affine map source -> target.
    static Homeomorphism affine(const Interval& source, const Interval& target);

    const Interval& source() const { return source_; }
    const Interval& target() const { return target_; }
    const std::vector<Piece>& pieces() const { return pieces_; }
    bool increasing() const { return increasing_; }
    bool is_affine() const { return pieces_.size() == 1; }

    Scalar operator()(const Scalar& x) const;
    Homeomorphism inverse() const;
    /// Composition this ∘ inner (apply inner first).
    Homeomorphism compose(const Homeomorphism& inner) const;

    friend bool operator==(const Homeomorphism& a, const Homeomorphism& b);

private:
    Interval source_, target_;
    std::vector<Piece> pieces_;
    bool increasing_ = true;
};

}  // namespace relent
