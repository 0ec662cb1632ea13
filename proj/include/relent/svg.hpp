#pragma once

#include "relent/relation.hpp"

#include <string>

namespace relent {

struct PlotOptions {
    int size = 640;        // canvas edge in px
    int margin = 40;
    int mahavier_m = 0;    // when 1..3 on a finite relation, scatter (x1, x2) of the m-prefixes
};

/// Deterministic SVG rendering of a relation inside its ambient square
/// (frame, dashed diagonal, then the body). Byte-for-byte stable for equal
/// inputs.
std::string render_svg(const Relation& g, const PlotOptions& opts = {});

}  // namespace relent
