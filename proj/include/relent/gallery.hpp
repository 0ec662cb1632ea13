#pragma once

#include "relent/homeo.hpp"
#include "relent/relation.hpp"

#include <optional>
#include <string>
#include <vector>

namespace relent {

/// Optional parameter overrides for the parametrised gallery entries.
struct GalleryParams {
    std::optional<Scalar> a, b;
};

/// Built-in relations used throughout the test and acceptance suites:
///   H_ab          two branches y = a x, y = b x on restricted domains
///   H_thm11       H_ab plus the horizontal piece [0, b/a^2] x {b/a}
///   H_thm2        the full pair y = a x, y = b x inside the square
///   taletoti      the affine two-branch surjective relation (a in (1, sqrt 2))
///   A_joj5        its through-origin model on [0, 1]
///   B_joj5        the conjugate copy on [-1, 1]
///   counterexample the four-point relation {(0,1),(0,3/4),(3/4,0),(1,0)}
///   tent          the tent map graph
///   F4            the full shift on two symbols {0,1}^2
///
/// Parameter constraints are validated exactly and violations name the
/// failed inequality.
Relation gallery(const std::string& name, const GalleryParams& params = {});

std::vector<std::string> gallery_names();

/// Default parameters: a = 1 + sqrt 2, b = 1/3 for the H_* family;
/// a = 6 sqrt 2 / 7, b = 2/3 for taletoti and the joj5 pair.
Scalar default_a_hab();
Scalar default_b_hab();
Scalar default_a_taletoti();
Scalar default_b_taletoti();

/// The conjugacy phi(t) = t/2 + 1/2 from [-1, 1] onto [0, 1] relating
/// B_joj5 to A_joj5.
Homeomorphism joj5_phi();

}  // namespace relent
