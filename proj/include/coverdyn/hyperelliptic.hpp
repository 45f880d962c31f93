#pragma once

#include "coverdyn/multicurve.hpp"
#include "coverdyn/skeleton.hpp"
#include "coverdyn/torus.hpp"

#include <array>
#include <string>
#include <utility>

namespace coverdyn {

// The four fixed points of v -> -v, indexed (0,0), (1/2,0), (0,1/2),
// (1/2,1/2); ids w00, w10, w01, w11.
extern const std::array<const char*, 4> kWeierstrassIds;

struct WeierstrassAction {
    std::array<int, 4> image{};  // index of the image of each fixed point
    bool bijective = false;      // iff det M is odd

    std::string image_of(int k) const { return kWeierstrassIds[image[k]]; }
};

// Action of v -> M v + t on the half-integer points mod Z^2. A permutation
// exactly when the degree is odd; otherwise the induced self-map is reported
// as such.
WeierstrassAction weierstrass_action(const TorusMapSpec& map);

struct ExceptionalSphereMap {
    CoverSkeleton skeleton;     // degree det M on the sphere, four marked points
    WeierstrassAction action;
    TorusMapSpec source;
    bool homeomorphism = false;  // det M = 1 descents
};

// Quotient by the hyperelliptic involution. The descended cover has
// 2 det M - 2 simple critical points; the marked point under w receives
// (det M - indegree(w)) / 2 of their critical values, where the indegree is
// taken in the Weierstrass self-map. Validation failures of the constructed
// skeleton are internal errors and throw std::logic_error.
ExceptionalSphereMap descend(const TorusMapSpec& map);

// Pushes the slope-invariant strong reduction system of a symmetric pair of
// torus curves down to the sphere: the same component count and degrees, so
// the transition entry det/mu^2 survives the quotient.
std::pair<LabeledMulticurve, LiftingData> descend_srs(const TorusMapSpec& map,
                                                      const LabeledMulticurve& torus_curve,
                                                      const LiftingData& torus_lifting);

}  // namespace coverdyn
