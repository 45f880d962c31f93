#include "coverdyn/hyperelliptic.hpp"

#include "coverdyn/orbifold.hpp"
#include "coverdyn/torus.hpp"

#include <sstream>
#include <stdexcept>

namespace coverdyn {

const std::array<const char*, 4> kWeierstrassIds = {"w00", "w10", "w01", "w11"};

namespace {

// Index <-> coordinates in units of 1/2: (u1, u2) with u1, u2 in {0, 1}.
int coords_to_index(long long u1, long long u2) {
    u1 = ((u1 % 2) + 2) % 2;
    u2 = ((u2 % 2) + 2) % 2;
    return static_cast<int>(u1 + 2 * u2);
}

}  // namespace

WeierstrassAction weierstrass_action(const TorusMapSpec& map) {
    require_cover(map);
    WeierstrassAction action;
    for (int k = 0; k < 4; ++k) {
        long long u1 = k % 2, u2 = k / 2;
        action.image[k] = coords_to_index(map.a * u1 + map.b * u2 + map.half_tx,
                                          map.c * u1 + map.d * u2 + map.half_ty);
    }
    bool hit[4] = {false, false, false, false};
    for (int k = 0; k < 4; ++k) hit[action.image[k]] = true;
    action.bijective = hit[0] && hit[1] && hit[2] && hit[3];
    return action;
}

ExceptionalSphereMap descend(const TorusMapSpec& map) {
    require_cover(map);
    ExceptionalSphereMap result;
    result.source = map;
    result.action = weierstrass_action(map);
    result.homeomorphism = map.det() == 1;

    const long long degree = map.det();
    CoverSkeleton& skeleton = result.skeleton;
    skeleton.surface = Surface::Sphere;
    skeleton.degree = static_cast<int>(degree);

    long long indegree[4] = {0, 0, 0, 0};
    for (int k = 0; k < 4; ++k) ++indegree[result.action.image[k]];

    for (int k = 0; k < 4; ++k) {
        skeleton.vertices.push_back({kWeierstrassIds[k], true, 1});
        skeleton.forward[kWeierstrassIds[k]] = result.action.image_of(k);
    }
    // Each non-Weierstrass preimage of a fixed point of the involution folds
    // with its mirror image into one simple critical point downstairs.
    for (int k = 0; k < 4; ++k) {
        long long missing = degree - indegree[k];
        if (missing % 2 != 0)
            throw std::logic_error("descend: preimage count parity broken at " +
                                   std::string(kWeierstrassIds[k]));
        for (long long i = 0; i < missing / 2; ++i) {
            std::ostringstream id;
            id << "crit_" << kWeierstrassIds[k] << "_" << i;
            skeleton.vertices.push_back({id.str(), false, 2});
            skeleton.forward[id.str()] = kWeierstrassIds[k];
        }
    }
    skeleton.sort_vertices();

    auto violations = validate(skeleton);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "descend produced an invalid skeleton:";
        for (const auto& v : violations) os << " " << v.invariant;
        throw std::logic_error(os.str());
    }
    return result;
}

std::pair<LabeledMulticurve, LiftingData> descend_srs(const TorusMapSpec& map,
                                                      const LabeledMulticurve& torus_curve,
                                                      const LiftingData& torus_lifting) {
    TorusVerdict verdict = classify(map);
    if (!verdict.strongly_reducible)
        throw std::invalid_argument("descend_srs needs a strongly reducible torus map");
    if (torus_curve.curves.size() != 1)
        throw std::invalid_argument("descend_srs expects the single-curve torus system");
    require_consistent(torus_curve, torus_lifting, static_cast<int>(map.det()));

    const std::string& upstairs = torus_curve.curves.front();
    std::string downstairs = "q" + upstairs;

    // A symmetric pair of parallel torus curves descends to one sphere curve;
    // its det/|mu| preimage pairs descend to det/|mu| components, each still
    // covering with degree |mu|.
    LabeledMulticurve multicurve;
    multicurve.curves = {downstairs};
    multicurve.labels[downstairs] = torus_curve.labels.count(upstairs)
                                        ? torus_curve.labels.at(upstairs)
                                        : Rat(1);
    LiftingData lifting;
    for (const auto& part : torus_lifting.components.at(upstairs)) {
        if (part.kind != LiftClass::Curve)
            throw std::invalid_argument("torus slope curves lift to parallel slope curves only");
        lifting.components[downstairs].push_back(
            {part.degree, LiftClass::Curve, downstairs, std::nullopt});
    }
    return {std::move(multicurve), std::move(lifting)};
}

}  // namespace coverdyn
