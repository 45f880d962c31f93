#include "doctest.h"

#include "coverdyn/generate.hpp"
#include "coverdyn/hyperelliptic.hpp"
#include "coverdyn/obstruction.hpp"
#include "coverdyn/orbifold.hpp"
#include "coverdyn/stability.hpp"

#include <set>

using namespace coverdyn;

TEST_CASE("half-translation swaps the fixed points in pairs") {
    WeierstrassAction action = weierstrass_action({1, 0, 0, 1, 1, 0});
    CHECK(action.bijective);
    CHECK(action.image_of(0) == "w10");
    CHECK(action.image_of(1) == "w00");
    CHECK(action.image_of(2) == "w11");
    CHECK(action.image_of(3) == "w01");

    WeierstrassAction identity = weierstrass_action({1, 0, 0, 1, 0, 0});
    CHECK(identity.bijective);
    for (int k = 0; k < 4; ++k) CHECK(identity.image[k] == k);
}

TEST_CASE("doubling collapses all fixed points; reported as a self-map") {
    WeierstrassAction action = weierstrass_action({2, 0, 0, 2, 0, 0});
    CHECK_FALSE(action.bijective);
    for (int k = 0; k < 4; ++k) CHECK(action.image_of(k) == "w00");
}

TEST_CASE("descent of the doubling map") {
    ExceptionalSphereMap descent = descend({2, 0, 0, 2, 0, 0});
    CHECK(descent.skeleton.degree == 4);
    CHECK_FALSE(descent.homeomorphism);
    REQUIRE(validate(descent.skeleton).empty());

    // 2 det - 2 = 6 simple critical points; w00 absorbs all four marked
    // preimages, so it receives none of the critical values.
    int criticals = 0;
    for (const auto& v : descent.skeleton.vertices)
        if (v.critical()) {
            ++criticals;
            CHECK(v.local_degree == 2);
        }
    CHECK(criticals == 6);
    CHECK(descent.skeleton.preimage_vertices("w00").size() == 4);  // the marked points
    CHECK(descent.skeleton.preimage_vertices("w10").size() == 2);  // two criticals

    OrbifoldSignature sig = orbifold_signature(descent.skeleton);
    for (const char* id : kWeierstrassIds) CHECK(sig.labels.at(id).value == 2);
    CHECK(is_exceptional(descent.skeleton));
    CHECK(lifts_to_torus(descent.skeleton).lifts);

    // No marked fixed point of full degree: not a topological polynomial.
    CHECK_FALSE(is_topological_polynomial(descent.skeleton).is_polynomial);
}

TEST_CASE("degree-1 descents are homeomorphisms that still move marked points") {
    ExceptionalSphereMap translated = descend({1, 0, 0, 1, 1, 0});
    CHECK(translated.homeomorphism);
    CHECK(validate(translated.skeleton).empty());
    CHECK(translated.skeleton.degree == 1);
    CHECK(translated.skeleton.forward.at("w00") == "w10");

    ExceptionalSphereMap untouched = descend({1, 0, 0, 1, 0, 0});
    CHECK(untouched.skeleton.forward.at("w00") == "w00");
    // Same matrix, different translation: distinct action on the marked set.
    CHECK(translated.skeleton.forward.at("w00") != untouched.skeleton.forward.at("w00"));
}

TEST_CASE("descended forward map equals the Weierstrass self-map") {
    Rng rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        TorusMapSpec spec = random_affine_map(rng, 1, 25);
        ExceptionalSphereMap descent = descend(spec);
        for (int k = 0; k < 4; ++k)
            CHECK(descent.skeleton.forward.at(kWeierstrassIds[k]) == descent.action.image_of(k));
    }
}

TEST_CASE("orbifold round-trip: descents of covering maps are (2,2,2,2)") {
    Rng rng(79);
    for (int trial = 0; trial < 200; ++trial) {
        TorusMapSpec spec = random_affine_map(rng, 2, 25);
        ExceptionalSphereMap descent = descend(spec);
        CAPTURE(spec.a);
        CAPTURE(spec.b);
        CAPTURE(spec.c);
        CAPTURE(spec.d);
        CAPTURE(spec.half_tx);
        CAPTURE(spec.half_ty);
        REQUIRE(validate(descent.skeleton).empty());
        CHECK(descent.skeleton.degree == spec.det());

        long long defect = 0;
        for (const auto& v : descent.skeleton.vertices)
            if (v.critical()) defect += v.local_degree - 1;
        CHECK(defect == 2 * spec.det() - 2);

        OrbifoldSignature sig = orbifold_signature(descent.skeleton);
        CHECK(sig.euler == Rat(0));
        for (const char* id : kWeierstrassIds) {
            REQUIRE(!sig.labels.at(id).infinite);
            CHECK(sig.labels.at(id).value == 2);
        }
        CHECK(is_exceptional(descent.skeleton));
        CHECK(lifts_to_torus(descent.skeleton).lifts);
        CHECK(lifts_to_torus(descent.skeleton).contradiction.empty());

        // All four marked points infinitely stable, matching the theorem.
        CHECK(infinitely_stable_points(descent.skeleton).infinitely_stable.size() == 4);
    }
}

TEST_CASE("descended reduction systems remain reduction systems") {
    for (TorusMapSpec spec : {TorusMapSpec{2, 1, 0, 2, 0, 0}, TorusMapSpec{2, 0, 0, 2, 0, 0},
                              TorusMapSpec{4, 0, 0, 1, 0, 0}, TorusMapSpec{1, 0, 7, 3, 1, 1}}) {
        CAPTURE(spec.a);
        CAPTURE(spec.b);
        CAPTURE(spec.c);
        CAPTURE(spec.d);
        auto [upstairs_curve, upstairs_lift] = construct_srs(spec);
        auto [curve, lift] = descend_srs(spec, upstairs_curve, upstairs_lift);
        REQUIRE(curve.curves.size() == 1);
        ObstructionReport downstairs = decide_srs(curve, lift);
        CHECK(downstairs.srs_exists);
        ObstructionReport upstairs = decide_srs(upstairs_curve, upstairs_lift);
        CHECK(downstairs.matrix.m.at(0, 0) == upstairs.matrix.m.at(0, 0));

        int total = 0;
        for (const auto& part : lift.components.at(curve.curves[0])) total += part.degree;
        CHECK(total == spec.det());
    }

    CHECK_THROWS_AS(descend_srs({5, 4, 4, 4, 0, 0}, {}, {}), std::invalid_argument);
}

TEST_CASE("shear and doubling descend to entry-one systems") {
    auto [shear_curve, shear_lift] = construct_srs({2, 1, 0, 2, 0, 0});
    auto [curve, lift] = descend_srs({2, 1, 0, 2, 0, 0}, shear_curve, shear_lift);
    ObstructionReport report = decide_srs(curve, lift);
    CHECK(report.matrix.m.at(0, 0) == Rat(1));

    auto [double_curve, double_lift] = construct_srs({2, 0, 0, 2, 0, 0});
    auto [curve2, lift2] = descend_srs({2, 0, 0, 2, 0, 0}, double_curve, double_lift);
    CHECK(decide_srs(curve2, lift2).matrix.m.at(0, 0) == Rat(1));
}

TEST_CASE("descend rejects bad translations and orientation") {
    CHECK_THROWS_AS(descend({1, 0, 0, -1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(weierstrass_action({1, 0, 0, 1, 2, 0}), std::invalid_argument);
}

TEST_CASE("classification metadata of a split descent") {
    TorusMapSpec spec{4, 0, 0, 1, 0, 0};
    ExceptionalSphereMap descent = descend(spec);
    TorusVerdict verdict = classify(descent.source);
    CHECK(verdict.strongly_reducible);
    CHECK(verdict.anosov);
    CHECK(descent.skeleton.degree == 4);
}
