#pragma once

#include "coverdyn/rational.hpp"
#include "coverdyn/skeleton.hpp"

#include <map>
#include <optional>
#include <string>

namespace coverdyn {

enum class OrbifoldType { Spherical, Euclidean, Hyperbolic };

// Extended natural: a positive integer or infinity.
struct OrbLabel {
    bool infinite = false;
    BigInt value = 1;  // meaningful when !infinite

    static OrbLabel inf() { return {true, 0}; }
    static OrbLabel finite(BigInt v) { return {false, std::move(v)}; }

    bool operator==(const OrbLabel& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }

    // Divisibility with infinity divisible by everything and dividing only itself.
    bool divides(const OrbLabel& o) const {
        if (infinite) return o.infinite;
        if (o.infinite) return true;
        return o.value % value == 0;
    }

    std::string str() const { return infinite ? "inf" : value.str(); }
};

struct OrbifoldSignature {
    std::map<std::string, OrbLabel> labels;  // one entry per marked vertex
    Rat euler;
    OrbifoldType type = OrbifoldType::Euclidean;
};

// The minimal labeling nu of the marked points with nu_p the lcm of the local
// degrees of all iterates at critical points whose orbit lands on p (lcm of
// the empty set is 1). A marked point sitting on a portrait cycle with
// edge-label product above 1 gets label infinity: the products along walks
// into it are unbounded. The Euler characteristic is exact and the type is
// the sign of the Euler characteristic, with no tolerance.
OrbifoldSignature orbifold_signature(const CoverSkeleton& skeleton);

// Torus covers of degree > 1, and sphere covers whose post-critical set is
// exactly four points of label 2.
bool is_exceptional(const CoverSkeleton& skeleton);

struct TorusLiftVerdict {
    bool lifts = false;
    // Always empty for valid input; a non-empty diagnostic means the cone
    // points fail the local-degree-one requirement, contradicting (2,2,2,2).
    std::string contradiction;
};

// Even-subgroup lifting criterion for sphere covers: exactly the (2,2,2,2)
// instances lift through the hyperelliptic involution to torus covers.
TorusLiftVerdict lifts_to_torus(const CoverSkeleton& skeleton);

const char* orbifold_type_name(OrbifoldType type);

}  // namespace coverdyn
