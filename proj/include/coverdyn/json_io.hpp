#pragma once

#include "coverdyn/hyperelliptic.hpp"
#include "coverdyn/levy.hpp"
#include "coverdyn/multicurve.hpp"
#include "coverdyn/obstruction.hpp"
#include "coverdyn/orbifold.hpp"
#include "coverdyn/skeleton.hpp"
#include "coverdyn/stability.hpp"
#include "coverdyn/torus.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <string>

namespace coverdyn {

using Json = nlohmann::ordered_json;

// Malformed input: missing fields, wrong types, unparseable documents. The
// message carries the JSON-pointer path of the offending element.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed 12-significant-digit float encoding; reports are byte-deterministic.
Json json_float(double value);

Json skeleton_to_json(const CoverSkeleton& skeleton);
CoverSkeleton skeleton_from_json(const Json& j);

Json violations_to_json(const std::vector<InvariantViolation>& report);
Json portrait_to_json(const Portrait& portrait);
Json orbifold_to_json(const OrbifoldSignature& signature);
Json stability_to_json(const StabilityReport& report);

struct ObstructionInput {
    LabeledMulticurve multicurve;
    LiftingData lifting;
};
ObstructionInput obstruction_input_from_json(const Json& j);
Json multicurve_to_json(const LabeledMulticurve& multicurve, const LiftingData* lifting = nullptr);
Json obstruction_to_json(const ObstructionReport& report);
Json lifting_graph_to_json(const LiftingGraph& graph);
Json prop_levy_to_json(const PropLevyVerdict& verdict);

TorusMapSpec torus_spec_from_json(const Json& j);
Json torus_spec_to_json(const TorusMapSpec& spec);
Json torus_verdict_to_json(const TorusVerdict& verdict);
Json descend_to_json(const ExceptionalSphereMap& map);

Json parse_document(const std::string& text);

}  // namespace coverdyn
