#include "coverdyn/cli.hpp"

#include "coverdyn/generate.hpp"
#include "coverdyn/json_io.hpp"
#include "coverdyn/rng.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace coverdyn {

namespace {

Json load_document(const std::string& input) {
    if (input.empty()) throw SchemaError("/: no input document");
    if (input.front() == '{' || input.front() == '[') return parse_document(input);
    std::ifstream file(input);
    if (!file) throw SchemaError("/: cannot read input file '" + input + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_document(buffer.str());
}

std::string render(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    // Text mode: flat `key: value` lines in document order.
    std::ostringstream os;
    std::function<void(const Json&, const std::string&)> walk = [&](const Json& node,
                                                                    const std::string& prefix) {
        if (node.is_object()) {
            for (const auto& [key, value] : node.items())
                walk(value, prefix.empty() ? key : prefix + "." + key);
        } else if (node.is_array()) {
            if (node.empty()) os << prefix << ": []\n";
            std::size_t index = 0;
            for (const auto& value : node) walk(value, prefix + "[" + std::to_string(index++) + "]");
        } else {
            os << prefix << ": " << node.dump() << "\n";
        }
    };
    walk(j, "");
    return os.str();
}

CliResult ok(const Json& j, const CliRequest& request) { return {0, render(j, request.format)}; }

CliResult run_validate(const CliRequest& request) {
    CoverSkeleton skeleton = skeleton_from_json(load_document(request.input));
    auto report = validate(skeleton);
    Json j;
    j["valid"] = report.empty();
    j["violations"] = violations_to_json(report);
    return {report.empty() ? 0 : 1, render(j, request.format)};
}

CliResult run_portrait(const CliRequest& request) {
    CoverSkeleton skeleton = skeleton_from_json(load_document(request.input));
    Json j = portrait_to_json(extended_portrait(skeleton));
    j["post_critical"] = post_critical_set(skeleton);
    auto polynomial = is_topological_polynomial(skeleton);
    j["topological_polynomial"] = polynomial.is_polynomial;
    if (polynomial.is_polynomial) j["polynomial_witness"] = polynomial.witness;
    j["levy_berstein"] = levy_berstein_criterion(skeleton);
    return ok(j, request);
}

CliResult run_orbifold(const CliRequest& request) {
    CoverSkeleton skeleton = skeleton_from_json(load_document(request.input));
    Json j = orbifold_to_json(orbifold_signature(skeleton));
    j["exceptional"] = is_exceptional(skeleton);
    if (skeleton.surface == Surface::Sphere) {
        auto lift = lifts_to_torus(skeleton);
        j["lifts_to_torus"] = lift.lifts;
        if (!lift.contradiction.empty()) j["contradiction"] = lift.contradiction;
    }
    return ok(j, request);
}

CliResult run_stability(const CliRequest& request) {
    CoverSkeleton skeleton = skeleton_from_json(load_document(request.input));
    Json j = stability_to_json(infinitely_stable_points(skeleton));
    if (skeleton.surface == Surface::Sphere && skeleton.degree > 1) {
        auto verdict = check_prop_stable(skeleton);
        Json prop;
        prop["infinitely_stable_count"] = verdict.infinitely_stable_count;
        prop["exceptional"] = verdict.exceptional;
        prop["holds"] = verdict.holds;
        j["prop_stable"] = std::move(prop);

        // Informational only: sharper counting applies to unmarked maps.
        std::vector<std::string> marked;
        for (const auto& v : skeleton.vertices)
            if (v.marked) marked.push_back(v.id);
        if (marked == post_critical_set(skeleton)) {
            j["remark"] = is_topological_polynomial(skeleton).is_polynomial
                              ? "marked set is the post-critical set of a topological polynomial: "
                                "fewer than 4 stable points is already forced for the map itself"
                              : "marked set is the post-critical set: fewer than 4 stable points "
                                "is forced for the second iterate";
        }
    }
    return ok(j, request);
}

CliResult run_obstruction(const CliRequest& request) {
    ObstructionInput input = obstruction_input_from_json(load_document(request.input));
    ObstructionReport report = decide_srs(input.multicurve, input.lifting);
    Json j = obstruction_to_json(report);
    j["f_stable"] = input.multicurve.curves.empty()
                        ? false
                        : is_f_stable(input.multicurve, input.lifting);
    if (!input.multicurve.curves.empty()) {
        PullbackResult pulled = pullback_labels(input.multicurve, input.lifting);
        Json labels = Json::object();
        for (const auto& id : pulled.restricted.curves)
            labels[id] = rat_str(pulled.restricted.labels.at(id));
        j["pullback_labels"] = std::move(labels);
        Json extras = Json::array();
        for (const auto& extra : pulled.other_classes) {
            Json item;
            item["source"] = extra.source;
            item["class"] = extra.kind == LiftClass::Inessential ? "inessential" : "other";
            item["degree"] = extra.degree;
            item["label"] = rat_str(extra.label);
            extras.push_back(std::move(item));
        }
        j["pullback_other_classes"] = std::move(extras);
    }
    return ok(j, request);
}

CliResult run_levy(const CliRequest& request) {
    ObstructionInput input = obstruction_input_from_json(load_document(request.input));
    LiftingGraph graph = lifting_graph(input.multicurve, input.lifting);
    Json j;
    j["graph"] = lifting_graph_to_json(graph);
    Json cycles = Json::array();
    for (const auto& cycle : find_levy_cycles(graph)) cycles.push_back(cycle);
    j["levy_cycles"] = std::move(cycles);
    ObstructionReport report = decide_srs(input.multicurve, input.lifting);
    j["srs_exists"] = report.srs_exists;
    if (report.srs_exists) {
        MinimalSrs minimal = minimal_srs(input.multicurve, input.lifting);
        Json m;
        m["support"] = minimal.support;
        Json labels = Json::object();
        for (const auto& id : minimal.curves.curves) labels[id] = rat_str(minimal.curves.labels.at(id));
        m["witness_labels"] = std::move(labels);
        j["minimal_srs"] = std::move(m);
        if (!request.skeleton_input.empty()) {
            CoverSkeleton skeleton = skeleton_from_json(load_document(request.skeleton_input));
            j["prop_levy"] = prop_levy_to_json(check_prop_levy(input.multicurve, input.lifting, skeleton));
        }
    }
    return ok(j, request);
}

CliResult run_torus_classify(const CliRequest& request) {
    TorusMapSpec spec = torus_spec_from_json(load_document(request.input));
    TorusVerdict verdict = classify(spec);
    Json j = torus_verdict_to_json(verdict);
    if (verdict.strongly_reducible) {
        auto [multicurve, lifting] = construct_srs(spec);
        j["srs"] = multicurve_to_json(multicurve, &lifting);
    }
    TranslationLength length = translation_length(spec);
    Json probe;
    probe["estimate"] = json_float(length.probe.estimate);
    probe["iterations"] = length.probe.iterations;
    probe["converged"] = length.probe.converged;
    j["translation_probe"] = std::move(probe);
    return ok(j, request);
}

CliResult run_torus_orbit(const CliRequest& request) {
    TorusMapSpec spec = torus_spec_from_json(load_document(request.input));
    if (!(request.start_im > 0)) throw std::invalid_argument("orbit start needs Im > 0");
    auto orbit = teich_orbit(spec, {request.start_re, request.start_im}, request.steps);
    Json points = Json::array();
    for (const auto& tau : orbit) {
        Json point;
        point["re"] = json_float(tau.re);
        point["im"] = json_float(tau.im);
        point["modulus_1_0"] = json_float(curve_modulus(tau, {1, 0}));
        point["modulus_0_1"] = json_float(curve_modulus(tau, {0, 1}));
        points.push_back(std::move(point));
    }
    Json j;
    j["points"] = std::move(points);
    return ok(j, request);
}

CliResult run_descend(const CliRequest& request) {
    TorusMapSpec spec = torus_spec_from_json(load_document(request.input));
    ExceptionalSphereMap descent = descend(spec);
    Json j = descend_to_json(descent);
    j["classification"] = torus_verdict_to_json(classify(spec));
    return ok(j, request);
}

CliResult run_constants(const CliRequest& request) {
    Json doc = load_document(request.input);
    std::string surface = doc.value("surface", std::string("sphere"));
    if (surface != "sphere" && surface != "torus")
        throw SchemaError("/surface: expected \"sphere\" or \"torus\"");
    long long marked = doc.contains("marked_count") && doc["marked_count"].is_number_integer()
                           ? doc["marked_count"].get<long long>()
                           : throw SchemaError("/marked_count: expected an integer");
    long long degree = doc.contains("degree") && doc["degree"].is_number_integer()
                           ? doc["degree"].get<long long>()
                           : throw SchemaError("/degree: expected an integer");
    if (!doc.contains("epsilon")) throw SchemaError("/epsilon: missing");
    Rat epsilon = doc["epsilon"].is_string() ? rat_parse(doc["epsilon"].get<std::string>())
                                             : Rat(doc["epsilon"].get<long long>());
    double d_bound = doc.value("D", 0.0);
    std::optional<Rat> k_upper;
    if (doc.contains("K_upper"))
        k_upper = doc["K_upper"].is_string() ? rat_parse(doc["K_upper"].get<std::string>())
                                             : Rat(doc["K_upper"].get<long long>());
    std::vector<RatMatrix> matrices;
    if (doc.contains("matrices")) {
        for (const auto& rows : doc["matrices"]) {
            RatMatrix m(rows.size());
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (!rows[i].is_array() || rows[i].size() != rows.size())
                    throw SchemaError("/matrices: expected square matrices");
                for (std::size_t k = 0; k < rows.size(); ++k)
                    m.at(i, k) = rows[i][k].is_string() ? rat_parse(rows[i][k].get<std::string>())
                                                        : Rat(rows[i][k].get<long long>());
            }
            matrices.push_back(std::move(m));
        }
    }
    ProofConstants constants =
        proof_constants(surface == "sphere", marked, degree, epsilon, d_bound, k_upper, matrices);
    Json j;
    j["xi"] = constants.xi;
    j["K"] = json_float(constants.growth_factor);
    j["N"] = json_float(constants.escape_threshold);
    if (constants.escape_threshold_exact) j["N_exact"] = rat_str(*constants.escape_threshold_exact);
    j["b"] = rat_str(constants.fudge);
    j["b_float"] = json_float(rat_to_double(constants.fudge));
    j["r_bound"] = json_float(constants.r_bound);
    if (constants.r_bound_exact) j["r_bound_exact"] = rat_str(*constants.r_bound_exact);
    j["C"] = json_float(constants.c_threshold);
    if (constants.power) j["p"] = *constants.power;
    return ok(j, request);
}

CliResult run_generate(const CliRequest& request) {
    Rng rng(request.seed);
    Json items = Json::array();
    for (int i = 0; i < request.count; ++i) {
        if (request.kind == "skeleton") {
            items.push_back(skeleton_to_json(random_sphere_skeleton(rng)));
        } else if (request.kind == "lifting") {
            LiftingInstance instance = random_lifting_instance(rng);
            items.push_back(multicurve_to_json(instance.multicurve, &instance.lifting));
        } else if (request.kind == "levy") {
            PolynomialLevyInstance instance = random_polynomial_levy_instance(rng);
            Json item = multicurve_to_json(instance.multicurve, &instance.lifting);
            item["skeleton"] = skeleton_to_json(instance.skeleton);
            items.push_back(std::move(item));
        } else if (request.kind == "affine") {
            items.push_back(torus_spec_to_json(random_affine_map(rng, 2, 25)));
        } else {
            throw SchemaError("/kind: expected skeleton, lifting, levy or affine");
        }
    }
    Json j;
    j["seed"] = request.seed;
    j["kind"] = request.kind;
    j["items"] = std::move(items);
    return ok(j, request);
}

}  // namespace

CliResult run_request(const CliRequest& request) {
    try {
        if (request.format != "json" && request.format != "text")
            throw SchemaError("/format: expected json or text");
        if (request.command == "validate") return run_validate(request);
        if (request.command == "portrait") return run_portrait(request);
        if (request.command == "orbifold") return run_orbifold(request);
        if (request.command == "stability") return run_stability(request);
        if (request.command == "obstruction") return run_obstruction(request);
        if (request.command == "levy") return run_levy(request);
        if (request.command == "torus-classify") return run_torus_classify(request);
        if (request.command == "torus-orbit") return run_torus_orbit(request);
        if (request.command == "descend") return run_descend(request);
        if (request.command == "constants") return run_constants(request);
        if (request.command == "gen-skeleton") return run_generate(request);
        return {2, "unknown command '" + request.command + "'\n"};
    } catch (const SchemaError& error) {
        return {2, std::string("input error: ") + error.what() + "\n"};
    } catch (const Json::exception& error) {
        return {2, std::string("input error: ") + error.what() + "\n"};
    } catch (const std::invalid_argument& error) {
        return {1, std::string("validation error: ") + error.what() + "\n"};
    }
}

}  // namespace coverdyn
