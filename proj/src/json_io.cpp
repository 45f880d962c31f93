#include "coverdyn/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace coverdyn {

namespace {

const Json& need(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw SchemaError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw SchemaError(where + "/" + key + ": missing");
    return *it;
}

long long need_int(const Json& j, const char* key, const std::string& where) {
    const Json& value = need(j, key, where);
    if (!value.is_number_integer()) throw SchemaError(where + "/" + key + ": expected an integer");
    return value.get<long long>();
}

std::string need_string(const Json& j, const char* key, const std::string& where) {
    const Json& value = need(j, key, where);
    if (!value.is_string()) throw SchemaError(where + "/" + key + ": expected a string");
    return value.get<std::string>();
}

Rat rat_from_json(const Json& value, const std::string& where) {
    try {
        if (value.is_number_integer()) return Rat(value.get<long long>());
        if (value.is_string()) return rat_parse(value.get<std::string>());
    } catch (const std::invalid_argument& error) {
        throw SchemaError(where + ": " + error.what());
    }
    throw SchemaError(where + ": expected an integer or a \"p/q\" string");
}

Json big_to_json(const BigInt& value) {
    if (value >= std::numeric_limits<long long>::min() &&
        value <= std::numeric_limits<long long>::max())
        return Json(value.convert_to<long long>());
    return Json(value.str());
}

}  // namespace

Json json_float(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return Json::parse(buffer);
}

Json parse_document(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw SchemaError("/: not valid JSON");
    return j;
}

Json skeleton_to_json(const CoverSkeleton& skeleton) {
    Json j;
    j["surface"] = skeleton.surface == Surface::Sphere ? "sphere" : "torus";
    j["degree"] = skeleton.degree;
    Json vertices = Json::array();
    for (const auto& v : skeleton.vertices) {
        Json vertex;
        vertex["id"] = v.id;
        vertex["marked"] = v.marked;
        vertex["local_degree"] = v.local_degree;
        vertices.push_back(std::move(vertex));
    }
    j["vertices"] = std::move(vertices);
    Json forward = Json::object();
    for (const auto& [from, to] : skeleton.forward) forward[from] = to;
    j["forward"] = std::move(forward);
    return j;
}

CoverSkeleton skeleton_from_json(const Json& j) {
    CoverSkeleton skeleton;
    std::string surface = need_string(j, "surface", "");
    if (surface == "sphere")
        skeleton.surface = Surface::Sphere;
    else if (surface == "torus")
        skeleton.surface = Surface::Torus;
    else
        throw SchemaError("/surface: expected \"sphere\" or \"torus\"");
    skeleton.degree = static_cast<int>(need_int(j, "degree", ""));

    const Json& vertices = need(j, "vertices", "");
    if (!vertices.is_array()) throw SchemaError("/vertices: expected an array");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const std::string where = "/vertices/" + std::to_string(i);
        const Json& item = vertices[i];
        VertexRecord v;
        v.id = need_string(item, "id", where);
        const Json& marked = need(item, "marked", where);
        if (!marked.is_boolean()) throw SchemaError(where + "/marked: expected a boolean");
        v.marked = marked.get<bool>();
        v.local_degree = static_cast<int>(need_int(item, "local_degree", where));
        skeleton.vertices.push_back(std::move(v));
    }
    const Json& forward = need(j, "forward", "");
    if (!forward.is_object()) throw SchemaError("/forward: expected an object");
    for (const auto& [key, value] : forward.items()) {
        if (!value.is_string()) throw SchemaError("/forward/" + key + ": expected a string");
        skeleton.forward[key] = value.get<std::string>();
    }
    skeleton.sort_vertices();
    return skeleton;
}

Json violations_to_json(const std::vector<InvariantViolation>& report) {
    Json j = Json::array();
    for (const auto& violation : report) {
        Json item;
        item["invariant"] = violation.invariant;
        item["vertex"] = violation.vertex;
        item["detail"] = violation.detail;
        j.push_back(std::move(item));
    }
    return j;
}

Json portrait_to_json(const Portrait& portrait) {
    Json j;
    j["vertices"] = portrait.vertices;
    Json edges = Json::array();
    for (const auto& edge : portrait.edges) {
        Json item;
        item["from"] = edge.from;
        item["to"] = edge.to;
        item["local_degree"] = edge.local_degree;
        edges.push_back(std::move(item));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json orbifold_to_json(const OrbifoldSignature& signature) {
    Json labels = Json::object();
    for (const auto& [id, label] : signature.labels)
        labels[id] = label.infinite ? Json("inf") : big_to_json(label.value);
    Json j;
    j["labels"] = std::move(labels);
    j["euler"] = rat_str(signature.euler);
    j["type"] = orbifold_type_name(signature.type);
    return j;
}

Json stability_to_json(const StabilityReport& report) {
    Json j;
    j["stable"] = report.stable;
    j["infinitely_stable"] = report.infinitely_stable;
    Json budgets = Json::object();
    for (const auto& [id, budget] : report.budgets) {
        Json item;
        item["expected"] = budget.expected;
        item["accounted"] = budget.accounted;
        budgets[id] = std::move(item);
    }
    j["budgets"] = std::move(budgets);
    return j;
}

ObstructionInput obstruction_input_from_json(const Json& j) {
    ObstructionInput input;
    const Json& curves = need(j, "curves", "");
    if (!curves.is_array()) throw SchemaError("/curves: expected an array");
    for (const auto& id : curves) {
        if (!id.is_string()) throw SchemaError("/curves: expected strings");
        std::string name = id.get<std::string>();
        if (name == "inessential" || name == "other")
            throw SchemaError("/curves: \"" + name + "\" is a reserved class name");
        input.multicurve.curves.push_back(std::move(name));
    }
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_object()) throw SchemaError("/labels: expected an object");
        for (const auto& [id, value] : it->items())
            input.multicurve.labels[id] = rat_from_json(value, "/labels/" + id);
    }
    for (const auto& id : input.multicurve.curves)
        if (!input.multicurve.labels.count(id)) input.multicurve.labels[id] = Rat(1);
    if (auto it = j.find("nesting"); it != j.end()) {
        if (!it->is_object()) throw SchemaError("/nesting: expected an object");
        input.multicurve.has_nesting = true;
        for (const auto& [child, parent] : it->items()) {
            if (!parent.is_string()) throw SchemaError("/nesting/" + child + ": expected a string");
            input.multicurve.nesting[child] = parent.get<std::string>();
        }
    }
    const Json& lifting = need(j, "lifting", "");
    if (!lifting.is_object()) throw SchemaError("/lifting: expected an object");
    for (const auto& [id, parts] : lifting.items()) {
        if (!parts.is_array()) throw SchemaError("/lifting/" + id + ": expected an array");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            const std::string where = "/lifting/" + id + "/" + std::to_string(i);
            const Json& item = parts[i];
            PreimageComponent part;
            part.degree = static_cast<int>(need_int(item, "degree", where));
            std::string kind = need_string(item, "class", where);
            if (kind == "inessential")
                part.kind = LiftClass::Inessential;
            else if (kind == "other")
                part.kind = LiftClass::PeripheralOther;
            else {
                part.kind = LiftClass::Curve;
                part.curve = kind;
            }
            if (auto disk = item.find("disk_degree"); disk != item.end()) {
                if (!disk->is_number_integer())
                    throw SchemaError(where + "/disk_degree: expected an integer");
                part.disk_degree = disk->get<int>();
            }
            input.lifting.components[id].push_back(std::move(part));
        }
    }
    return input;
}

Json multicurve_to_json(const LabeledMulticurve& multicurve, const LiftingData* lifting) {
    Json j;
    j["curves"] = multicurve.curves;
    Json labels = Json::object();
    for (const auto& id : multicurve.curves) {
        auto it = multicurve.labels.find(id);
        labels[id] = rat_str(it == multicurve.labels.end() ? Rat(1) : it->second);
    }
    j["labels"] = std::move(labels);
    if (multicurve.has_nesting) {
        Json nesting = Json::object();
        for (const auto& [child, parent] : multicurve.nesting) nesting[child] = parent;
        j["nesting"] = std::move(nesting);
    }
    if (lifting) {
        Json all = Json::object();
        for (const auto& id : multicurve.curves) {
            Json parts = Json::array();
            auto it = lifting->components.find(id);
            if (it != lifting->components.end()) {
                for (const auto& part : it->second) {
                    Json item;
                    item["degree"] = part.degree;
                    item["class"] = part.kind == LiftClass::Curve ? part.curve
                                    : part.kind == LiftClass::Inessential ? "inessential"
                                                                          : "other";
                    if (part.disk_degree) item["disk_degree"] = *part.disk_degree;
                    parts.push_back(std::move(item));
                }
            }
            all[id] = std::move(parts);
        }
        j["lifting"] = std::move(all);
    }
    return j;
}

Json obstruction_to_json(const ObstructionReport& report) {
    Json j;
    j["srs_exists"] = report.srs_exists;
    if (report.srs_exists) {
        Json witness = Json::object();
        for (std::size_t i = 0; i < report.matrix.curves.size(); ++i)
            witness[report.matrix.curves[i]] = rat_str(report.witness_labels[i]);
        j["witness_labels"] = std::move(witness);
        j["witness_support"] = report.witness_support;
    }
    j["spectral_radius_estimate"] = json_float(report.spectral_radius_estimate);
    if (report.lemma_p) j["lemma_p"] = *report.lemma_p;
    Json matrix;
    matrix["curves"] = report.matrix.curves;
    Json rows = Json::array();
    for (std::size_t i = 0; i < report.matrix.m.n; ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < report.matrix.m.n; ++k)
            row.push_back(rat_str(report.matrix.m.at(i, k)));
        rows.push_back(std::move(row));
    }
    matrix["entries"] = std::move(rows);
    j["matrix"] = std::move(matrix);
    return j;
}

Json lifting_graph_to_json(const LiftingGraph& graph) {
    Json j;
    j["curves"] = graph.curves;
    Json labels = Json::object();
    for (std::size_t i = 0; i < graph.curves.size(); ++i) labels[graph.curves[i]] = rat_str(graph.labels[i]);
    j["labels"] = std::move(labels);
    Json edges = Json::array();
    for (const auto& edge : graph.edges) {
        Json item;
        item["from"] = graph.curves[edge.from];
        item["to"] = graph.curves[edge.to];
        item["degree"] = edge.degree;
        edges.push_back(std::move(item));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json prop_levy_to_json(const PropLevyVerdict& verdict) {
    Json j;
    j["support"] = verdict.support;
    j["single_cycle"] = verdict.single_cycle;
    j["degrees_one"] = verdict.degrees_one;
    j["innermost"] = verdict.innermost;
    j["support_is_leaves"] = verdict.support_is_leaves;
    j["disks_checked"] = verdict.disks_checked;
    j["disks_one"] = verdict.disks_one;
    j["degenerate_implied"] = verdict.degenerate_implied;
    j["holds"] = verdict.holds;
    j["diagnostics"] = verdict.diagnostics;
    return j;
}

TorusMapSpec torus_spec_from_json(const Json& j) {
    const Json& matrix = need(j, "matrix", "");
    if (!matrix.is_array() || matrix.size() != 2 || !matrix[0].is_array() ||
        !matrix[1].is_array() || matrix[0].size() != 2 || matrix[1].size() != 2)
        throw SchemaError("/matrix: expected [[a, b], [c, d]]");
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            if (!matrix[r][c].is_number_integer())
                throw SchemaError("/matrix: entries must be integers");
    TorusMapSpec spec;
    spec.a = matrix[0][0].get<long long>();
    spec.b = matrix[0][1].get<long long>();
    spec.c = matrix[1][0].get<long long>();
    spec.d = matrix[1][1].get<long long>();
    if (auto it = j.find("translation"); it != j.end()) {
        if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() ||
            !(*it)[1].is_number_integer())
            throw SchemaError("/translation: expected [h1, h2] with h in {0, 1}");
        spec.half_tx = (*it)[0].get<int>();
        spec.half_ty = (*it)[1].get<int>();
        if (spec.half_tx < 0 || spec.half_tx > 1 || spec.half_ty < 0 || spec.half_ty > 1)
            throw SchemaError("/translation: components must be 0 or 1 (halves)");
    }
    return spec;
}

Json torus_spec_to_json(const TorusMapSpec& spec) {
    Json j;
    j["matrix"] = Json::array({Json::array({spec.a, spec.b}), Json::array({spec.c, spec.d})});
    j["translation"] = Json::array({spec.half_tx, spec.half_ty});
    return j;
}

Json torus_verdict_to_json(const TorusVerdict& verdict) {
    Json j;
    j["holomorphic"] = verdict.holomorphic;
    j["strongly_reducible"] = verdict.strongly_reducible;
    j["anosov"] = verdict.anosov;
    j["degree"] = verdict.degree;
    j["discriminant"] = verdict.discriminant;
    if (verdict.fixed_point) {
        Json point;
        point["re"] = json_float(verdict.fixed_point->re);
        point["im"] = json_float(verdict.fixed_point->im);
        if (verdict.fixed_point_re_exact) point["re_exact"] = rat_str(*verdict.fixed_point_re_exact);
        j["fixed_point"] = std::move(point);
    }
    if (verdict.invariant_slope) {
        j["invariant_slope"] = Json::array({verdict.invariant_slope->p, verdict.invariant_slope->q});
        j["slope_eigenvalue"] = *verdict.slope_eigenvalue;
        j["transition_entry"] = rat_str(*verdict.transition_entry);
    }
    if (verdict.stretch) j["stretch"] = json_float(*verdict.stretch);
    j["translation_length"] = json_float(verdict.translation_length);
    j["translation_realized"] = verdict.translation_realized;
    if (verdict.axis) {
        auto encode = [](double x) {
            return std::isinf(x) ? Json("inf") : json_float(x);
        };
        j["axis"] = Json::array({encode(verdict.axis->first), encode(verdict.axis->second)});
    }
    if (verdict.foliations) {
        auto pair_json = [](const std::pair<double, double>& v) {
            return Json::array({json_float(v.first), json_float(v.second)});
        };
        j["foliation_expanding"] = pair_json(verdict.foliations->first);
        j["foliation_contracting"] = pair_json(verdict.foliations->second);
    }
    return j;
}

Json descend_to_json(const ExceptionalSphereMap& map) {
    Json j;
    j["skeleton"] = skeleton_to_json(map.skeleton);
    Json permutation = Json::object();
    for (int k = 0; k < 4; ++k) permutation[kWeierstrassIds[k]] = map.action.image_of(k);
    j["permutation"] = std::move(permutation);
    j["bijective"] = map.action.bijective;
    j["homeomorphism"] = map.homeomorphism;
    j["source"] = torus_spec_to_json(map.source);
    return j;
}

}  // namespace coverdyn
