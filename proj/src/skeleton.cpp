#include "coverdyn/skeleton.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace coverdyn {

const VertexRecord* CoverSkeleton::find(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

bool CoverSkeleton::is_marked(const std::string& id) const {
    const VertexRecord* v = find(id);
    return v && v->marked;
}

bool CoverSkeleton::is_critical(const std::string& id) const {
    const VertexRecord* v = find(id);
    return v && v->critical();
}

int CoverSkeleton::local_degree(const std::string& id) const {
    const VertexRecord* v = find(id);
    return v ? v->local_degree : 1;
}

std::vector<std::string> CoverSkeleton::preimage_vertices(const std::string& id) const {
    std::vector<std::string> result;
    for (const auto& v : vertices) {
        auto it = forward.find(v.id);
        if (it != forward.end() && it->second == id) result.push_back(v.id);
    }
    return result;
}

void CoverSkeleton::sort_vertices() {
    std::sort(vertices.begin(), vertices.end(),
              [](const VertexRecord& a, const VertexRecord& b) { return a.id < b.id; });
}

std::vector<InvariantViolation> validate(const CoverSkeleton& skeleton) {
    std::vector<InvariantViolation> report;
    auto fail = [&](std::string invariant, std::string vertex, std::string detail) {
        report.push_back({std::move(invariant), std::move(vertex), std::move(detail)});
    };

    if (skeleton.degree < 1) fail("positive_degree", "", "degree must be >= 1");

    std::set<std::string> ids;
    for (const auto& v : skeleton.vertices) {
        if (!ids.insert(v.id).second) fail("unique_ids", v.id, "duplicate vertex id");
        if (v.local_degree < 1) fail("positive_local_degree", v.id, "local_degree must be >= 1");
        if (v.local_degree > skeleton.degree)
            fail("local_degree_bound", v.id, "local_degree exceeds the degree of the map");
        if (!v.marked && !v.critical())
            fail("vertex_in_p_or_crit", v.id, "vertex is neither marked nor critical");
    }

    for (const auto& v : skeleton.vertices) {
        auto it = skeleton.forward.find(v.id);
        if (it == skeleton.forward.end()) {
            fail("total_forward_map", v.id, "vertex has no forward image");
            continue;
        }
        if (!ids.count(it->second))
            fail("forward_target_exists", v.id, "forward image '" + it->second + "' is not a vertex");
    }
    for (const auto& [from, to] : skeleton.forward) {
        if (!ids.count(from)) fail("forward_source_exists", from, "forward map lists a non-vertex source");
        (void)to;
    }
    if (!report.empty()) return report;  // structural damage; later checks assume totality

    // Riemann-Hurwitz: sum of (local_degree - 1) over critical vertices.
    long long defect = 0;
    for (const auto& v : skeleton.vertices)
        if (v.critical()) defect += v.local_degree - 1;
    long long expected = skeleton.surface == Surface::Sphere ? 2LL * skeleton.degree - 2 : 0;
    if (skeleton.surface == Surface::Torus && defect != 0) {
        fail("torus_unbranched", "", "branched torus covers are not dynamical branched covers; "
                                     "critical vertices are forbidden on the torus");
    } else if (defect != expected) {
        std::ostringstream os;
        os << "sum(local_degree - 1) over critical vertices is " << defect << ", expected " << expected;
        fail("riemann_hurwitz", "", os.str());
    }

    // Degree budget: preimages of any point, weighted by local degree, fit in d.
    for (const auto& v : skeleton.vertices) {
        long long weight = 0;
        for (const auto& w : skeleton.preimage_vertices(v.id)) weight += skeleton.local_degree(w);
        if (weight > skeleton.degree) {
            std::ostringstream os;
            os << "preimages carry total local degree " << weight << " > " << skeleton.degree;
            fail("preimage_budget", v.id, os.str());
        }
    }

    for (const auto& v : skeleton.vertices) {
        const std::string& image = skeleton.forward.at(v.id);
        if (v.critical() && !skeleton.is_marked(image))
            fail("critical_values_marked", v.id, "critical value '" + image + "' is not marked");
        if (v.marked && !skeleton.is_marked(image))
            fail("marked_forward_closed", v.id, "image '" + image + "' of a marked vertex is not marked");
    }

    return report;
}

bool is_valid(const CoverSkeleton& skeleton) { return validate(skeleton).empty(); }

void require_valid(const CoverSkeleton& skeleton) {
    auto report = validate(skeleton);
    if (report.empty()) return;
    std::ostringstream os;
    os << "invalid skeleton:";
    for (const auto& violation : report) {
        os << " [" << violation.invariant;
        if (!violation.vertex.empty()) os << " @ " << violation.vertex;
        os << "]";
    }
    throw std::invalid_argument(os.str());
}

std::vector<std::string> post_critical_set(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    std::set<std::string> seen;
    for (const auto& v : skeleton.vertices) {
        if (!v.critical()) continue;
        std::string cursor = skeleton.forward.at(v.id);
        while (seen.insert(cursor).second) cursor = skeleton.forward.at(cursor);
    }
    return {seen.begin(), seen.end()};
}

Portrait extended_portrait(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    std::set<std::string> members;
    for (const auto& v : skeleton.vertices)
        if (v.critical()) members.insert(v.id);
    for (const auto& p : post_critical_set(skeleton)) members.insert(p);

    Portrait portrait;
    portrait.vertices.assign(members.begin(), members.end());
    for (const auto& id : portrait.vertices)
        portrait.edges.push_back({id, skeleton.forward.at(id), skeleton.local_degree(id)});
    return portrait;
}

PolynomialWitness is_topological_polynomial(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    if (skeleton.surface != Surface::Sphere)
        throw std::invalid_argument("topological polynomials live on the sphere");
    for (const auto& v : skeleton.vertices) {
        if (!v.marked) continue;
        if (skeleton.forward.at(v.id) != v.id) continue;
        if (v.local_degree == skeleton.degree) return {true, v.id};
    }
    return {false, ""};
}

bool levy_berstein_criterion(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    for (const auto& v : skeleton.vertices) {
        if (!v.marked) continue;
        std::string cursor = v.id;
        std::set<std::string> visited;
        bool hits_critical = false;
        while (visited.insert(cursor).second) {
            if (skeleton.is_critical(cursor)) {
                hits_critical = true;
                break;
            }
            cursor = skeleton.forward.at(cursor);
        }
        if (!hits_critical) return false;
    }
    return true;
}

}  // namespace coverdyn
