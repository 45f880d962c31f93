#include "coverdyn/orbifold.hpp"

#include <algorithm>
#include <stdexcept>

namespace coverdyn {

namespace {

BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return a / boost::multiprecision::gcd(a, b) * b;
}

// The extended portrait is functional, so the only way to re-enter a vertex
// is along its eventual cycle. Returns, per vertex id, whether the vertex
// lies on a cycle whose edge-label product exceeds 1.
std::map<std::string, bool> heavy_cycle_members(const CoverSkeleton& skeleton) {
    std::map<std::string, bool> heavy;
    for (const auto& start : skeleton.vertices) {
        std::vector<std::string> path;
        std::map<std::string, std::size_t> index;
        std::string cursor = start.id;
        while (!index.count(cursor)) {
            if (heavy.count(cursor)) break;  // already resolved further along
            index[cursor] = path.size();
            path.push_back(cursor);
            cursor = skeleton.forward.at(cursor);
        }
        auto it = index.find(cursor);
        if (it != index.end()) {
            bool product_above_one = false;
            for (std::size_t i = it->second; i < path.size(); ++i)
                if (skeleton.local_degree(path[i]) > 1) product_above_one = true;
            for (std::size_t i = it->second; i < path.size(); ++i)
                heavy[path[i]] = product_above_one;
            path.resize(it->second);
        }
        for (const auto& id : path) heavy[id] = false;  // tail vertices, not on a cycle
    }
    return heavy;
}

}  // namespace

OrbifoldSignature orbifold_signature(const CoverSkeleton& skeleton) {
    require_valid(skeleton);

    auto heavy = heavy_cycle_members(skeleton);

    std::map<std::string, OrbLabel> labels;
    for (const auto& v : skeleton.vertices)
        if (v.marked) labels[v.id] = heavy[v.id] ? OrbLabel::inf() : OrbLabel::finite(1);

    // Finite labels: walk forward from each critical vertex, accumulating the
    // local degree of the iterate. Every remaining cycle has edge product 1,
    // so products repeat once a vertex is revisited.
    for (const auto& c : skeleton.vertices) {
        if (!c.critical()) continue;
        BigInt product = c.local_degree;
        std::set<std::string> visited{c.id};
        std::string cursor = skeleton.forward.at(c.id);
        while (true) {
            auto label = labels.find(cursor);
            if (label != labels.end() && !label->second.infinite)
                label->second.value = lcm_big(label->second.value, product);
            if (heavy[cursor]) break;
            if (!visited.insert(cursor).second) break;
            product *= skeleton.local_degree(cursor);
            cursor = skeleton.forward.at(cursor);
        }
    }

    OrbifoldSignature signature;
    signature.labels = std::move(labels);
    Rat chi = skeleton.surface == Surface::Sphere ? Rat(2) : Rat(0);
    for (const auto& [id, label] : signature.labels) {
        (void)id;
        if (label.infinite)
            chi -= 1;
        else
            chi += Rat(1, label.value) - 1;
    }
    signature.euler = chi;
    signature.type = chi > 0   ? OrbifoldType::Spherical
                     : chi < 0 ? OrbifoldType::Hyperbolic
                               : OrbifoldType::Euclidean;
    return signature;
}

bool is_exceptional(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    if (skeleton.surface == Surface::Torus) return skeleton.degree > 1;

    auto signature = orbifold_signature(skeleton);
    auto pcs = post_critical_set(skeleton);
    if (pcs.size() != 4) return false;
    for (const auto& p : pcs) {
        const OrbLabel& label = signature.labels.at(p);
        if (label.infinite || label.value != 2) return false;
    }
    for (const auto& [id, label] : signature.labels) {
        bool post_critical = std::binary_search(pcs.begin(), pcs.end(), id);
        if (!post_critical && (label.infinite || label.value != 1)) return false;
    }
    return true;
}

TorusLiftVerdict lifts_to_torus(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    if (skeleton.surface != Surface::Sphere)
        throw std::invalid_argument("lifts_to_torus applies to sphere skeletons");
    if (!is_exceptional(skeleton)) return {false, ""};

    // (2,2,2,2) forces local degree 1 at each cone point; a failure here
    // would mean the skeleton contradicts its own orbifold signature.
    for (const auto& p : post_critical_set(skeleton))
        if (skeleton.local_degree(p) != 1)
            return {true, "cone point '" + p + "' has local degree > 1"};
    return {true, ""};
}

const char* orbifold_type_name(OrbifoldType type) {
    switch (type) {
        case OrbifoldType::Spherical: return "spherical";
        case OrbifoldType::Euclidean: return "euclidean";
        case OrbifoldType::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

}  // namespace coverdyn
