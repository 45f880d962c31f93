#include "coverdyn/generate.hpp"

#include "coverdyn/obstruction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverdyn {

namespace {

constexpr int kMaxAttempts = 20000;

}  // namespace

CoverSkeleton power_map_skeleton(int degree) {
    CoverSkeleton skeleton;
    skeleton.surface = Surface::Sphere;
    skeleton.degree = degree;
    skeleton.vertices = {{"infinity", true, degree}, {"zero", true, degree}};
    skeleton.forward = {{"infinity", "infinity"}, {"zero", "zero"}};
    skeleton.sort_vertices();
    return skeleton;
}

CoverSkeleton random_sphere_skeleton(Rng& rng, int degree_min, int degree_max, int max_marked) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int d = static_cast<int>(rng.range(degree_min, degree_max));

        // Critical local degrees: composition of 2d - 2 into parts <= d - 1,
        // stored as degrees (part + 1).
        std::vector<int> critical_degrees;
        int remaining = 2 * d - 2;
        while (remaining > 0) {
            int part = static_cast<int>(rng.range(1, std::min(d - 1, remaining)));
            critical_degrees.push_back(part + 1);
            remaining -= part;
        }

        int marked_count = static_cast<int>(rng.range(1, max_marked));
        CoverSkeleton skeleton;
        skeleton.surface = Surface::Sphere;
        skeleton.degree = d;
        for (int i = 0; i < marked_count; ++i)
            skeleton.vertices.push_back({"m" + std::to_string(i), true, 1});

        // Some critical points coincide with marked points, the rest are free.
        int free_index = 0;
        std::vector<std::size_t> markable;
        for (std::size_t i = 0; i < static_cast<std::size_t>(marked_count); ++i) markable.push_back(i);
        for (int degree : critical_degrees) {
            if (!markable.empty() && rng.chance(1, 2)) {
                std::size_t pick = rng.below(markable.size());
                skeleton.vertices[markable[pick]].local_degree = degree;
                markable.erase(markable.begin() + static_cast<long>(pick));
            } else {
                skeleton.vertices.push_back({"c" + std::to_string(free_index++), false, degree});
            }
        }

        // Forward map into the marked set, respecting the degree budget.
        std::vector<long long> capacity(static_cast<std::size_t>(marked_count), d);
        bool stuck = false;
        for (const auto& v : skeleton.vertices) {
            std::vector<std::size_t> candidates;
            for (std::size_t i = 0; i < capacity.size(); ++i)
                if (capacity[i] >= v.local_degree) candidates.push_back(i);
            if (candidates.empty()) {
                stuck = true;
                break;
            }
            std::size_t target = candidates[rng.below(candidates.size())];
            skeleton.forward[v.id] = "m" + std::to_string(target);
            capacity[target] -= v.local_degree;
        }
        if (stuck) continue;

        skeleton.sort_vertices();
        if (is_valid(skeleton)) return skeleton;
    }
    throw std::runtime_error("random_sphere_skeleton: no valid instance found");
}

TorusMapSpec random_affine_map(Rng& rng, int det_min, int det_max) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        TorusMapSpec spec;
        spec.a = rng.range(-5, 5);
        spec.b = rng.range(-5, 5);
        spec.c = rng.range(-5, 5);
        spec.d = rng.range(-5, 5);
        spec.half_tx = static_cast<int>(rng.range(0, 1));
        spec.half_ty = static_cast<int>(rng.range(0, 1));
        long long det = spec.det();
        if (det >= det_min && det <= det_max) return spec;
    }
    throw std::runtime_error("random_affine_map: no matrix in determinant range");
}

TorusMapSpec random_anosov_map(Rng& rng, int det_max) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        TorusMapSpec spec;
        spec.a = rng.range(-6, 6);
        spec.b = rng.range(-6, 6);
        spec.c = rng.range(-6, 6);
        spec.d = rng.range(-6, 6);
        long long det = spec.det();
        if (det < 1 || det > det_max) continue;
        if (spec.discriminant() > 0) return spec;
    }
    throw std::runtime_error("random_anosov_map: nothing found");
}

LiftingInstance random_lifting_instance(Rng& rng, int max_curves, int degree_max) {
    LiftingInstance instance;
    int curve_count = static_cast<int>(rng.range(1, max_curves));
    instance.degree = static_cast<int>(rng.range(2, degree_max));
    for (int i = 0; i < curve_count; ++i) {
        std::string id = "g" + std::to_string(i);
        instance.multicurve.curves.push_back(id);
        // Mostly positive labels; the occasional zero exercises deletion.
        Rat label = rng.chance(1, 10) ? Rat(0) : Rat(rng.range(1, 6), rng.range(1, 4));
        instance.multicurve.labels[id] = label;
    }
    for (const auto& id : instance.multicurve.curves) {
        int remaining = instance.degree;
        auto& parts = instance.lifting.components[id];
        while (remaining > 0) {
            PreimageComponent part;
            part.degree = static_cast<int>(rng.range(1, remaining));
            std::uint64_t kind = rng.below(10);
            if (kind < 6) {
                part.kind = LiftClass::Curve;
                part.curve = instance.multicurve.curves[rng.below(instance.multicurve.curves.size())];
            } else if (kind < 8) {
                part.kind = LiftClass::Inessential;
            } else {
                part.kind = LiftClass::PeripheralOther;
            }
            remaining -= part.degree;
            parts.push_back(std::move(part));
        }
    }
    return instance;
}

namespace {

struct Forest {
    // parent[i] = -1 for roots.
    std::vector<int> parent;

    bool strict_ancestor(int above, int below) const {
        int cursor = parent[static_cast<std::size_t>(below)];
        while (cursor != -1) {
            if (cursor == above) return true;
            cursor = parent[static_cast<std::size_t>(cursor)];
        }
        return false;
    }
    bool comparable(int x, int y) const {
        return x == y || strict_ancestor(x, y) || strict_ancestor(y, x);
    }
};

struct PlainEdge {
    int from, to;
};

// Combinatorial shadow of "interiors map onto interiors" for curves in the
// plane, checked against the already accepted edges:
//   - one lift per class per curve;
//   - all lifts landing on one class come from nesting-comparable curves;
//   - an edge into a region below an accepted lift must start strictly below
//     the accepted lift's source, and vice versa.
bool edge_allowed(const Forest& forest, const std::vector<PlainEdge>& edges, int from, int to) {
    for (const auto& edge : edges) {
        if (edge.from == from && edge.to == to) return false;
        if (edge.to == to && edge.from != from && !forest.comparable(edge.from, from)) return false;
        if (forest.strict_ancestor(edge.to, to) && !forest.strict_ancestor(edge.from, from))
            return false;
        if (forest.strict_ancestor(to, edge.to) && !forest.strict_ancestor(from, edge.from))
            return false;
    }
    return true;
}

}  // namespace

PolynomialLevyInstance random_polynomial_levy_instance(Rng& rng, int max_curves, int degree_max) {
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        int d = static_cast<int>(rng.range(2, degree_max));
        int n = static_cast<int>(rng.range(2, max_curves));

        Forest forest;
        forest.parent.assign(static_cast<std::size_t>(n), -1);
        for (int i = 1; i < n; ++i)
            if (rng.chance(1, 2)) forest.parent[static_cast<std::size_t>(i)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(i)));

        std::vector<int> leaves;
        for (int i = 0; i < n; ++i) {
            bool has_child = false;
            for (int j = 0; j < n; ++j) has_child = has_child || forest.parent[static_cast<std::size_t>(j)] == i;
            if (!has_child) leaves.push_back(i);
        }
        if (leaves.empty()) continue;

        // Plant a degree-1 cycle among distinct leaves.
        int cycle_len = static_cast<int>(rng.range(1, std::min<std::size_t>(3, leaves.size())));
        for (int i = static_cast<int>(leaves.size()) - 1; i > 0; --i)
            std::swap(leaves[static_cast<std::size_t>(i)], leaves[rng.below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<PlainEdge> edges;
        std::vector<int> used(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < cycle_len; ++k) {
            int from = leaves[static_cast<std::size_t>(k)];
            int to = leaves[static_cast<std::size_t>((k + 1) % cycle_len)];
            edges.push_back({from, to});
            used[static_cast<std::size_t>(from)] += 1;
        }

        // Fill the remaining degree of every curve.
        struct RawPart {
            int degree;
            int target;  // -2 inessential, -3 peripheral, >= 0 curve index
        };
        std::map<int, std::vector<RawPart>> raw;
        for (int k = 0; k < cycle_len; ++k)
            raw[leaves[static_cast<std::size_t>(k)]].push_back(
                {1, leaves[static_cast<std::size_t>((k + 1) % cycle_len)]});
        bool failed = false;
        for (int j = 0; j < n && !failed; ++j) {
            int remaining = d - used[static_cast<std::size_t>(j)];
            while (remaining > 0) {
                int degree = static_cast<int>(rng.range(1, remaining));
                bool placed = false;
                if (rng.chance(3, 5)) {
                    std::vector<int> candidates;
                    for (int i = 0; i < n; ++i)
                        if (edge_allowed(forest, edges, j, i)) candidates.push_back(i);
                    if (!candidates.empty()) {
                        int target = candidates[rng.below(candidates.size())];
                        edges.push_back({j, target});
                        raw[j].push_back({degree, target});
                        placed = true;
                    }
                }
                if (!placed) raw[j].push_back({degree, rng.chance(2, 3) ? -2 : -3});
                remaining -= degree;
            }
        }
        if (failed) continue;

        PolynomialLevyInstance instance;
        instance.skeleton = power_map_skeleton(d);
        instance.multicurve.has_nesting = true;
        auto name = [](int i) { return "g" + std::to_string(i); };
        for (int i = 0; i < n; ++i) {
            instance.multicurve.curves.push_back(name(i));
            instance.multicurve.labels[name(i)] = Rat(1);
            if (forest.parent[static_cast<std::size_t>(i)] != -1)
                instance.multicurve.nesting[name(i)] = name(forest.parent[static_cast<std::size_t>(i)]);
        }
        for (int j = 0; j < n; ++j) {
            auto& parts = instance.lifting.components[name(j)];
            for (const auto& part : raw[j]) {
                PreimageComponent component;
                component.degree = part.degree;
                if (part.target >= 0) {
                    component.kind = LiftClass::Curve;
                    component.curve = name(part.target);
                    component.disk_degree = part.degree;
                } else {
                    component.kind = part.target == -2 ? LiftClass::Inessential
                                                       : LiftClass::PeripheralOther;
                }
                parts.push_back(std::move(component));
            }
        }
        require_consistent(instance.multicurve, instance.lifting, d);
        if (!decide_srs(instance.multicurve, instance.lifting).srs_exists)
            throw std::logic_error("planted cycle failed to obstruct");
        return instance;
    }
    throw std::runtime_error("random_polynomial_levy_instance: no instance found");
}

}  // namespace coverdyn
