#include "coverdyn/levy.hpp"

#include "coverdyn/lp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace coverdyn {

LiftingGraph lifting_graph(const LabeledMulticurve& multicurve, const LiftingData& lifting) {
    if (!multicurve.curves.empty())
        require_consistent(multicurve, lifting, lifting.inferred_degree());
    LiftingGraph graph;
    graph.curves = multicurve.curves;
    for (const auto& id : multicurve.curves) {
        auto it = multicurve.labels.find(id);
        graph.labels.push_back(it == multicurve.labels.end() ? Rat(1) : it->second);
    }
    for (std::size_t j = 0; j < multicurve.curves.size(); ++j)
        for (const auto& part : lifting.components.at(multicurve.curves[j]))
            if (part.kind == LiftClass::Curve)
                graph.edges.push_back({j, *multicurve.index_of(part.curve), part.degree});
    return graph;
}

std::vector<std::vector<std::string>> find_levy_cycles(const LiftingGraph& graph) {
    const std::size_t n = graph.curves.size();
    // Adjacency over degree-1 edges, parallel edges collapsed.
    std::vector<std::set<std::size_t>> adj(n);
    for (const auto& edge : graph.edges)
        if (edge.degree == 1) adj[edge.from].insert(edge.to);

    std::vector<std::vector<std::string>> cycles;
    std::vector<std::size_t> path;
    std::vector<bool> in_path(n, false);

    // Enumerate cycles whose smallest vertex is `start`.
    std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t start, std::size_t v) {
        path.push_back(v);
        in_path[v] = true;
        for (std::size_t w : adj[v]) {
            if (w == start) {
                std::vector<std::string> cycle;
                for (std::size_t u : path) cycle.push_back(graph.curves[u]);
                cycles.push_back(std::move(cycle));
            } else if (w > start && !in_path[w]) {
                extend(start, w);
            }
        }
        in_path[v] = false;
        path.pop_back();
    };
    for (std::size_t start = 0; start < n; ++start) extend(start, start);
    return cycles;
}

namespace {

bool subset_feasible(const RatMatrix& m, const std::vector<std::size_t>& subset) {
    return expansion_witness(m.submatrix(subset)).has_value();
}

bool strongly_connected_subset(const RatMatrix& m, const std::vector<std::size_t>& subset) {
    const std::size_t k = subset.size();
    // Arc j -> i within the subset when m(i, j) > 0.
    std::vector<std::vector<std::size_t>> out(k), in(k);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (m.at(subset[b], subset[a]) != 0) {
                out[a].push_back(b);
                in[b].push_back(a);
            }
    auto reaches_all = [&](const std::vector<std::vector<std::size_t>>& next) {
        std::vector<bool> seen(k, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            std::size_t v = stack.back();
            stack.pop_back();
            for (std::size_t w : next[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        return count == k;
    };
    return reaches_all(out) && reaches_all(in);
}

}  // namespace

MinimalSrs minimal_srs(const LabeledMulticurve& multicurve, const LiftingData& lifting) {
    ObstructionReport report = decide_srs(multicurve, lifting);
    if (!report.srs_exists)
        throw std::invalid_argument("minimal_srs called on an unobstructed multicurve");
    const RatMatrix& m = report.matrix.m;
    const auto& names = report.matrix.curves;
    const std::size_t n = m.n;

    std::vector<std::size_t> found;
    if (n <= 20) {
        // Smallest subsets first. A minimum witness support is strongly
        // connected, so the connectivity filter cannot skip the answer.
        for (std::size_t size = 1; size <= n && found.empty(); ++size) {
            std::vector<std::size_t> subset(size);
            std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t pos,
                                                                       std::size_t from) {
                if (!found.empty()) return;
                if (pos == size) {
                    if (strongly_connected_subset(m, subset) && subset_feasible(m, subset))
                        found = subset;
                    return;
                }
                for (std::size_t v = from; v + (size - pos) <= n; ++v) {
                    subset[pos] = v;
                    choose(pos + 1, v + 1);
                }
            };
            choose(0, 0);
        }
    } else {
        found.clear();
        for (const auto& id : report.witness_support) {
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == id) found.push_back(i);
        }
        std::sort(found.begin(), found.end());
        bool shrunk = true;
        while (shrunk) {
            shrunk = false;
            for (std::size_t k = 0; k < found.size(); ++k) {
                std::vector<std::size_t> candidate = found;
                candidate.erase(candidate.begin() + static_cast<long>(k));
                if (!candidate.empty() && subset_feasible(m, candidate)) {
                    found = candidate;
                    shrunk = true;
                    break;
                }
            }
        }
    }
    if (found.empty()) throw std::logic_error("obstructed multicurve without a minimal support");

    // Certify minimality: every one-element-smaller subset must fail.
    for (std::size_t k = 0; k < found.size(); ++k) {
        std::vector<std::size_t> candidate = found;
        candidate.erase(candidate.begin() + static_cast<long>(k));
        if (!candidate.empty() && subset_feasible(m, candidate))
            throw std::logic_error("minimality certificate failed");
    }

    auto witness = expansion_witness(m.submatrix(found));
    if (!witness) throw std::logic_error("witness vanished on the certified support");

    MinimalSrs result;
    result.curves.has_nesting = multicurve.has_nesting;
    for (std::size_t k = 0; k < found.size(); ++k) {
        const std::string& id = names[found[k]];
        result.curves.curves.push_back(id);
        result.curves.labels[id] = (*witness)[k];
        auto parent = multicurve.nesting.find(id);
        if (parent != multicurve.nesting.end()) {
            bool kept = false;
            for (std::size_t other : found) kept = kept || names[other] == parent->second;
            if (kept) result.curves.nesting[id] = parent->second;
        }
    }
    result.support = result.curves.curves;
    std::sort(result.support.begin(), result.support.end());
    return result;
}

namespace {

bool is_strict_ancestor(const LabeledMulticurve& multicurve, const std::string& ancestor,
                        const std::string& descendant) {
    std::string cursor = descendant;
    while (true) {
        auto it = multicurve.nesting.find(cursor);
        if (it == multicurve.nesting.end()) return false;
        cursor = it->second;
        if (cursor == ancestor) return true;
    }
}

}  // namespace

PropLevyVerdict check_prop_levy(const LabeledMulticurve& multicurve, const LiftingData& lifting,
                                const CoverSkeleton& skeleton) {
    if (!multicurve.has_nesting)
        throw std::invalid_argument(
            "check_prop_levy needs the nesting forest; curves on the plane have no "
            "innermost structure without it");
    if (!is_topological_polynomial(skeleton).is_polynomial)
        throw std::invalid_argument("check_prop_levy needs a topological polynomial skeleton");

    MinimalSrs minimal = minimal_srs(multicurve, lifting);
    PropLevyVerdict verdict;
    verdict.support = minimal.support;
    const auto& support = minimal.support;
    auto in_support = [&](const std::string& id) {
        return std::binary_search(support.begin(), support.end(), id);
    };

    // Edges of the lifting graph with both ends in the support.
    struct Edge {
        std::string from, to;
        int degree;
        std::optional<int> disk;
    };
    std::vector<Edge> edges;
    for (const auto& id : multicurve.curves) {
        if (!in_support(id)) continue;
        for (const auto& part : lifting.components.at(id))
            if (part.kind == LiftClass::Curve && in_support(part.curve))
                edges.push_back({id, part.curve, part.degree, part.disk_degree});
    }

    std::map<std::string, int> out_degree, in_degree;
    for (const auto& id : support) out_degree[id] = in_degree[id] = 0;
    for (const auto& edge : edges) {
        ++out_degree[edge.from];
        ++in_degree[edge.to];
    }
    bool degrees_fit = edges.size() == support.size();
    for (const auto& id : support)
        degrees_fit = degrees_fit && out_degree[id] == 1 && in_degree[id] == 1;
    bool connected = false;
    if (degrees_fit && !support.empty()) {
        std::map<std::string, std::string> next;
        for (const auto& edge : edges) next[edge.from] = edge.to;
        std::string cursor = support.front();
        std::size_t steps = 0;
        do {
            cursor = next.at(cursor);
            ++steps;
        } while (cursor != support.front() && steps <= support.size());
        connected = steps == support.size();
    }
    verdict.single_cycle = degrees_fit && connected;
    if (!verdict.single_cycle)
        verdict.diagnostics.push_back("support edges do not form a single directed cycle");

    verdict.degrees_one = true;
    for (const auto& edge : edges)
        if (edge.degree != 1) {
            verdict.degrees_one = false;
            verdict.diagnostics.push_back("lift of '" + edge.from + "' onto '" + edge.to +
                                          "' has degree " + std::to_string(edge.degree));
        }

    verdict.innermost = true;
    for (const auto& outer : support)
        for (const auto& inner : support)
            if (outer != inner && is_strict_ancestor(multicurve, outer, inner)) {
                verdict.innermost = false;
                verdict.diagnostics.push_back("support curve '" + inner + "' is nested inside '" +
                                              outer + "'");
            }
    verdict.support_is_leaves = true;
    for (const auto& id : support) {
        for (const auto& [child, parent] : multicurve.nesting)
            if (parent == id && child != id) verdict.support_is_leaves = false;
    }

    bool any_disk = false, all_disks_one = true;
    for (const auto& edge : edges) {
        if (!edge.disk) continue;
        any_disk = true;
        if (*edge.disk != 1) {
            all_disks_one = false;
            verdict.diagnostics.push_back("disk over '" + edge.from + "' maps with degree " +
                                          std::to_string(*edge.disk));
        }
    }
    verdict.disks_checked = any_disk;
    verdict.disks_one = any_disk && all_disks_one;
    verdict.degenerate_implied = !any_disk;

    verdict.holds = verdict.single_cycle && verdict.degrees_one && verdict.innermost &&
                    (verdict.degenerate_implied || verdict.disks_one);
    return verdict;
}

}  // namespace coverdyn
