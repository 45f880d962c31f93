#include "coverdyn/stability.hpp"

#include "coverdyn/orbifold.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace coverdyn {

namespace {

PreimageBudget budget_for(const CoverSkeleton& skeleton, const std::string& id) {
    PreimageBudget budget;
    long long absorbed = 0;
    long long accounted = 0;
    for (const auto& w : skeleton.preimage_vertices(id)) {
        ++accounted;
        int deg = skeleton.local_degree(w);
        if (deg > 1) absorbed += deg - 1;
    }
    budget.expected = skeleton.degree - absorbed;
    budget.accounted = accounted;
    return budget;
}

}  // namespace

std::vector<std::string> stable_points(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    std::vector<std::string> result;
    for (const auto& v : skeleton.vertices) {
        if (!v.marked) continue;
        PreimageBudget budget = budget_for(skeleton, v.id);
        if (budget.expected == budget.accounted) result.push_back(v.id);
    }
    std::sort(result.begin(), result.end());
    return result;
}

StabilityReport infinitely_stable_points(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    StabilityReport report;
    report.stable = stable_points(skeleton);
    for (const auto& v : skeleton.vertices)
        if (v.marked) report.budgets[v.id] = budget_for(skeleton, v.id);

    std::set<std::string> q(report.stable.begin(), report.stable.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = q.begin(); it != q.end();) {
            bool keep = true;
            for (const auto& w : skeleton.preimage_vertices(*it)) {
                if (skeleton.is_critical(w)) continue;
                if (!q.count(w)) {
                    keep = false;
                    break;
                }
            }
            if (keep) {
                ++it;
            } else {
                it = q.erase(it);
                changed = true;
            }
        }
    }
    report.infinitely_stable.assign(q.begin(), q.end());
    return report;
}

PropStableVerdict check_prop_stable(const CoverSkeleton& skeleton) {
    require_valid(skeleton);
    if (skeleton.surface != Surface::Sphere || skeleton.degree <= 1)
        throw std::invalid_argument("check_prop_stable needs a sphere cover of degree > 1");

    PropStableVerdict verdict;
    verdict.infinitely_stable_count = infinitely_stable_points(skeleton).infinitely_stable.size();
    verdict.exceptional = is_exceptional(skeleton);
    verdict.holds = verdict.exceptional || verdict.infinitely_stable_count < 4;
    return verdict;
}

}  // namespace coverdyn
