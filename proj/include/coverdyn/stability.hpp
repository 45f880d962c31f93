#pragma once

#include "coverdyn/skeleton.hpp"

#include <map>
#include <string>
#include <vector>

namespace coverdyn {

struct PreimageBudget {
    // d minus the multiplicity absorbed by critical preimages: the number of
    // distinct preimage points the marked point actually has.
    long long expected = 0;
    // How many of those are vertices of the skeleton.
    long long accounted = 0;
};

struct StabilityReport {
    std::vector<std::string> stable;             // sorted
    std::vector<std::string> infinitely_stable;  // sorted, subset of stable
    std::map<std::string, PreimageBudget> budgets;
};

// A marked point is stable when every preimage is marked or critical, i.e.
// the budget is fully accounted inside the skeleton.
std::vector<std::string> stable_points(const CoverSkeleton& skeleton);

// Greatest subset Q of the stable points closed under taking non-critical
// vertex preimages. Critical preimages are exempt: at depth k they sit in
// Crit(f^k) automatically. The iteration removes violators until it
// stabilizes, in at most |P| rounds.
StabilityReport infinitely_stable_points(const CoverSkeleton& skeleton);

struct PropStableVerdict {
    std::size_t infinitely_stable_count = 0;
    bool exceptional = false;
    // Below four infinitely stable points, or exceptional. A false value
    // would falsify the theorem or the input model and is surfaced loudly.
    bool holds = false;
};

// Sphere covers of degree > 1 only.
PropStableVerdict check_prop_stable(const CoverSkeleton& skeleton);

}  // namespace coverdyn
