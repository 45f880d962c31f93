#pragma once

#include "coverdyn/multicurve.hpp"
#include "coverdyn/obstruction.hpp"
#include "coverdyn/skeleton.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverdyn {

struct LiftingGraphEdge {
    std::size_t from = 0;  // downstairs curve
    std::size_t to = 0;    // homotopy class of the lifted component
    int degree = 1;
};

// One vertex per curve, one edge per preimage component whose class is again
// a curve of the multicurve; vertex labels are the multicurve labels.
struct LiftingGraph {
    std::vector<std::string> curves;
    std::vector<Rat> labels;
    std::vector<LiftingGraphEdge> edges;  // deterministic order
};

LiftingGraph lifting_graph(const LabeledMulticurve& multicurve, const LiftingData& lifting);

// All simple directed cycles using only degree-1 edges, as ordered curve
// lists starting at their smallest member; deterministic order.
std::vector<std::vector<std::string>> find_levy_cycles(const LiftingGraph& graph);

struct MinimalSrs {
    LabeledMulticurve curves;          // support with a positive witness as labels
    std::vector<std::string> support;  // sorted ids
};

// A support-minimal sub-multicurve still carrying a strong reduction system.
// Exact subset enumeration in increasing size for up to 20 curves, greedy
// peeling with a one-element-deletion certificate beyond that. Throws when
// the input is not obstructed.
MinimalSrs minimal_srs(const LabeledMulticurve& multicurve, const LiftingData& lifting);

struct PropLevyVerdict {
    std::vector<std::string> support;
    bool single_cycle = false;
    bool degrees_one = false;
    bool innermost = false;        // support pairwise un-nested
    bool support_is_leaves = false;  // diagnostic: every member a forest leaf
    bool disks_checked = false;    // disk degrees were present on the cycle
    bool disks_one = false;        // all present disk degrees are 1
    bool degenerate_implied = false;  // no disk data; degree-1 lifts of a
                                      // polynomial carry their disks with them
    bool holds = false;
    std::vector<std::string> diagnostics;
};

// Verifies that the minimal strong reduction system is a degenerate Levy
// cycle: a single directed cycle of degree-1 lifts supported on innermost
// curves, with disk degrees 1 where the data records them. A failure
// indicts the lifting data as inconsistent with a topological polynomial,
// not the statement. Requires the nesting forest and a topological
// polynomial skeleton.
PropLevyVerdict check_prop_levy(const LabeledMulticurve& multicurve, const LiftingData& lifting,
                                const CoverSkeleton& skeleton);

}  // namespace coverdyn
