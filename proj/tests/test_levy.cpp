#include "doctest.h"

#include "coverdyn/generate.hpp"
#include "coverdyn/levy.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <set>

using namespace coverdyn;

namespace {

LiftingInstance levy_two_cycle() {
    LiftingInstance instance;
    instance.degree = 2;
    instance.multicurve.curves = {"g0", "g1"};
    instance.multicurve.labels = {{"g0", Rat(1)}, {"g1", Rat(1)}};
    instance.multicurve.has_nesting = true;  // both roots
    instance.lifting.components["g0"] = {{1, LiftClass::Curve, "g1", 1},
                                         {1, LiftClass::Inessential, "", std::nullopt}};
    instance.lifting.components["g1"] = {{1, LiftClass::Curve, "g0", 1},
                                         {1, LiftClass::Inessential, "", std::nullopt}};
    return instance;
}

}  // namespace

TEST_CASE("lifting graph construction") {
    LiftingInstance cycle = levy_two_cycle();
    LiftingGraph graph = lifting_graph(cycle.multicurve, cycle.lifting);
    REQUIRE(graph.edges.size() == 2);
    CHECK(graph.curves[graph.edges[0].from] == "g0");
    CHECK(graph.curves[graph.edges[0].to] == "g1");
    CHECK(graph.edges[0].degree == 1);
    CHECK(graph.edges[1].degree == 1);

    LiftingInstance half;
    half.degree = 2;
    half.multicurve.curves = {"g"};
    half.multicurve.labels = {{"g", Rat(1)}};
    half.lifting.components["g"] = {{2, LiftClass::Curve, "g", std::nullopt}};
    LiftingGraph loop = lifting_graph(half.multicurve, half.lifting);
    REQUIRE(loop.edges.size() == 1);
    CHECK(loop.edges[0].from == loop.edges[0].to);
    CHECK(loop.edges[0].degree == 2);

    LiftingGraph empty = lifting_graph({}, {});
    CHECK(empty.curves.empty());
    CHECK(empty.edges.empty());
}

TEST_CASE("Levy cycle search") {
    LiftingGraph cycle = lifting_graph(levy_two_cycle().multicurve, levy_two_cycle().lifting);
    auto cycles = find_levy_cycles(cycle);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == std::vector<std::string>{"g0", "g1"});

    // A degree-2 self-loop is not a Levy cycle; a degree-1 one is.
    LiftingGraph loops;
    loops.curves = {"a", "b"};
    loops.labels = {Rat(1), Rat(1)};
    loops.edges = {{0, 0, 2}, {1, 1, 1}};
    auto found = find_levy_cycles(loops);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == std::vector<std::string>{"b"});
}

TEST_CASE("every Levy cycle is a strong reduction system") {
    Rng rng(43);
    int with_cycles = 0;
    for (int trial = 0; trial < 200; ++trial) {
        LiftingInstance instance = random_lifting_instance(rng);
        LiftingGraph graph = lifting_graph(instance.multicurve, instance.lifting);
        auto cycles = find_levy_cycles(graph);
        if (cycles.empty()) continue;
        ++with_cycles;
        for (const auto& cycle : cycles) {
            // Unit labels on the cycle support must satisfy the condition.
            LabeledMulticurve restricted = instance.multicurve;
            for (const auto& id : restricted.curves)
                restricted.labels[id] =
                    std::count(cycle.begin(), cycle.end(), id) ? Rat(1) : Rat(0);
            CHECK(decide_srs(restricted, instance.lifting).srs_exists);
        }
    }
    CHECK(with_cycles > 10);
}

TEST_CASE("cycle enumeration agrees with arrangement brute force") {
    Rng rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        LiftingInstance instance = random_lifting_instance(rng, 5, 6);
        LiftingGraph graph = lifting_graph(instance.multicurve, instance.lifting);
        const std::size_t n = graph.curves.size();
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (const auto& edge : graph.edges)
            if (edge.degree == 1) adj[edge.from][edge.to] = true;
        auto expected = oracles::all_simple_cycles(adj);
        auto got = find_levy_cycles(graph);
        REQUIRE(got.size() == expected.size());
        std::set<std::vector<std::string>> seen(got.begin(), got.end());
        for (const auto& cycle : expected) {
            std::vector<std::string> names;
            for (std::size_t v : cycle) names.push_back(graph.curves[v]);
            CHECK(seen.count(names));
        }
    }
}

TEST_CASE("minimal strong reduction systems") {
    LiftingInstance cycle = levy_two_cycle();
    MinimalSrs both = minimal_srs(cycle.multicurve, cycle.lifting);
    CHECK(both.support == std::vector<std::string>{"g0", "g1"});

    // A Levy fixed curve next to a heavier self-loop: the fixed curve wins.
    LiftingInstance mixed;
    mixed.degree = 2;
    mixed.multicurve.curves = {"heavy", "levy"};
    mixed.multicurve.labels = {{"heavy", Rat(1)}, {"levy", Rat(1)}};
    mixed.lifting.components["heavy"] = {{2, LiftClass::Curve, "heavy", std::nullopt}};
    mixed.lifting.components["levy"] = {{1, LiftClass::Curve, "levy", std::nullopt},
                                        {1, LiftClass::Inessential, "", std::nullopt}};
    MinimalSrs minimal = minimal_srs(mixed.multicurve, mixed.lifting);
    CHECK(minimal.support == std::vector<std::string>{"levy"});
    CHECK(minimal.curves.labels.at("levy") > 0);

    LiftingInstance fixed;
    fixed.degree = 1;
    fixed.multicurve.curves = {"g"};
    fixed.multicurve.labels = {{"g", Rat(1)}};
    fixed.lifting.components["g"] = {{1, LiftClass::Curve, "g", std::nullopt}};
    CHECK(minimal_srs(fixed.multicurve, fixed.lifting).support ==
          std::vector<std::string>{"g"});

    LiftingInstance unobstructed;
    unobstructed.degree = 2;
    unobstructed.multicurve.curves = {"g"};
    unobstructed.multicurve.labels = {{"g", Rat(1)}};
    unobstructed.lifting.components["g"] = {{2, LiftClass::Curve, "g", std::nullopt}};
    CHECK_THROWS_AS(minimal_srs(unobstructed.multicurve, unobstructed.lifting),
                    std::invalid_argument);
}

TEST_CASE("structure check on a planted degenerate cycle") {
    LiftingInstance cycle = levy_two_cycle();
    PropLevyVerdict verdict =
        check_prop_levy(cycle.multicurve, cycle.lifting, power_map_skeleton(2));
    CHECK(verdict.single_cycle);
    CHECK(verdict.degrees_one);
    CHECK(verdict.innermost);
    CHECK(verdict.disks_checked);
    CHECK(verdict.disks_one);
    CHECK(verdict.holds);
}

TEST_CASE("structure check flags a degree-2 minimal system") {
    // Two degree-2 lifts of one curve onto itself: entry 1, minimal, but the
    // cycle degrees are wrong; this indicts the data, not the statement.
    LiftingInstance doubled;
    doubled.degree = 4;
    doubled.multicurve.curves = {"g"};
    doubled.multicurve.labels = {{"g", Rat(1)}};
    doubled.multicurve.has_nesting = true;
    doubled.lifting.components["g"] = {{2, LiftClass::Curve, "g", 2},
                                       {2, LiftClass::Curve, "g", 2}};
    PropLevyVerdict verdict =
        check_prop_levy(doubled.multicurve, doubled.lifting, power_map_skeleton(4));
    CHECK_FALSE(verdict.holds);
    CHECK_FALSE(verdict.degrees_one);
    CHECK_FALSE(verdict.single_cycle);  // two parallel self-loops
    CHECK(!verdict.diagnostics.empty());
}

TEST_CASE("singleton Levy self-loop passes") {
    LiftingInstance loop;
    loop.degree = 2;
    loop.multicurve.curves = {"g"};
    loop.multicurve.labels = {{"g", Rat(1)}};
    loop.multicurve.has_nesting = true;
    loop.lifting.components["g"] = {{1, LiftClass::Curve, "g", 1},
                                    {1, LiftClass::Inessential, "", std::nullopt}};
    PropLevyVerdict verdict = check_prop_levy(loop.multicurve, loop.lifting, power_map_skeleton(2));
    CHECK(verdict.holds);
}

TEST_CASE("missing nesting data is demanded explicitly") {
    LiftingInstance cycle = levy_two_cycle();
    cycle.multicurve.has_nesting = false;
    CHECK_THROWS_AS(check_prop_levy(cycle.multicurve, cycle.lifting, power_map_skeleton(2)),
                    std::invalid_argument);

    CoverSkeleton swap = fixtures::squaring();  // 1/z^2: no fixed point of full degree
    swap.forward["0"] = "inf";
    swap.forward["inf"] = "0";
    CHECK_THROWS_AS(check_prop_levy(levy_two_cycle().multicurve, levy_two_cycle().lifting, swap),
                    std::invalid_argument);
}

TEST_CASE("planted polynomial-consistent instances pass the structure check") {
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        PolynomialLevyInstance instance = random_polynomial_levy_instance(rng);
        PropLevyVerdict verdict =
            check_prop_levy(instance.multicurve, instance.lifting, instance.skeleton);
        CAPTURE(trial);
        CHECK(verdict.holds);
    }
}
