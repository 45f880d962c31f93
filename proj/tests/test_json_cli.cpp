#include "doctest.h"

#include "coverdyn/cli.hpp"
#include "coverdyn/json_io.hpp"
#include "fixtures.hpp"

using namespace coverdyn;

TEST_CASE("skeleton documents round-trip") {
    CoverSkeleton rabbit = fixtures::rabbit();
    Json j = skeleton_to_json(rabbit);
    CoverSkeleton back = skeleton_from_json(j);
    CHECK(back.degree == rabbit.degree);
    CHECK(back.surface == rabbit.surface);
    CHECK(back.forward == rabbit.forward);
    REQUIRE(back.vertices.size() == rabbit.vertices.size());
    CHECK(skeleton_to_json(back) == j);
}

TEST_CASE("schema violations carry pointer paths") {
    CHECK_THROWS_WITH_AS(skeleton_from_json(parse_document(R"({"degree": 2})")),
                         doctest::Contains("/surface"), SchemaError);
    CHECK_THROWS_WITH_AS(
        skeleton_from_json(parse_document(
            R"({"surface":"sphere","degree":2,"vertices":[{"id":"x","marked":true}],"forward":{}})")),
        doctest::Contains("/vertices/0/local_degree"), SchemaError);
    CHECK_THROWS_AS(parse_document("{not json"), SchemaError);
    CHECK_THROWS_AS(torus_spec_from_json(parse_document(R"({"matrix":[[1,0],[0]]})")), SchemaError);
    CHECK_THROWS_AS(
        obstruction_input_from_json(parse_document(R"({"curves":["inessential"],"lifting":{}})")),
        SchemaError);
}

TEST_CASE("obstruction input parsing") {
    Json doc = parse_document(R"({
        "curves": ["a", "b"],
        "labels": {"a": "3/2", "b": 2},
        "nesting": {"b": "a"},
        "lifting": {
            "a": [{"degree": 1, "class": "b", "disk_degree": 1}, {"degree": 1, "class": "inessential"}],
            "b": [{"degree": 2, "class": "other"}]
        }
    })");
    ObstructionInput input = obstruction_input_from_json(doc);
    CHECK(input.multicurve.curves == std::vector<std::string>{"a", "b"});
    CHECK(input.multicurve.labels.at("a") == Rat(3, 2));
    CHECK(input.multicurve.labels.at("b") == Rat(2));
    CHECK(input.multicurve.has_nesting);
    CHECK(input.multicurve.nesting.at("b") == "a");
    REQUIRE(input.lifting.components.at("a").size() == 2);
    CHECK(input.lifting.components.at("a")[0].kind == LiftClass::Curve);
    CHECK(input.lifting.components.at("a")[0].disk_degree == 1);
    CHECK(input.lifting.components.at("b")[0].kind == LiftClass::PeripheralOther);
}

TEST_CASE("json_float pins the encoding") {
    CHECK(json_float(0.6931471805599453).dump() == "0.69314718056");
    CHECK(json_float(2.0).dump() == "2");
    CHECK(json_float(-0.5).dump() == "-0.5");
}

TEST_CASE("cli validate: valid input exits 0, violations exit 1, junk exits 2") {
    CliRequest good;
    good.command = "validate";
    good.input = skeleton_to_json(fixtures::squaring()).dump();
    CliResult result = run_request(good);
    CHECK(result.exit_code == 0);
    CHECK(parse_document(result.output)["valid"] == Json(true));

    CliRequest bad;
    bad.command = "validate";
    bad.input =
        R"({"surface":"sphere","degree":2,"vertices":[{"id":"p","marked":true,"local_degree":2}],"forward":{"p":"p"}})";
    CliResult failed = run_request(bad);
    CHECK(failed.exit_code == 1);
    Json report = parse_document(failed.output);
    CHECK(report["valid"] == Json(false));
    CHECK(report["violations"].size() > 0);

    CliRequest junk;
    junk.command = "validate";
    junk.input = "{broken";
    CHECK(run_request(junk).exit_code == 2);

    CliRequest missing;
    missing.command = "validate";
    missing.input = "/nonexistent/file.json";
    CHECK(run_request(missing).exit_code == 2);
}

TEST_CASE("cli reports are byte-deterministic and re-parseable") {
    CliRequest request;
    request.command = "torus-classify";
    request.input = R"({"matrix":[[4,0],[0,1]]})";
    CliResult first = run_request(request);
    CliResult second = run_request(request);
    CHECK(first.exit_code == 0);
    CHECK(first.output == second.output);
    Json verdict = parse_document(first.output);
    CHECK(verdict["strongly_reducible"] == Json(true));
    CHECK(verdict["anosov"] == Json(true));
    CHECK(verdict["stretch"] == Json(2));

    request.command = "orbifold";
    request.input = skeleton_to_json(fixtures::rabbit()).dump();
    Json orb = parse_document(run_request(request).output);
    CHECK(orb["euler"] == Json("-2"));
    CHECK(orb["type"] == Json("hyperbolic"));
    CHECK(orb["labels"]["c0"] == Json("inf"));
}

TEST_CASE("cli stability and obstruction commands") {
    CliRequest stability;
    stability.command = "stability";
    stability.input = skeleton_to_json(fixtures::rabbit()).dump();
    Json report = parse_document(run_request(stability).output);
    CHECK(report["infinitely_stable"].size() == 2);
    CHECK(report["prop_stable"]["holds"] == Json(true));

    CliRequest obstruction;
    obstruction.command = "obstruction";
    obstruction.input = R"({
        "curves": ["g0", "g1"],
        "labels": {"g0": 1, "g1": 1},
        "lifting": {
            "g0": [{"degree": 1, "class": "g1"}, {"degree": 1, "class": "inessential"}],
            "g1": [{"degree": 1, "class": "g0"}, {"degree": 1, "class": "inessential"}]
        }
    })";
    Json decision = parse_document(run_request(obstruction).output);
    CHECK(decision["srs_exists"] == Json(true));
    CHECK(decision["witness_support"].size() == 2);
    CHECK(decision["f_stable"] == Json(true));
    CHECK(decision["matrix"]["entries"][0][1] == Json("1"));
}

TEST_CASE("cli levy command with a companion skeleton") {
    CliRequest request;
    request.command = "levy";
    request.input = R"({
        "curves": ["g0", "g1"],
        "labels": {"g0": 1, "g1": 1},
        "nesting": {},
        "lifting": {
            "g0": [{"degree": 1, "class": "g1", "disk_degree": 1}, {"degree": 1, "class": "inessential"}],
            "g1": [{"degree": 1, "class": "g0", "disk_degree": 1}, {"degree": 1, "class": "inessential"}]
        }
    })";
    request.skeleton_input =
        R"({"surface":"sphere","degree":2,"vertices":[{"id":"0","marked":true,"local_degree":2},{"id":"inf","marked":true,"local_degree":2}],"forward":{"0":"0","inf":"inf"}})";
    CliResult result = run_request(request);
    REQUIRE(result.exit_code == 0);
    Json j = parse_document(result.output);
    CHECK(j["levy_cycles"].size() == 1);
    CHECK(j["srs_exists"] == Json(true));
    CHECK(j["minimal_srs"]["support"].size() == 2);
    CHECK(j["prop_levy"]["holds"] == Json(true));
}

TEST_CASE("cli descend and constants") {
    CliRequest descend_request;
    descend_request.command = "descend";
    descend_request.input = R"({"matrix":[[2,0],[0,2]]})";
    Json descent = parse_document(run_request(descend_request).output);
    CHECK(descent["skeleton"]["degree"] == Json(4));
    CHECK(descent["permutation"]["w10"] == Json("w00"));
    CHECK(descent["bijective"] == Json(false));

    CliRequest constants;
    constants.command = "constants";
    constants.input = R"({"surface":"sphere","marked_count":4,"degree":2,"epsilon":1,"D":0.0})";
    Json values = parse_document(run_request(constants).output);
    CHECK(values["xi"] == Json(1));
    CHECK(values["b"] == Json("27"));
    CHECK(values["N"] == Json(2));
}

TEST_CASE("cli torus-orbit emits point lists with moduli") {
    CliRequest request;
    request.command = "torus-orbit";
    request.input = R"({"matrix":[[2,1],[0,2]]})";
    request.steps = 5;
    Json j = parse_document(run_request(request).output);
    REQUIRE(j["points"].size() == 6);
    CHECK(j["points"][1]["re"] == Json(0.5));
    CHECK(j["points"][1]["im"] == Json(1));
}

TEST_CASE("cli gen-skeleton is reproducible per seed") {
    CliRequest request;
    request.command = "gen-skeleton";
    request.seed = 99;
    request.count = 3;
    CliResult a = run_request(request);
    CliResult b = run_request(request);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    Json j = parse_document(a.output);
    REQUIRE(j["items"].size() == 3);
    for (const auto& item : j["items"]) {
        CoverSkeleton s = skeleton_from_json(item);
        CHECK(validate(s).empty());
    }

    request.seed = 100;
    CHECK(run_request(request).output != a.output);

    request.kind = "levy";
    request.count = 2;
    CHECK(run_request(request).exit_code == 0);
}

TEST_CASE("cli text format flattens the report") {
    CliRequest request;
    request.command = "torus-classify";
    request.input = R"({"matrix":[[2,0],[0,2]]})";
    request.format = "text";
    CliResult result = run_request(request);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("holomorphic: true") != std::string::npos);

    request.format = "yaml";
    CHECK(run_request(request).exit_code == 2);
}
