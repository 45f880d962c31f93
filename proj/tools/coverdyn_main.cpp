#include "coverdyn/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"Classification toolkit for dynamical branched covers of the sphere and torus"};
    app.require_subcommand(1);

    coverdyn::CliRequest request;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", request.input, "JSON document (inline or a file path)")->required();
        cmd->add_option("--format", request.format, "Output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
    };

    const char* analysis_commands[] = {"validate",  "portrait",    "orbifold",       "stability",
                                       "obstruction", "torus-classify", "descend",   "constants"};
    for (const char* name : analysis_commands) add_input(app.add_subcommand(name));

    auto* levy = app.add_subcommand("levy");
    add_input(levy);
    levy->add_option("--skeleton", request.skeleton_input,
                     "Companion skeleton document; enables the minimal-system structure check");

    auto* orbit = app.add_subcommand("torus-orbit");
    add_input(orbit);
    orbit->add_option("--steps", request.steps, "Number of pullback steps");
    orbit->add_option("--start-re", request.start_re, "Start point, real part");
    orbit->add_option("--start-im", request.start_im, "Start point, imaginary part (> 0)");

    auto* gen = app.add_subcommand("gen-skeleton", "Reproducible random instances for fuzzing");
    gen->add_option("--seed", request.seed, "Generator seed");
    gen->add_option("--count", request.count, "Number of instances");
    gen->add_option("--kind", request.kind, "skeleton | lifting | levy | affine")
        ->check(CLI::IsMember({"skeleton", "lifting", "levy", "affine"}));
    gen->add_option("--format", request.format, "Output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CLI11_PARSE(app, argc, argv);

    request.command = app.get_subcommands().front()->get_name();
    coverdyn::CliResult result = coverdyn::run_request(request);
    std::cout << result.output;
    return result.exit_code;
}
