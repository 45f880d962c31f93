#pragma once

#include "coverdyn/torus.hpp"

#include <cstdint>
#include <string>

namespace coverdyn {

struct CliRequest {
    std::string command;         // validate, portrait, orbifold, stability, obstruction,
                                 // levy, torus-classify, torus-orbit, descend, constants,
                                 // gen-skeleton
    std::string input;           // inline JSON (leading '{') or a file path
    std::string skeleton_input;  // optional companion skeleton for `levy`
    std::string format = "json";  // json | text
    std::uint64_t seed = 1;       // gen-skeleton
    int count = 1;                // gen-skeleton
    std::string kind = "skeleton";  // gen-skeleton: skeleton | lifting | levy | affine
    int steps = 64;               // torus-orbit
    double start_re = 0.0;        // torus-orbit start
    double start_im = 1.0;
};

struct CliResult {
    int exit_code = 0;  // 0 ok, 1 validation diagnostics, 2 malformed input
    std::string output;
};

// Reports are byte-deterministic for a fixed request.
CliResult run_request(const CliRequest& request);

}  // namespace coverdyn
