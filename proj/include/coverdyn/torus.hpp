#pragma once

#include "coverdyn/multicurve.hpp"

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coverdyn {

// Affine self-cover of the torus: v -> M v + t with M integral of positive
// determinant and t a half-integer translation (so it commutes with v -> -v).
struct TorusMapSpec {
    long long a = 1, b = 0, c = 0, d = 1;  // M = (a b; c d)
    int half_tx = 0, half_ty = 0;          // t = (half_tx, half_ty) / 2

    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }
    long long discriminant() const { return trace() * trace() - 4 * det(); }
    bool scalar() const { return b == 0 && c == 0 && a == d; }
};

// Throws std::invalid_argument on orientation-reversing or degenerate
// matrices and on translations outside the half-integer lattice.
void require_cover(const TorusMapSpec& spec);

struct TeichPoint {
    double re = 0.0;
    double im = 1.0;

    std::complex<double> value() const { return {re, im}; }
};

struct Slope {
    long long p = 0, q = 0;  // primitive integer vector
};

std::string slope_curve_id(const Slope& slope);

struct TorusVerdict {
    bool holomorphic = false;
    bool strongly_reducible = false;
    bool anosov = false;
    long long degree = 1;
    long long discriminant = 0;

    std::optional<TeichPoint> fixed_point;      // interior fixed point of the action
    std::optional<Rat> fixed_point_re_exact;    // its real part, always rational

    std::optional<Slope> invariant_slope;       // primitive eigenvector, small eigenvalue
    std::optional<long long> slope_eigenvalue;  // mu with mu^2 <= degree
    std::optional<Rat> transition_entry;        // degree / mu^2

    std::optional<double> stretch;              // lambda = |mu_1| / sqrt(degree) > 1
    double translation_length = 0.0;
    bool translation_realized = true;
    // Endpoints of the invariant geodesic when the action is loxodromic;
    // an infinite endpoint is reported as +inf.
    std::optional<std::pair<double, double>> axis;
    // Expanding and contracting eigendirections when Anosov.
    std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> foliations;
};

// Exact integer trichotomy for Delta = tr^2 - 4 det: an interior fixed point
// iff Delta < 0 or M is scalar, an invariant rational slope iff Delta is a
// perfect square, and a stretch factor iff Delta > 0.
TorusVerdict classify(const TorusMapSpec& spec);

// Single curve at the invariant slope with its full preimage: det/|mu|
// components of degree |mu| each, so the transition entry is det/mu^2.
// Requires a strongly reducible spec. Scalar matrices use slope (1, 0).
std::pair<LabeledMulticurve, LiftingData> construct_srs(const TorusMapSpec& spec);

// Pullback of lattice shapes: tau -> (d tau + b) / (c tau + a), from the
// marking convention e1 -> 1, e2 -> tau. Positive determinant keeps the
// image in the upper half-plane.
TeichPoint teich_action(const TorusMapSpec& spec, const TeichPoint& tau);

// Half the curvature -1 hyperbolic distance.
double teich_distance(const TeichPoint& x, const TeichPoint& y);

// Modulus (height over circumference) of the maximal flat annulus about the
// (p, q) curve on C / (Z + tau Z): Im tau / |p + q tau|^2.
double curve_modulus(const TeichPoint& tau, const Slope& slope);

std::vector<TeichPoint> teich_orbit(const TorusMapSpec& spec, TeichPoint start, int steps);

struct ProbeResult {
    double estimate = 0.0;   // limit of d(tau_0, tau_{n+1}) - d(tau_0, tau_n)
    int iterations = 0;
    bool converged = false;
    std::vector<double> trail;  // last few increments, oldest first
};

// Orbit probe from tau = i: the increments of the distance to the start
// converge to the translation length for parabolic and loxodromic actions
// and oscillate for generic elliptic ones; non-convergence is reported, the
// exact value is never overridden.
ProbeResult translation_probe(const TorusMapSpec& spec, int iterations = 10000,
                              double tolerance = 1e-9);

struct TranslationLength {
    double value = 0.0;
    bool realized = true;
    std::optional<std::pair<double, double>> axis;
    ProbeResult probe;
};

TranslationLength translation_length(const TorusMapSpec& spec, int iterations = 10000,
                                     double tolerance = 1e-9);

struct ModulusOrbitProbe {
    double max_modulus = 0.0;
    int first_exceeding = -1;  // first step where the bound was passed
};

// Tracks max(curve_modulus(tau_n, (1,0)), curve_modulus(tau_n, (0,1))) along
// the orbit of tau = i and reports when it first exceeds `bound`.
ModulusOrbitProbe modulus_escape_probe(const TorusMapSpec& spec, double bound, int iterations);

}  // namespace coverdyn
