#include "coverdyn/torus.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace coverdyn {

void require_cover(const TorusMapSpec& spec) {
    if (spec.det() < 1)
        throw std::invalid_argument("torus covers need det M >= 1; orientation-reversing "
                                    "and degenerate matrices are out of scope");
    if (spec.half_tx < 0 || spec.half_tx > 1 || spec.half_ty < 0 || spec.half_ty > 1)
        throw std::invalid_argument("translation components live in {0, 1/2}");
}

namespace {

bool perfect_square(long long value, long long& root) {
    if (value < 0) return false;
    long long r = std::llround(std::sqrt(static_cast<double>(value)));
    for (long long s = std::max(0LL, r - 2); s <= r + 2; ++s)
        if (s * s == value) {
            root = s;
            return true;
        }
    return false;
}

Slope normalize_slope(long long p, long long q) {
    if (p == 0 && q == 0) throw std::invalid_argument("zero slope");
    long long g = std::gcd(std::llabs(p), std::llabs(q));
    p /= g;
    q /= g;
    if (p < 0 || (p == 0 && q < 0)) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

// Primitive integer eigenvector of M for integer eigenvalue mu.
Slope eigen_slope(const TorusMapSpec& spec, long long mu) {
    if (spec.b != 0) return normalize_slope(spec.b, mu - spec.a);
    if (spec.c != 0) return normalize_slope(mu - spec.d, spec.c);
    // Diagonal matrix: eigenvalues are the entries.
    if (mu == spec.a) return {1, 0};
    return {0, 1};
}

}  // namespace

std::string slope_curve_id(const Slope& slope) {
    return "slope_" + std::to_string(slope.p) + "_" + std::to_string(slope.q);
}

TorusVerdict classify(const TorusMapSpec& spec) {
    require_cover(spec);
    TorusVerdict verdict;
    verdict.degree = spec.det();
    verdict.discriminant = spec.discriminant();
    const long long delta = verdict.discriminant;
    const double sqrt_d = std::sqrt(static_cast<double>(verdict.degree));

    verdict.holomorphic = delta < 0 || spec.scalar();
    long long root = 0;
    verdict.strongly_reducible = perfect_square(delta, root);
    verdict.anosov = delta > 0;

    if (spec.scalar()) {
        verdict.fixed_point = TeichPoint{0.0, 1.0};  // every point is fixed
        verdict.fixed_point_re_exact = Rat(0);
    } else if (delta < 0) {
        // c tau^2 + (a - d) tau - b = 0; delta < 0 forces c != 0.
        verdict.fixed_point_re_exact = rat_make(spec.d - spec.a, 2 * spec.c);
        verdict.fixed_point =
            TeichPoint{rat_to_double(*verdict.fixed_point_re_exact),
                       std::sqrt(static_cast<double>(-delta)) / (2.0 * std::llabs(spec.c))};
    }

    if (verdict.strongly_reducible) {
        // Both eigenvalues are integers of the same sign; the smaller modulus
        // satisfies mu^2 <= det and carries a transition entry >= 1.
        long long tr = spec.trace();
        long long mu = tr >= 0 ? (tr - root) / 2 : (tr + root) / 2;
        verdict.slope_eigenvalue = mu;
        verdict.invariant_slope = spec.scalar() ? Slope{1, 0} : eigen_slope(spec, mu);
        verdict.transition_entry = Rat(verdict.degree, mu * mu);
    }

    if (delta == 0 && !spec.scalar()) {
        verdict.translation_length = 0.0;
        verdict.translation_realized = false;
    } else if (delta > 0) {
        double sqrt_delta = std::sqrt(static_cast<double>(delta));
        double mu1 = (std::llabs(spec.trace()) + sqrt_delta) / 2.0;
        verdict.stretch = mu1 / sqrt_d;
        verdict.translation_length = std::log(mu1 / sqrt_d);
        verdict.translation_realized = true;
        if (spec.c != 0) {
            double lo = (static_cast<double>(spec.d - spec.a) - sqrt_delta) / (2.0 * spec.c);
            double hi = (static_cast<double>(spec.d - spec.a) + sqrt_delta) / (2.0 * spec.c);
            verdict.axis = std::make_pair(std::min(lo, hi), std::max(lo, hi));
        } else {
            double finite = static_cast<double>(spec.b) / (spec.a - spec.d);
            verdict.axis = std::make_pair(finite, std::numeric_limits<double>::infinity());
        }
        double tr = spec.trace();
        double mu_small = (tr >= 0 ? tr - sqrt_delta : tr + sqrt_delta) / 2.0;
        double mu_large = (tr >= 0 ? tr + sqrt_delta : tr - sqrt_delta) / 2.0;
        auto direction = [&](double mu) -> std::pair<double, double> {
            if (spec.b != 0) return {static_cast<double>(spec.b), mu - spec.a};
            if (spec.c != 0) return {mu - spec.d, static_cast<double>(spec.c)};
            return mu == spec.a ? std::make_pair(1.0, 0.0) : std::make_pair(0.0, 1.0);
        };
        verdict.foliations = std::make_pair(direction(mu_large), direction(mu_small));
    }
    return verdict;
}

std::pair<LabeledMulticurve, LiftingData> construct_srs(const TorusMapSpec& spec) {
    TorusVerdict verdict = classify(spec);
    if (!verdict.strongly_reducible)
        throw std::invalid_argument("construct_srs needs a strongly reducible torus map");

    long long mu = std::llabs(*verdict.slope_eigenvalue);
    long long count = verdict.degree / mu;
    std::string id = slope_curve_id(*verdict.invariant_slope);

    LabeledMulticurve multicurve;
    multicurve.curves = {id};
    multicurve.labels[id] = Rat(1);

    LiftingData lifting;
    for (long long k = 0; k < count; ++k)
        lifting.components[id].push_back({static_cast<int>(mu), LiftClass::Curve, id, std::nullopt});
    return {std::move(multicurve), std::move(lifting)};
}

TeichPoint teich_action(const TorusMapSpec& spec, const TeichPoint& tau) {
    require_cover(spec);
    if (!(tau.im > 0)) throw std::invalid_argument("points of Teich(T^2) have Im tau > 0");
    std::complex<double> z = tau.value();
    std::complex<double> image = (static_cast<double>(spec.d) * z + static_cast<double>(spec.b)) /
                                 (static_cast<double>(spec.c) * z + static_cast<double>(spec.a));
    return {image.real(), image.imag()};
}

double teich_distance(const TeichPoint& x, const TeichPoint& y) {
    if (!(x.im > 0) || !(y.im > 0)) throw std::invalid_argument("points must be in the upper half-plane");
    double dx = x.re - y.re;
    double dy = x.im - y.im;
    double argument = 1.0 + (dx * dx + dy * dy) / (2.0 * x.im * y.im);
    return 0.5 * std::acosh(argument);
}

double curve_modulus(const TeichPoint& tau, const Slope& slope) {
    if (std::gcd(std::llabs(slope.p), std::llabs(slope.q)) != 1)
        throw std::invalid_argument("slope must be primitive");
    if (!(tau.im > 0)) throw std::invalid_argument("Im tau must be positive");
    double re = slope.p + slope.q * tau.re;
    double im = slope.q * tau.im;
    return tau.im / (re * re + im * im);
}

std::vector<TeichPoint> teich_orbit(const TorusMapSpec& spec, TeichPoint start, int steps) {
    std::vector<TeichPoint> orbit{start};
    for (int i = 0; i < steps; ++i) {
        start = teich_action(spec, start);
        orbit.push_back(start);
        if (start.im < 1e-280 || std::abs(start.re) > 1e280 || start.im > 1e280) break;
    }
    return orbit;
}

ProbeResult translation_probe(const TorusMapSpec& spec, int iterations, double tolerance) {
    require_cover(spec);
    ProbeResult probe;
    const TeichPoint start{0.0, 1.0};
    TeichPoint tau = start;
    double previous_distance = 0.0;
    double previous_increment = std::numeric_limits<double>::quiet_NaN();
    int stable_steps = 0;
    for (int n = 1; n <= iterations; ++n) {
        tau = teich_action(spec, tau);
        if (tau.im < 1e-280 || std::abs(tau.re) > 1e280 || tau.im > 1e280) break;
        double distance = teich_distance(start, tau);
        double increment = distance - previous_distance;
        previous_distance = distance;
        probe.estimate = increment;
        probe.iterations = n;
        probe.trail.push_back(increment);
        if (probe.trail.size() > 8) probe.trail.erase(probe.trail.begin());
        if (!std::isnan(previous_increment) && std::abs(increment - previous_increment) < tolerance) {
            if (++stable_steps >= 3) {
                probe.converged = true;
                break;
            }
        } else {
            stable_steps = 0;
        }
        previous_increment = increment;
    }
    return probe;
}

TranslationLength translation_length(const TorusMapSpec& spec, int iterations, double tolerance) {
    TorusVerdict verdict = classify(spec);
    TranslationLength result;
    result.value = verdict.translation_length;
    result.realized = verdict.translation_realized;
    result.axis = verdict.axis;
    result.probe = translation_probe(spec, iterations, tolerance);
    return result;
}

ModulusOrbitProbe modulus_escape_probe(const TorusMapSpec& spec, double bound, int iterations) {
    ModulusOrbitProbe probe;
    TeichPoint tau{0.0, 1.0};
    for (int n = 1; n <= iterations; ++n) {
        tau = teich_action(spec, tau);
        if (tau.im < 1e-280 || std::abs(tau.re) > 1e280) break;
        double value = std::max(curve_modulus(tau, {1, 0}), curve_modulus(tau, {0, 1}));
        probe.max_modulus = std::max(probe.max_modulus, value);
        if (probe.first_exceeding < 0 && value > bound) {
            probe.first_exceeding = n;
            break;
        }
        if (tau.im > 1e280) break;
    }
    return probe;
}

}  // namespace coverdyn
