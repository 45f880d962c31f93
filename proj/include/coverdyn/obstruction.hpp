#pragma once

#include "coverdyn/multicurve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coverdyn {

// Entry (i, j) sums 1/deg over the components of f^{-1}(curve j) homotopic to
// curve i. Zero-labeled curves stay in the matrix here; decide_srs drops them
// first.
TransitionMatrix transition_matrix(const LabeledMulticurve& multicurve,
                                   const LiftingData& lifting, int degree);

// Every curve of the multicurve is homotopic to some component of the full
// preimage of the multicurve.
bool is_f_stable(const LabeledMulticurve& multicurve, const LiftingData& lifting);

// Exact decision of strong-reduction-system existence: a nonnegative nonzero
// label vector v with M v >= v componentwise. Decided per strongly connected
// component of the support digraph by exact linear feasibility; the witness
// of the first qualifying component is extended by zeros. Zero-labeled
// curves are removed before the analysis. When no system exists, lemma_p is
// the least p with ||M^p||_inf < 1/2, computed by exact matrix powers.
ObstructionReport decide_srs(const LabeledMulticurve& multicurve, const LiftingData& lifting);

// Same decision on a bare matrix; curve names are positional.
ObstructionReport decide_matrix(const TransitionMatrix& matrix);

struct PushedComponent {
    std::string source;  // downstairs curve
    LiftClass kind = LiftClass::Inessential;
    int degree = 1;
    Rat label;  // label(source) / degree
};

struct PullbackResult {
    LabeledMulticurve restricted;  // f*(Gamma) on the classes of Gamma: M * labels
    std::vector<PushedComponent> other_classes;  // inessential / peripheral lifts
};

PullbackResult pullback_labels(const LabeledMulticurve& multicurve, const LiftingData& lifting);

// Strongly connected components of the digraph with an arc j -> i whenever
// m(i, j) > 0, i.e. curve j lifts to a component homotopic to curve i.
// Components are listed with ascending smallest member.
std::vector<std::vector<std::size_t>> support_sccs(const RatMatrix& m);

// Least p with ||M^p||_inf < 1/2. Requires spectral radius < 1.
int lemma_p_power(const RatMatrix& m);

double spectral_radius_estimate(const RatMatrix& m, int iterations = 500);

struct ProofConstants {
    long long xi = 0;
    double growth_factor = 1.0;  // K = e^{2D}
    double escape_threshold = 0.0;  // N = (K d)^xi * eps
    Rat fudge;                      // b = (d|P| + 1)(eps + 2), always exact
    std::optional<Rat> escape_threshold_exact;  // with a supplied rational K bound
    double r_bound = 0.0;  // max over matrices of ||M^{p-1} + ... + M|| * b
    std::optional<Rat> r_bound_exact;
    double c_threshold = 0.0;  // max(N, 2r, eps)
    std::optional<int> power = std::nullopt;  // p shared by the matrix family
};

// xi is max(|P| - 3, 0) on the sphere and max(|P|, 1) on the torus: the size
// of a maximal multicurve. The matrix family is optional; without it the r
// term is zero. When every supplied matrix is unobstructed, p is the largest
// lemma_p among them.
ProofConstants proof_constants(bool sphere, long long marked_count, long long degree,
                               const Rat& epsilon, double d_bound,
                               const std::optional<Rat>& k_upper = std::nullopt,
                               const std::vector<RatMatrix>& matrices = {});

}  // namespace coverdyn
