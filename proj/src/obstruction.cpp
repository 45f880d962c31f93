#include "coverdyn/obstruction.hpp"

#include "coverdyn/lp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace coverdyn {

TransitionMatrix transition_matrix(const LabeledMulticurve& multicurve,
                                   const LiftingData& lifting, int degree) {
    require_consistent(multicurve, lifting, degree);
    TransitionMatrix result;
    result.curves = multicurve.curves;
    result.m = RatMatrix(multicurve.curves.size());
    for (std::size_t j = 0; j < multicurve.curves.size(); ++j) {
        for (const auto& part : lifting.components.at(multicurve.curves[j])) {
            if (part.kind != LiftClass::Curve) continue;
            std::size_t i = *multicurve.index_of(part.curve);
            result.m.at(i, j) += Rat(1, part.degree);
        }
    }
    return result;
}

bool is_f_stable(const LabeledMulticurve& multicurve, const LiftingData& lifting) {
    TransitionMatrix t = transition_matrix(multicurve, lifting, lifting.inferred_degree());
    for (std::size_t i = 0; i < t.m.n; ++i) {
        bool appears = false;
        for (std::size_t j = 0; j < t.m.n && !appears; ++j) appears = t.m.at(i, j) != 0;
        if (!appears) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> support_sccs(const RatMatrix& m) {
    const std::size_t n = m.n;
    // Arcs j -> i for m(i, j) > 0.
    std::vector<std::vector<std::size_t>> out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m.at(i, j) != 0) out[j].push_back(i);

    // Tarjan, iterative.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    std::vector<std::vector<std::size_t>> sccs;
    int counter = 0;

    struct Frame {
        std::size_t v;
        std::size_t next_edge;
    };
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            if (frame.next_edge < out[frame.v].size()) {
                std::size_t w = out[frame.v][frame.next_edge++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[frame.v] = std::min(low[frame.v], index[w]);
                }
            } else {
                std::size_t v = frame.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == index[v]) {
                    std::vector<std::size_t> component;
                    while (true) {
                        std::size_t w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        component.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(component.begin(), component.end());
                    sccs.push_back(std::move(component));
                }
            }
        }
    }
    std::sort(sccs.begin(), sccs.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return sccs;
}

int lemma_p_power(const RatMatrix& m) {
    const Rat half(1, 2);
    RatMatrix power = m;
    for (int p = 1; p <= 1 << 20; ++p) {
        if (power.inf_norm() < half) return p;
        power = power * m;
    }
    throw std::invalid_argument("lemma_p_power requires spectral radius < 1");
}

double spectral_radius_estimate(const RatMatrix& m, int iterations) {
    const std::size_t n = m.n;
    if (n == 0) return 0.0;
    std::vector<double> x(n, 1.0);
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = rat_to_double(m.at(i, j));
    // Geometric mean of the step norms over the tail; stays put when the
    // iteration cycles instead of converging.
    double log_sum = 0.0;
    int tail = 0;
    for (int iter = 0; iter < iterations; ++iter) {
        std::vector<double> y(n, 0.0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) y[i] += a[i][j] * x[j];
        double norm = 0.0;
        for (double value : y) norm = std::max(norm, std::abs(value));
        if (norm == 0.0) return 0.0;
        for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
        if (iter >= iterations / 2) {
            log_sum += std::log(norm);
            ++tail;
        }
    }
    return tail > 0 ? std::exp(log_sum / tail) : 0.0;
}

ObstructionReport decide_matrix(const TransitionMatrix& matrix) {
    ObstructionReport report;
    report.matrix = matrix;
    report.spectral_radius_estimate = spectral_radius_estimate(matrix.m);

    for (const auto& scc : support_sccs(matrix.m)) {
        if (scc.size() == 1 && matrix.m.at(scc[0], scc[0]) == 0) continue;  // no self-loop
        auto witness = expansion_witness(matrix.m.submatrix(scc));
        if (!witness) continue;
        report.srs_exists = true;
        report.witness_labels.assign(matrix.m.n, Rat(0));
        for (std::size_t k = 0; k < scc.size(); ++k) report.witness_labels[scc[k]] = (*witness)[k];
        for (std::size_t i = 0; i < matrix.m.n; ++i)
            if (report.witness_labels[i] != 0) report.witness_support.push_back(matrix.curves[i]);
        return report;
    }
    if (matrix.m.n > 0) report.lemma_p = lemma_p_power(matrix.m);
    return report;
}

namespace {

// Removes zero-labeled curves; their lifting entries disappear and components
// landing on them become peripheral.
std::pair<LabeledMulticurve, LiftingData> drop_deleted(const LabeledMulticurve& multicurve,
                                                       const LiftingData& lifting) {
    LabeledMulticurve kept;
    kept.has_nesting = multicurve.has_nesting;
    for (const auto& id : multicurve.curves) {
        auto it = multicurve.labels.find(id);
        bool zero = it != multicurve.labels.end() && it->second == 0;
        if (!zero) kept.curves.push_back(id);
    }
    for (const auto& id : kept.curves) {
        auto it = multicurve.labels.find(id);
        kept.labels[id] = it == multicurve.labels.end() ? Rat(1) : it->second;
        auto parent = multicurve.nesting.find(id);
        if (parent != multicurve.nesting.end() && std::count(kept.curves.begin(), kept.curves.end(), parent->second))
            kept.nesting[id] = parent->second;
    }
    LiftingData trimmed;
    for (const auto& id : kept.curves) {
        auto source = lifting.components.find(id);
        if (source == lifting.components.end()) continue;
        auto& parts = trimmed.components[id];
        for (PreimageComponent part : source->second) {
            if (part.kind == LiftClass::Curve &&
                !std::count(kept.curves.begin(), kept.curves.end(), part.curve)) {
                part.kind = LiftClass::PeripheralOther;
                part.curve.clear();
            }
            parts.push_back(std::move(part));
        }
    }
    return {std::move(kept), std::move(trimmed)};
}

}  // namespace

ObstructionReport decide_srs(const LabeledMulticurve& multicurve, const LiftingData& lifting) {
    if (multicurve.curves.empty()) return {};
    require_consistent(multicurve, lifting, lifting.inferred_degree());
    auto [kept, trimmed] = drop_deleted(multicurve, lifting);
    if (kept.curves.empty()) return {};
    return decide_matrix(transition_matrix(kept, trimmed, trimmed.inferred_degree()));
}

PullbackResult pullback_labels(const LabeledMulticurve& multicurve, const LiftingData& lifting) {
    int degree = lifting.inferred_degree();
    TransitionMatrix t = transition_matrix(multicurve, lifting, degree);

    std::vector<Rat> labels(multicurve.curves.size(), Rat(0));
    for (std::size_t i = 0; i < multicurve.curves.size(); ++i) {
        auto it = multicurve.labels.find(multicurve.curves[i]);
        if (it != multicurve.labels.end()) labels[i] = it->second;
    }
    std::vector<Rat> pulled = t.m.apply(labels);

    PullbackResult result;
    result.restricted.curves = multicurve.curves;
    result.restricted.nesting = multicurve.nesting;
    for (std::size_t i = 0; i < multicurve.curves.size(); ++i)
        result.restricted.labels[multicurve.curves[i]] = pulled[i];
    for (std::size_t j = 0; j < multicurve.curves.size(); ++j) {
        const std::string& id = multicurve.curves[j];
        for (const auto& part : lifting.components.at(id)) {
            if (part.kind == LiftClass::Curve) continue;
            result.other_classes.push_back({id, part.kind, part.degree, labels[j] / part.degree});
        }
    }
    return result;
}

ProofConstants proof_constants(bool sphere, long long marked_count, long long degree,
                               const Rat& epsilon, double d_bound,
                               const std::optional<Rat>& k_upper,
                               const std::vector<RatMatrix>& matrices) {
    if (marked_count < 0) throw std::invalid_argument("marked_count must be >= 0");
    if (degree < 1) throw std::invalid_argument("degree must be >= 1");
    if (epsilon < 0) throw std::invalid_argument("epsilon must be >= 0");

    ProofConstants out;
    out.xi = sphere ? std::max<long long>(marked_count - 3, 0) : std::max<long long>(marked_count, 1);
    out.growth_factor = std::exp(2.0 * d_bound);
    double eps = rat_to_double(epsilon);
    out.escape_threshold = std::pow(out.growth_factor * static_cast<double>(degree),
                                    static_cast<double>(out.xi)) * eps;
    out.fudge = Rat(degree * marked_count + 1) * (epsilon + 2);
    if (k_upper) {
        Rat base = *k_upper * degree;
        Rat exact = epsilon;
        for (long long i = 0; i < out.xi; ++i) exact *= base;
        out.escape_threshold_exact = exact;
    }

    if (!matrices.empty()) {
        int p = 1;
        for (const auto& m : matrices) p = std::max(p, lemma_p_power(m));
        out.power = p;
        Rat best(0);
        for (const auto& m : matrices) {
            // M^{p-1} + ... + M
            RatMatrix sum(m.n), power = m;
            for (int k = 1; k <= p - 1; ++k) {
                sum = sum + power;
                power = power * m;
            }
            Rat value = sum.inf_norm() * out.fudge;
            if (value > best) best = value;
        }
        out.r_bound_exact = best;
        out.r_bound = rat_to_double(best);
    }
    out.c_threshold = std::max({out.escape_threshold, 2.0 * out.r_bound, eps});
    return out;
}

}  // namespace coverdyn
