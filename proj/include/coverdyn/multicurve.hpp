#pragma once

#include "coverdyn/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace coverdyn {

// Dense square matrix of exact rationals.
struct RatMatrix {
    std::size_t n = 0;
    std::vector<Rat> a;  // row-major

    RatMatrix() = default;
    explicit RatMatrix(std::size_t size) : n(size), a(size * size, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static RatMatrix identity(std::size_t size);
    RatMatrix operator*(const RatMatrix& other) const;
    RatMatrix operator+(const RatMatrix& other) const;
    std::vector<Rat> apply(const std::vector<Rat>& v) const;

    // Max row sum of absolute values; the operator norm for the sup norm.
    Rat inf_norm() const;

    RatMatrix submatrix(const std::vector<std::size_t>& keep) const;
};

struct LabeledMulticurve {
    std::vector<std::string> curves;          // order fixes matrix indices
    std::map<std::string, Rat> labels;        // nonnegative; zero means deleted
    std::map<std::string, std::string> nesting;  // child -> parent; a forest
    // Curves on the plane only have an innermost side once the caller says
    // which; an empty forest with this flag set means every curve is a root.
    bool has_nesting = false;

    std::optional<std::size_t> index_of(const std::string& id) const;
};

enum class LiftClass { Curve, Inessential, PeripheralOther };

struct PreimageComponent {
    int degree = 1;               // covering degree onto the downstairs curve
    LiftClass kind = LiftClass::Inessential;
    std::string curve;            // meaningful when kind == Curve
    std::optional<int> disk_degree;  // degree on the bounded disk, when known
};

// Caller-supplied description of f^{-1}(gamma_j) per curve: the homotopy
// class and covering degree of every component. Degrees partition the degree
// of the map.
struct LiftingData {
    std::map<std::string, std::vector<PreimageComponent>> components;

    // The common per-curve degree sum. Throws when curves disagree.
    int inferred_degree() const;
};

// Throws std::invalid_argument on degree-partition violations or unknown
// curve ids.
void require_consistent(const LabeledMulticurve& multicurve, const LiftingData& lifting, int degree);

struct TransitionMatrix {
    std::vector<std::string> curves;  // row/column order
    RatMatrix m;                      // m(i,j) = sum of 1/deg over components
                                      // of f^{-1}(curve j) homotopic to curve i
};

struct ObstructionReport {
    bool srs_exists = false;
    std::vector<Rat> witness_labels;          // indexed like `curves`; empty if none
    std::vector<std::string> witness_support;
    double spectral_radius_estimate = 0.0;
    std::optional<int> lemma_p;               // least p with ||M^p||_inf < 1/2
    TransitionMatrix matrix;
};

}  // namespace coverdyn
