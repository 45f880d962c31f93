#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

namespace coverdyn {

enum class Surface { Sphere, Torus };

struct VertexRecord {
    std::string id;
    bool marked = false;
    int local_degree = 1;

    bool critical() const { return local_degree > 1; }
};

// Combinatorial model of a dynamical branched cover: the marked and critical
// points together with the forward map and local degrees. Points outside
// P u Crit(f) are not represented; preimage counting works from the degree
// budget instead.
struct CoverSkeleton {
    Surface surface = Surface::Sphere;
    int degree = 1;
    std::vector<VertexRecord> vertices;        // kept sorted by id
    std::map<std::string, std::string> forward;

    const VertexRecord* find(const std::string& id) const;
    bool is_marked(const std::string& id) const;
    bool is_critical(const std::string& id) const;
    int local_degree(const std::string& id) const;  // 1 for unknown ids

    // Vertices w with forward(w) = v.
    std::vector<std::string> preimage_vertices(const std::string& id) const;

    void sort_vertices();
};

struct InvariantViolation {
    std::string invariant;  // short stable name, e.g. "riemann_hurwitz"
    std::string vertex;     // offending vertex id, empty when global
    std::string detail;
};

// Empty report iff every CoverSkeleton invariant holds. Malformed input
// (dangling ids, non-positive degrees) is reported, never repaired.
std::vector<InvariantViolation> validate(const CoverSkeleton& skeleton);

bool is_valid(const CoverSkeleton& skeleton);

// Throws std::invalid_argument listing the violations. Used by operations
// whose precondition is a valid skeleton.
void require_valid(const CoverSkeleton& skeleton);

// Union of forward orbits of critical values; always a subset of the marked
// vertices, sorted by id.
std::vector<std::string> post_critical_set(const CoverSkeleton& skeleton);

struct PortraitEdge {
    std::string from;
    std::string to;
    int local_degree = 1;
};

// Directed graph on Crit(f) u PCS(f), out-degree one, edges labeled by the
// local degree at the source.
struct Portrait {
    std::vector<std::string> vertices;  // sorted by id
    std::vector<PortraitEdge> edges;    // sorted by source id
};

Portrait extended_portrait(const CoverSkeleton& skeleton);

struct PolynomialWitness {
    bool is_polynomial = false;
    std::string witness;  // fixed marked vertex of full local degree
};

// A sphere cover is a topological polynomial when some marked fixed point
// attains the full degree of the map.
PolynomialWitness is_topological_polynomial(const CoverSkeleton& skeleton);

// True when the forward orbit of every marked point meets a critical vertex.
// For topological polynomials this certifies rationality.
bool levy_berstein_criterion(const CoverSkeleton& skeleton);

}  // namespace coverdyn
