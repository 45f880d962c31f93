#pragma once

#include "coverdyn/multicurve.hpp"
#include "coverdyn/rng.hpp"
#include "coverdyn/skeleton.hpp"
#include "coverdyn/torus.hpp"

#include <utility>

namespace coverdyn {

// Valid sphere skeleton with degree in [degree_min, degree_max] and at most
// max_marked marked points, by randomized construction with validation and
// retry.
CoverSkeleton random_sphere_skeleton(Rng& rng, int degree_min = 2, int degree_max = 5,
                                     int max_marked = 8);

// Integer matrix with determinant in [det_min, det_max] and a random
// half-integer translation.
TorusMapSpec random_affine_map(Rng& rng, int det_min = 2, int det_max = 5);

// Random Anosov matrix (positive discriminant) with determinant <= det_max.
TorusMapSpec random_anosov_map(Rng& rng, int det_max = 25);

struct LiftingInstance {
    LabeledMulticurve multicurve;
    LiftingData lifting;
    int degree = 2;
};

// Unconstrained lifting data: up to max_curves curves, random degree
// partitions and component classes. Labels may include zeros.
LiftingInstance random_lifting_instance(Rng& rng, int max_curves = 5, int degree_max = 8);

struct PolynomialLevyInstance {
    CoverSkeleton skeleton;  // a topological polynomial of matching degree
    LabeledMulticurve multicurve;
    LiftingData lifting;
};

// Obstructed lifting data consistent with curves in the plane under a
// topological polynomial: a nesting forest, degree partitions, a planted
// degree-1 cycle among leaves, and class assignments that respect how
// interiors map over interiors (an edge into the region below a lift forces
// the source strictly below the lifted curve; a class receives lifts of
// nesting-comparable curves only; one lift per class per curve).
PolynomialLevyInstance random_polynomial_levy_instance(Rng& rng, int max_curves = 7,
                                                       int degree_max = 5);

// z^d model polynomial: two fixed critical points of full degree.
CoverSkeleton power_map_skeleton(int degree);

}  // namespace coverdyn
