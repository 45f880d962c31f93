#pragma once

#include "coverdyn/skeleton.hpp"

namespace coverdyn::fixtures {

// z^2: both critical points fixed and marked.
inline CoverSkeleton squaring() {
    CoverSkeleton s;
    s.surface = Surface::Sphere;
    s.degree = 2;
    s.vertices = {{"0", true, 2}, {"inf", true, 2}};
    s.forward = {{"0", "0"}, {"inf", "inf"}};
    s.sort_vertices();
    return s;
}

// Finite critical point on a 3-cycle c0 -> p1 -> p2 -> c0, infinity fixed.
inline CoverSkeleton rabbit() {
    CoverSkeleton s;
    s.surface = Surface::Sphere;
    s.degree = 2;
    s.vertices = {{"c0", true, 2}, {"p1", true, 1}, {"p2", true, 1}, {"inf", true, 2}};
    s.forward = {{"c0", "p1"}, {"p1", "p2"}, {"p2", "c0"}, {"inf", "inf"}};
    s.sort_vertices();
    return s;
}

// Finite critical point on a 2-cycle, infinity fixed (z^2 - 1 portrait).
inline CoverSkeleton basilica() {
    CoverSkeleton s;
    s.surface = Surface::Sphere;
    s.degree = 2;
    s.vertices = {{"0", true, 2}, {"-1", true, 1}, {"inf", true, 2}};
    s.forward = {{"0", "-1"}, {"-1", "0"}, {"inf", "inf"}};
    s.sort_vertices();
    return s;
}

// Degree-1 sphere map fixing three marked points.
inline CoverSkeleton identity_three_marked() {
    CoverSkeleton s;
    s.surface = Surface::Sphere;
    s.degree = 1;
    s.vertices = {{"a", true, 1}, {"b", true, 1}, {"c", true, 1}};
    s.forward = {{"a", "a"}, {"b", "b"}, {"c", "c"}};
    s.sort_vertices();
    return s;
}

}  // namespace coverdyn::fixtures
