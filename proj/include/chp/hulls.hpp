#pragma once

#include <cstddef>
#include <span>

#include "chp/geometry.hpp"
#include "chp/reducer.hpp"

// The four hull algorithms under benchmark plus the brute-force test oracle.
// All return canonical Hulls, so outputs compare by plain equality.
namespace chp::hulls {

// O(n log n), polar-angle sort around the lowest point then stack scan.
Hull graham_scan(std::span<const Point> points);

// Divide and conquer on the furthest point from the splitting chord.
Hull quickhull(std::span<const Point> points);

// Gift wrapping, O(nh); collinear candidates resolved by taking the furthest.
Hull jarvis_march(std::span<const Point> points);

// Deque-based online hull of a simple polygonal chain, O(s). The chain must
// be simple; chains built by reducer::build_polyline qualify by construction.
Hull melkman(const reducer::PolygonalChain& chain);

// O(n^3) edge-membership oracle. Refuses inputs larger than max_points.
Hull brute_force_hull(std::span<const Point> points, std::size_t max_points = 500);

}  // namespace chp::hulls
