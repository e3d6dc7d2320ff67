#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chp/geometry.hpp"

// The two comparison preconditioners, recoded from their published
// descriptions: AT (discard points inside the quadrilateral of axis-extreme
// points) and TZTM (iterative pseudo-hull expansion).
namespace chp::baselines {

// Keeps every point not strictly inside the polygon spanned by the four
// axis-extreme points. Hull vertices always survive. Throws
// std::invalid_argument on empty input.
std::vector<Point> at_reduce(std::span<const Point> points);

// Iterative pseudo-hull expansion. Iteration 1 is the AT step; each further
// iteration replaces every polygon edge by a detour through the furthest
// exterior point and discards points strictly inside the expanded polygon.
// iterations must be >= 1.
std::vector<Point> tztm_reduce(std::span<const Point> points, int iterations);

}  // namespace chp::baselines
