#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace chp {

// Integer grid point. Coordinates must stay within +/- 2^62 - 1 so that
// cross products fit in a signed 128-bit intermediate.
struct Point {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

// Lexicographic order, x first.
inline bool lex_less(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

enum class Orientation : int { negative = -1, zero = 0, positive = 1 };

using int128 = __int128;

// Twice the signed area of triangle (a, b, c), exact.
inline int128 cross(const Point& a, const Point& b, const Point& c) {
    const int128 abx = static_cast<int128>(b.x) - a.x;
    const int128 aby = static_cast<int128>(b.y) - a.y;
    const int128 acx = static_cast<int128>(c.x) - a.x;
    const int128 acy = static_cast<int128>(c.y) - a.y;
    return abx * acy - aby * acx;
}

inline Orientation orientation(const Point& a, const Point& b, const Point& c) {
    const int128 v = cross(a, b, c);
    if (v > 0) return Orientation::positive;
    if (v < 0) return Orientation::negative;
    return Orientation::zero;
}

// Squared euclidean distance, exact.
inline int128 dist2(const Point& a, const Point& b) {
    const int128 dx = static_cast<int128>(b.x) - a.x;
    const int128 dy = static_cast<int128>(b.y) - a.y;
    return dx * dx + dy * dy;
}

struct BoundingBox {
    std::int64_t x_min = 0;
    std::int64_t x_max = 0;
    std::int64_t y_min = 0;
    std::int64_t y_max = 0;

    std::int64_t width() const { return x_max - x_min + 1; }   // p
    std::int64_t height() const { return y_max - y_min + 1; }  // q

    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

// Tight bounds of a non-empty point sequence. Throws std::invalid_argument
// on empty input.
BoundingBox find_bounds(std::span<const Point> points);

// Strictly convex polygon, counter-clockwise, starting at the
// lexicographically smallest vertex. Degenerate hulls keep 1 or 2 vertices.
struct Hull {
    std::vector<Point> vertices;

    friend bool operator==(const Hull&, const Hull&) = default;
};

// Normalizes a convex polygon vertex list (either rotational order, possibly
// with collinear runs or duplicates) into canonical Hull form.
Hull canonicalize_hull(std::span<const Point> vertices);

// True iff p lies inside or on the boundary of a canonical hull.
bool hull_contains(const Hull& hull, const Point& p);

}  // namespace chp
