#include "chp/geometry.hpp"

#include <algorithm>

#include "chp/kernels.hpp"

namespace chp {

BoundingBox find_bounds(std::span<const Point> points) {
    if (points.empty())
        throw std::invalid_argument("find_bounds: empty input");
    const auto mm = kernels::min_max(points);
    return {mm.x_min, mm.x_max, mm.y_min, mm.y_max};
}

namespace {

// Signed doubled area of a closed polygon; positive when counter-clockwise.
int128 signed_area2(std::span<const Point> v) {
    int128 area = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point& a = v[i];
        const Point& b = v[(i + 1) % v.size()];
        area += static_cast<int128>(a.x) * b.y - static_cast<int128>(b.x) * a.y;
    }
    return area;
}

Hull degenerate_hull(std::span<const Point> v) {
    Point lo = v[0];
    Point hi = v[0];
    for (const Point& p : v) {
        if (lex_less(p, lo)) lo = p;
        if (lex_less(hi, p)) hi = p;
    }
    if (lo == hi) return Hull{{lo}};
    return Hull{{lo, hi}};
}

}  // namespace

Hull canonicalize_hull(std::span<const Point> vertices) {
    if (vertices.empty())
        throw std::invalid_argument("canonicalize_hull: empty vertex list");

    // Drop consecutive duplicates, including across the wrap.
    std::vector<Point> v;
    v.reserve(vertices.size());
    for (const Point& p : vertices)
        if (v.empty() || v.back() != p) v.push_back(p);
    while (v.size() > 1 && v.front() == v.back()) v.pop_back();

    if (v.size() <= 2) return Hull{std::move(v)};

    const int128 area = signed_area2(v);
    if (area == 0) return degenerate_hull(v);
    if (area < 0) std::reverse(v.begin(), v.end());

    // Strip collinear vertices until stable.
    bool changed = true;
    while (changed && v.size() > 2) {
        changed = false;
        std::vector<Point> kept;
        kept.reserve(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point& prev = v[(i + v.size() - 1) % v.size()];
            const Point& next = v[(i + 1) % v.size()];
            if (orientation(prev, v[i], next) != Orientation::zero)
                kept.push_back(v[i]);
            else
                changed = true;
        }
        v = std::move(kept);
    }
    if (v.size() <= 2) return degenerate_hull(v);

    const auto start = std::min_element(v.begin(), v.end(), lex_less);
    std::rotate(v.begin(), start, v.end());
    return Hull{std::move(v)};
}

bool hull_contains(const Hull& hull, const Point& p) {
    const auto& v = hull.vertices;
    if (v.empty()) return false;
    if (v.size() == 1) return v[0] == p;
    if (v.size() == 2) {
        if (orientation(v[0], v[1], p) != Orientation::zero) return false;
        return std::min(v[0].x, v[1].x) <= p.x && p.x <= std::max(v[0].x, v[1].x) &&
               std::min(v[0].y, v[1].y) <= p.y && p.y <= std::max(v[0].y, v[1].y);
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (orientation(v[i], v[(i + 1) % v.size()], p) == Orientation::negative)
            return false;
    }
    return true;
}

}  // namespace chp
