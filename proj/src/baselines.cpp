#include "chp/baselines.hpp"

#include <algorithm>
#include <utility>

namespace chp::baselines {

namespace {

// Strict interior test against a convex CCW polygon.
bool strictly_inside_convex(std::span<const Point> poly, const Point& pt) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        if (orientation(poly[i], poly[(i + 1) % poly.size()], pt) !=
            Orientation::positive)
            return false;
    }
    return true;
}

bool on_segment(const Point& a, const Point& b, const Point& pt) {
    if (orientation(a, b, pt) != Orientation::zero) return false;
    return std::min(a.x, b.x) <= pt.x && pt.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= pt.y && pt.y <= std::max(a.y, b.y);
}

// Exact even-odd test for an arbitrary simple-ish closed polygon; boundary
// points count as not inside.
bool strictly_inside_polygon(std::span<const Point> poly, const Point& pt) {
    bool inside = false;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if (on_segment(a, b, pt)) return false;
        if ((a.y > pt.y) != (b.y > pt.y)) {
            const int128 o = cross(a, b, pt);
            if (b.y > a.y ? o > 0 : o < 0) inside = !inside;
        }
    }
    return inside;
}

struct AtStep {
    std::vector<Point> survivors;
    std::vector<Point> polygon;  // convex CCW, possibly empty when degenerate
};

// Extreme points are tie-broken outward (x-min prefers smaller y, x-max
// larger y, y-min larger x, y-max smaller x) so the quadrilateral spans the
// widest region; co-extreme points land on its boundary and survive.
AtStep at_step(std::span<const Point> points) {
    if (points.empty())
        throw std::invalid_argument("at_reduce: empty input");

    Point xmin = points[0], xmax = points[0], ymin = points[0], ymax = points[0];
    for (const Point& p : points) {
        if (p.x < xmin.x || (p.x == xmin.x && p.y < xmin.y)) xmin = p;
        if (p.x > xmax.x || (p.x == xmax.x && p.y > xmax.y)) xmax = p;
        if (p.y < ymin.y || (p.y == ymin.y && p.x > ymin.x)) ymin = p;
        if (p.y > ymax.y || (p.y == ymax.y && p.x < ymax.x)) ymax = p;
    }

    // West, south, east, north is counter-clockwise.
    const Hull quad = canonicalize_hull(std::vector<Point>{xmin, ymin, xmax, ymax});
    AtStep step;
    if (quad.vertices.size() < 3) {
        // Fewer than 3 distinct extremes: no interior, everything survives.
        step.survivors.assign(points.begin(), points.end());
        return step;
    }
    step.polygon = quad.vertices;
    for (const Point& p : points)
        if (!strictly_inside_convex(step.polygon, p)) step.survivors.push_back(p);
    return step;
}

}  // namespace

std::vector<Point> at_reduce(std::span<const Point> points) {
    return at_step(points).survivors;
}

std::vector<Point> tztm_reduce(std::span<const Point> points, int iterations) {
    if (iterations < 1)
        throw std::invalid_argument("tztm_reduce: iterations must be >= 1");

    AtStep state = at_step(points);
    for (int iter = 2; iter <= iterations; ++iter) {
        if (state.polygon.size() < 3) break;

        std::vector<Point> expanded;
        expanded.reserve(state.polygon.size() * 2);
        for (std::size_t i = 0; i < state.polygon.size(); ++i) {
            const Point& a = state.polygon[i];
            const Point& b = state.polygon[(i + 1) % state.polygon.size()];
            expanded.push_back(a);
            // Furthest survivor on the exterior side of edge a->b; the cross
            // product stands in for perpendicular distance. Ties go to the
            // lexicographically smallest point.
            bool found = false;
            Point best{};
            int128 best_mag = 0;
            for (const Point& c : state.survivors) {
                const int128 o = cross(a, b, c);
                if (o >= 0) continue;  // interior side or collinear
                const int128 mag = -o;
                if (!found || mag > best_mag ||
                    (mag == best_mag && lex_less(c, best))) {
                    found = true;
                    best = c;
                    best_mag = mag;
                }
            }
            if (found && best != a && best != b) expanded.push_back(best);
        }
        state.polygon = std::move(expanded);

        std::vector<Point> kept;
        kept.reserve(state.survivors.size());
        for (const Point& p : state.survivors)
            if (!strictly_inside_polygon(state.polygon, p)) kept.push_back(p);
        state.survivors = std::move(kept);
    }
    return state.survivors;
}

}  // namespace chp::baselines
