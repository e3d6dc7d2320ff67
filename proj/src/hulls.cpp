#include "chp/hulls.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <vector>

namespace chp::hulls {

namespace {

std::vector<Point> dedupe(std::span<const Point> points) {
    std::vector<Point> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(), lex_less);
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// All points collinear (true for sizes 0..2).
bool all_collinear(std::span<const Point> pts) {
    for (std::size_t i = 2; i < pts.size(); ++i)
        if (orientation(pts[0], pts[1], pts[i]) != Orientation::zero) return false;
    return true;
}

// Hull of a lex-sorted deduped collinear set: its two ends.
Hull collinear_hull(const std::vector<Point>& sorted) {
    if (sorted.size() == 1) return Hull{{sorted.front()}};
    return Hull{{sorted.front(), sorted.back()}};
}

}  // namespace

Hull graham_scan(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("graham_scan: empty input");
    std::vector<Point> pts = dedupe(points);
    if (all_collinear(pts)) return collinear_hull(pts);

    // Pivot: lowest, then leftmost.
    const auto pivot_it =
        std::min_element(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
            return a.y < b.y || (a.y == b.y && a.x < b.x);
        });
    std::iter_swap(pts.begin(), pivot_it);
    const Point pivot = pts.front();
    std::sort(pts.begin() + 1, pts.end(), [&](const Point& a, const Point& b) {
        const Orientation o = orientation(pivot, a, b);
        if (o != Orientation::zero) return o == Orientation::positive;
        return dist2(pivot, a) < dist2(pivot, b);
    });

    std::vector<Point> stack{pts[0], pts[1]};
    for (std::size_t i = 2; i < pts.size(); ++i) {
        while (stack.size() >= 2 &&
               orientation(stack[stack.size() - 2], stack.back(), pts[i]) !=
                   Orientation::positive)
            stack.pop_back();
        stack.push_back(pts[i]);
    }
    return canonicalize_hull(stack);
}

namespace {

// Points strictly left of chord a->b, recursively wrapped around the
// furthest one.
void quickhull_rec(const Point& a, const Point& b, std::span<const Point> pts,
                   std::vector<Point>& out) {
    const Point* far = nullptr;
    int128 far_d = 0;
    for (const Point& c : pts) {
        const int128 d = cross(a, b, c);
        if (d > far_d || (d == far_d && far && d > 0 && lex_less(c, *far))) {
            far = &c;
            far_d = d;
        }
    }
    if (!far || far_d <= 0) return;
    const Point f = *far;
    std::vector<Point> left_af, left_fb;
    for (const Point& c : pts) {
        if (orientation(a, f, c) == Orientation::positive) left_af.push_back(c);
        else if (orientation(f, b, c) == Orientation::positive) left_fb.push_back(c);
    }
    quickhull_rec(a, f, left_af, out);
    out.push_back(f);
    quickhull_rec(f, b, left_fb, out);
}

}  // namespace

Hull quickhull(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("quickhull: empty input");
    std::vector<Point> pts = dedupe(points);
    if (all_collinear(pts)) return collinear_hull(pts);

    const Point a = pts.front();  // lex min
    const Point b = pts.back();   // lex max
    std::vector<Point> lower, upper;
    for (const Point& c : pts) {
        const Orientation o = orientation(a, b, c);
        if (o == Orientation::positive) upper.push_back(c);
        else if (o == Orientation::negative) lower.push_back(c);
    }
    std::vector<Point> out{a};
    quickhull_rec(a, b, upper, out);
    out.push_back(b);
    quickhull_rec(b, a, lower, out);
    return canonicalize_hull(out);
}

Hull jarvis_march(std::span<const Point> points) {
    if (points.empty()) throw std::invalid_argument("jarvis_march: empty input");
    std::vector<Point> pts = dedupe(points);
    if (all_collinear(pts)) return collinear_hull(pts);

    const Point start = pts.front();  // lex min is always a hull vertex
    std::vector<Point> hull;
    Point current = start;
    do {
        hull.push_back(current);
        Point next = pts[0] == current ? pts[1] : pts[0];
        for (const Point& c : pts) {
            if (c == current) continue;
            const Orientation o = orientation(current, next, c);
            if (o == Orientation::negative ||
                (o == Orientation::zero && dist2(current, c) > dist2(current, next)))
                next = c;
        }
        current = next;
    } while (current != start && hull.size() <= pts.size());
    if (current != start)
        throw std::runtime_error("jarvis_march: wrap failed to close");
    return canonicalize_hull(hull);
}

Hull melkman(const reducer::PolygonalChain& chain) {
    const auto& v = chain.vertices;
    if (v.empty()) throw std::invalid_argument("melkman: empty chain");

    // Seed with the first non-collinear triple. In a simple chain a
    // collinear run is monotone, so dropping its middle vertex is safe.
    Point a = v[0];
    std::size_t i = 1;
    while (i < v.size() && v[i] == a) ++i;
    if (i == v.size()) return Hull{{a}};
    Point b = v[i++];
    while (i < v.size() && orientation(a, b, v[i]) == Orientation::zero) {
        if (dist2(a, v[i]) > dist2(a, b)) b = v[i];
        else if (dist2(b, v[i]) > dist2(a, b)) a = v[i];
        ++i;
    }
    if (i == v.size()) return canonicalize_hull(std::vector<Point>{a, b});

    const Point c = v[i++];
    std::deque<Point> d;
    if (orientation(a, b, c) == Orientation::positive)
        d = {c, a, b, c};
    else
        d = {c, b, a, c};

    for (; i < v.size(); ++i) {
        const Point& pt = v[i];
        // Inside the current hull: nothing to do.
        if (orientation(d[d.size() - 2], d[d.size() - 1], pt) ==
                Orientation::positive &&
            orientation(d[0], d[1], pt) == Orientation::positive)
            continue;
        while (d.size() >= 2 &&
               orientation(d[d.size() - 2], d[d.size() - 1], pt) !=
                   Orientation::positive)
            d.pop_back();
        d.push_back(pt);
        while (d.size() >= 2 &&
               orientation(pt, d[0], d[1]) != Orientation::positive)
            d.pop_front();
        d.push_front(pt);
    }
    d.pop_back();  // front and back duplicate the last hull point
    return canonicalize_hull(std::vector<Point>(d.begin(), d.end()));
}

Hull brute_force_hull(std::span<const Point> points, std::size_t max_points) {
    if (points.empty())
        throw std::invalid_argument("brute_force_hull: empty input");
    if (points.size() > max_points)
        throw std::invalid_argument("brute_force_hull: input exceeds size bound");
    std::vector<Point> pts = dedupe(points);
    if (all_collinear(pts)) return collinear_hull(pts);

    // (a, b) is a hull edge iff every other point is strictly left of it or
    // on the closed segment between them.
    auto is_edge = [&](const Point& a, const Point& b) {
        for (const Point& c : pts) {
            if (c == a || c == b) continue;
            const Orientation o = orientation(a, b, c);
            if (o == Orientation::negative) return false;
            if (o == Orientation::zero &&
                !(std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
                  std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y)))
                return false;
        }
        return true;
    };

    std::vector<Point> ring{pts.front()};  // lex min is a hull vertex
    for (;;) {
        const Point& cur = ring.back();
        const Point* next = nullptr;
        for (const Point& b : pts) {
            if (b == cur) continue;
            if (is_edge(cur, b)) {
                next = &b;
                break;
            }
        }
        if (!next) throw std::runtime_error("brute_force_hull: no outgoing edge");
        if (*next == ring.front()) break;
        ring.push_back(*next);
        if (ring.size() > pts.size())
            throw std::runtime_error("brute_force_hull: ring failed to close");
    }
    return canonicalize_hull(ring);
}

}  // namespace chp::hulls
