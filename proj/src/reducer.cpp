#include "chp/reducer.hpp"

#include <chrono>
#include <limits>
#include <utility>

#include "chp/kernels.hpp"

namespace chp::reducer {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// The Algorithm-1 fold, no input validation.
void bucket(std::span<const Point> points, ExtremalArray& arr) {
    for (const Point& pt : points) {
        ColumnExtremes& e = arr.entries[static_cast<std::size_t>(pt.x - 1)];
        if (!e.valid) {
            e.lo = pt.y;
            e.hi = pt.y;
            e.valid = true;
            arr.occ.insert(static_cast<std::uint64_t>(pt.x));
        } else {
            if (pt.y < e.lo) e.lo = pt.y;
            if (pt.y > e.hi) e.hi = pt.y;
        }
    }
}

ExtremalArray make_array(std::int64_t width, occupancy::Kind occ_kind) {
    return ExtremalArray{
        std::vector<ColumnExtremes>(static_cast<std::size_t>(width)),
        occupancy::Index(static_cast<std::uint64_t>(width), occ_kind)};
}

}  // namespace

std::int64_t ExtremalArray::valid_count() const {
    std::int64_t count = 0;
    occ.for_each([&](std::uint64_t i) {
        const ColumnExtremes& e = entries[i - 1];
        count += e.lo == e.hi ? 1 : 2;
    });
    return count;
}

std::vector<Point> ExtremalArray::valid_points() const {
    std::vector<Point> pts;
    occ.for_each([&](std::uint64_t i) {
        const ColumnExtremes& e = entries[i - 1];
        const auto slot = static_cast<std::int64_t>(i);
        pts.push_back(to_original(slot, e.lo));
        if (e.hi != e.lo) pts.push_back(to_original(slot, e.hi));
    });
    return pts;
}

std::vector<Point> translate(std::span<const Point> points,
                             const BoundingBox& bbox) {
    std::vector<Point> out(points.size());
    kernels::translate(points, 1 - bbox.x_min, 1 - bbox.y_min, out);
    return out;
}

ExtremalArray reduce(std::span<const Point> points, std::int64_t width,
                     std::optional<std::int64_t> q, occupancy::Kind occ_kind) {
    if (width < 1) throw std::invalid_argument("reduce: width must be >= 1");
    for (const Point& pt : points) {
        if (pt.x < 1 || pt.x > width || pt.y < 1 || (q && pt.y > *q))
            throw std::invalid_argument("reduce: coordinate out of range");
    }
    ExtremalArray arr = make_array(width, occ_kind);
    bucket(points, arr);
    return arr;
}

ExtremalArray second_scan(const ExtremalArray& arr, occupancy::Kind occ_kind) {
    const std::vector<Point> pts = arr.valid_points();
    if (pts.empty()) {
        ExtremalArray out = make_array(arr.width(), occ_kind);
        out.axis_swapped = !arr.axis_swapped;
        return out;
    }
    const BoundingBox bbox = find_bounds(pts);
    const bool swapped = !arr.axis_swapped;
    // Slots index what was the minor axis; original-coordinate extent.
    const std::int64_t major_min = swapped ? bbox.y_min : bbox.x_min;
    const std::int64_t major_max = swapped ? bbox.y_max : bbox.x_max;
    const std::int64_t minor_min = swapped ? bbox.x_min : bbox.y_min;
    ExtremalArray out = make_array(major_max - major_min + 1, occ_kind);
    out.major_offset = major_min - 1;
    out.minor_offset = minor_min - 1;
    out.axis_swapped = swapped;
    std::vector<Point> rebased(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::int64_t major = swapped ? pts[i].y : pts[i].x;
        const std::int64_t minor = swapped ? pts[i].x : pts[i].y;
        rebased[i] = {major - out.major_offset, minor - out.minor_offset};
    }
    bucket(rebased, out);
    return out;
}

PolygonalChain build_polyline(const ExtremalArray& arr) {
    PolygonalChain chain;
    arr.occ.for_each([&](std::uint64_t i) {
        const ColumnExtremes& e = arr.entries[i - 1];
        const auto slot = static_cast<std::int64_t>(i);
        chain.vertices.push_back(arr.to_original(slot, e.lo));
        if (e.hi != e.lo) chain.vertices.push_back(arr.to_original(slot, e.hi));
    });
    if (chain.vertices.empty())
        throw std::invalid_argument("build_polyline: no valid points");
    return chain;
}

void serialize(const ExtremalArray& arr, std::ostream& os) {
    const std::int64_t sentinel_lo = arr.width() + 1;
    for (std::int64_t i = 1; i <= arr.width(); ++i) {
        const ColumnExtremes& e = arr.entries[static_cast<std::size_t>(i - 1)];
        if (e.valid)
            os << i << ' ' << e.lo << ' ' << e.hi << '\n';
        else
            os << i << ' ' << sentinel_lo << ' ' << -1 << '\n';
    }
}

PreconditionResult precondition(std::span<const Point> points,
                                const PreconditionOptions& options) {
    if (points.empty())
        throw std::invalid_argument("precondition: empty input");

    PreconditionResult res{make_array(1, options.occ_kind), {}, {}};
    const bool full_bounds = options.second_scan || options.auto_axis;

    auto t0 = std::chrono::steady_clock::now();
    const kernels::MinMax mm = kernels::min_max(points);
    res.t_bounds = seconds_since(t0);
    res.bbox = {mm.x_min, mm.x_max, mm.y_min, mm.y_max};
    // The x-only fast path still gets full bounds from the kernel (one fused
    // pass); only the translation work differs below.

    const std::int64_t p = res.bbox.width();
    const std::int64_t q = res.bbox.height();
    const bool swap_axes = options.auto_axis && q < p;

    t0 = std::chrono::steady_clock::now();
    const std::int64_t width = swap_axes ? q : p;
    res.array = make_array(width, options.occ_kind);
    res.array.axis_swapped = swap_axes;
    res.array.major_offset = (swap_axes ? res.bbox.y_min : res.bbox.x_min) - 1;
    // Without a second scan or axis selection, minor values stay untranslated.
    res.array.minor_offset =
        full_bounds ? (swap_axes ? res.bbox.x_min : res.bbox.y_min) - 1 : 0;

    std::vector<Point> rebased(points.size());
    if (swap_axes) {
        for (std::size_t i = 0; i < points.size(); ++i)
            rebased[i] = {points[i].y - res.array.major_offset,
                          points[i].x - res.array.minor_offset};
    } else {
        kernels::translate(points, -res.array.major_offset,
                           -res.array.minor_offset, rebased);
    }
    bucket(rebased, res.array);
    if (options.second_scan)
        res.array = second_scan(res.array, options.occ_kind);
    res.t_reduce = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    res.chain = build_polyline(res.array);
    res.t_extract = seconds_since(t0);
    return res;
}

}  // namespace chp::reducer
