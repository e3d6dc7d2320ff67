#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

#include "chp/geometry.hpp"
#include "chp/occupancy.hpp"

// Point-set reduction: single-pass per-column min/max bucketing, the
// optional second scan along the other axis, and the simple polyline built
// from the surviving extremes.
namespace chp::reducer {

// Per-slot (min, max) pair along the minor axis. Default state is empty;
// the (width+1, -1) sentinel appears only at the serialization boundary.
struct ColumnExtremes {
    std::int64_t lo = 0;
    std::int64_t hi = -1;
    bool valid = false;

    friend bool operator==(const ColumnExtremes&, const ColumnExtremes&) = default;
};

// The reduced set. Slots index the major axis (x unless axis_swapped), the
// stored values are minor-axis extremes. Both are in translated coordinates;
// original = (slot + major_offset, value + minor_offset), axes swapped back
// when axis_swapped.
struct ExtremalArray {
    std::vector<ColumnExtremes> entries;
    occupancy::Index occ;
    std::int64_t major_offset = 0;
    std::int64_t minor_offset = 0;
    bool axis_swapped = false;

    std::int64_t width() const { return static_cast<std::int64_t>(entries.size()); }

    // Count of valid points (one per single-point slot, two otherwise).
    std::int64_t valid_count() const;

    // The surviving points in original coordinates, slot order.
    std::vector<Point> valid_points() const;

    Point to_original(std::int64_t slot, std::int64_t value) const {
        const std::int64_t major = slot + major_offset;
        const std::int64_t minor = value + minor_offset;
        return axis_swapped ? Point{minor, major} : Point{major, minor};
    }
};

struct PolygonalChain {
    std::vector<Point> vertices;

    friend bool operator==(const PolygonalChain&, const PolygonalChain&) = default;
};

// Translates points into [1,p] x [1,q] relative to their bounding box.
std::vector<Point> translate(std::span<const Point> points, const BoundingBox& bbox);

// Single-pass bucketing of pre-translated points into a width-slot array.
// Requires x in [1, width] and y >= 1 (and y <= q when q is given);
// violations raise std::invalid_argument.
ExtremalArray reduce(std::span<const Point> points, std::int64_t width,
                     std::optional<std::int64_t> q = std::nullopt,
                     occupancy::Kind occ_kind = occupancy::Kind::array);

// Re-buckets the surviving points along the other axis.
ExtremalArray second_scan(const ExtremalArray& arr,
                          occupancy::Kind occ_kind = occupancy::Kind::array);

// Simple chain over the valid points: slots in increasing order, lo before
// hi within a slot, empty slots skipped. Throws std::invalid_argument when
// no valid point exists.
PolygonalChain build_polyline(const ExtremalArray& arr);

// One line per slot: "i lo hi", empty slots as "i <width+1> -1".
void serialize(const ExtremalArray& arr, std::ostream& os);

struct PreconditionOptions {
    bool second_scan = false;   // off by default; the extra reduction is marginal
    bool auto_axis = false;     // bucket along the shorter box side
    occupancy::Kind occ_kind = occupancy::Kind::array;
};

struct PreconditionResult {
    ExtremalArray array;
    PolygonalChain chain;
    BoundingBox bbox;
    double t_bounds = 0;     // seconds, step 1
    double t_reduce = 0;     // translation + bucketing
    double t_extract = 0;    // polyline / extraction
    double total() const { return t_bounds + t_reduce + t_extract; }
};

// Full pipeline: bounds, translation, bucketing, polyline. When neither
// the second scan nor axis auto-selection is requested, step 1 computes
// x-bounds only and y values are bucketed untranslated.
PreconditionResult precondition(std::span<const Point> points,
                                const PreconditionOptions& options = {});

}  // namespace chp::reducer
