#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "chp/geometry.hpp"

// Point ingestion: text files (2D or 3D, projected and quantized) and the
// synthetic generators used to reproduce the benchmark structure.
namespace chp::dataset {

enum class Projection { xy, xz, yz };

struct DatasetSpec {
    std::string source;          // file path, or a generator name
    Projection projection = Projection::xy;
    double scale = 1.0;          // float -> integer quantization multiplier
    std::uint64_t seed = 1;
    std::int64_t n = 0;          // generator: point count
    std::int64_t p = 0;          // generator: grid side
    double density = 0.0;        // generator: n / (p*q) target, 0 = unset
};

// Generator names: uniform-box, uniform-density, disc, annulus, circle.
bool is_generator(const std::string& name);

std::vector<Point> generate(const DatasetSpec& spec);

// One point per line, whitespace- or comma-separated, 2 or 3 numeric
// fields, '#' comments. 3D inputs are projected, scaled and rounded
// half-away-from-zero. Parse errors report the line number.
std::vector<Point> parse_points(std::istream& in, Projection projection,
                                double scale);

// Dispatches to generate() or file parsing based on spec.source.
std::vector<Point> load_points(const DatasetSpec& spec);

}  // namespace chp::dataset
