#include "chp/dataset.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace chp::dataset {

namespace {

constexpr double kCoordLimit = 4.6e18;  // stay clear of int64 range

std::int64_t quantize(double v, std::uint64_t line) {
    if (!std::isfinite(v) || std::abs(v) > kCoordLimit)
        throw std::runtime_error("coordinate overflow at line " +
                                 std::to_string(line));
    return std::llround(v);  // rounds half away from zero
}

std::int64_t require(std::int64_t v, const char* what) {
    if (v < 1) throw std::invalid_argument(std::string("generator needs ") + what);
    return v;
}

}  // namespace

bool is_generator(const std::string& name) {
    return name == "uniform-box" || name == "uniform-density" ||
           name == "disc" || name == "annulus" || name == "circle";
}

std::vector<Point> generate(const DatasetSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    std::int64_t p = spec.p;
    std::int64_t n = spec.n;
    if (spec.source == "uniform-density") {
        // Resolve the missing one of {n, p} from the density target.
        if (spec.density <= 0)
            throw std::invalid_argument("uniform-density needs --density > 0");
        if (p < 1 && n >= 1)
            p = std::max<std::int64_t>(
                1, std::llround(std::sqrt(static_cast<double>(n) / spec.density)));
        else if (n < 1 && p >= 1)
            n = std::max<std::int64_t>(
                1, std::llround(spec.density * static_cast<double>(p) *
                                static_cast<double>(p)));
    }
    require(n, "--n");
    require(p, "--p");

    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(n));
    std::uniform_int_distribution<std::int64_t> coord(1, p);

    if (spec.source == "uniform-box" || spec.source == "uniform-density") {
        for (std::int64_t i = 0; i < n; ++i) pts.push_back({coord(rng), coord(rng)});
    } else if (spec.source == "disc" || spec.source == "annulus") {
        const double r_max = static_cast<double>(p) / 2.0;
        const double r_min = spec.source == "annulus" ? 0.8 * r_max : 0.0;
        std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        while (static_cast<std::int64_t>(pts.size()) < n) {
            // Area-uniform radius between r_min and r_max.
            const double r = std::sqrt(r_min * r_min +
                                       unit(rng) * (r_max * r_max - r_min * r_min));
            const double t = angle(rng);
            pts.push_back({std::llround(r_max + r * std::cos(t)),
                           std::llround(r_max + r * std::sin(t))});
        }
    } else if (spec.source == "circle") {
        // Convex-position set: distinct rounded points on a circle.
        std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
        const double r = static_cast<double>(p) / 2.0;
        while (static_cast<std::int64_t>(pts.size()) < n) {
            const double t = angle(rng);
            pts.push_back({std::llround(r + r * std::cos(t)),
                           std::llround(r + r * std::sin(t))});
        }
    } else {
        throw std::invalid_argument("unknown generator: " + spec.source);
    }
    return pts;
}

std::vector<Point> parse_points(std::istream& in, Projection projection,
                                double scale) {
    if (scale <= 0) throw std::invalid_argument("scale must be > 0");
    std::vector<Point> pts;
    std::string line;
    std::uint64_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first) || first[0] == '#') continue;

        double coords[3];
        int count = 0;
        try {
            std::size_t used = 0;
            coords[count] = std::stod(first, &used);
            if (used != first.size()) throw std::invalid_argument(first);
            ++count;
        } catch (const std::exception&) {
            throw std::runtime_error("malformed point at line " +
                                     std::to_string(line_no));
        }
        std::string tok;
        while (count < 3 && fields >> tok) {
            try {
                std::size_t used = 0;
                coords[count] = std::stod(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw std::runtime_error("malformed point at line " +
                                         std::to_string(line_no));
            }
            ++count;
        }
        std::string extra;
        if (count < 2 || (fields >> extra))
            throw std::runtime_error("expected 2 or 3 fields at line " +
                                     std::to_string(line_no));

        double u, v;
        if (count == 2) {
            u = coords[0];
            v = coords[1];
        } else {
            switch (projection) {
                case Projection::xy: u = coords[0]; v = coords[1]; break;
                case Projection::xz: u = coords[0]; v = coords[2]; break;
                case Projection::yz: u = coords[1]; v = coords[2]; break;
                default: u = coords[0]; v = coords[1]; break;
            }
        }
        pts.push_back({quantize(u * scale, line_no), quantize(v * scale, line_no)});
    }
    return pts;
}

std::vector<Point> load_points(const DatasetSpec& spec) {
    if (is_generator(spec.source)) return generate(spec);
    std::ifstream in(spec.source);
    if (!in) throw std::runtime_error("cannot open input file: " + spec.source);
    return parse_points(in, spec.projection, spec.scale);
}

}  // namespace chp::dataset
