#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "chp/geometry.hpp"
#include "chp/occupancy.hpp"
#include "chp/reducer.hpp"

// Benchmark pipelines: {none | proposed | at | tztm} preconditioning crossed
// with {quickhull | graham | jarvis | melkman}, repetition-averaged timings,
// CSV records and the regression summary.
namespace chp::bench {

enum class Method { none, proposed, at, tztm };
enum class HullAlgo { quickhull, graham, jarvis, melkman };

std::string method_name(Method m, int tztm_iters = 0);
std::string algo_name(HullAlgo a);

struct BenchRecord {
    std::string dataset;
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    double density = 0;
    std::string method;
    std::string algo;
    std::int64_t s = 0;
    double t_n = 0;
    double t_r = 0;
    double t_s = 0;
    double speedup = 0;
    double reduction_pct = 0;
    int repetitions = 0;

    friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

struct PipelineOptions {
    Method method = Method::proposed;
    HullAlgo algo = HullAlgo::quickhull;
    int repetitions = 100;
    int tztm_iters = 2;
    bool second_scan = false;
    occupancy::Kind occ_kind = occupancy::Kind::array;
    std::string dataset = "points";
};

// Runs one pipeline cell. Times t_n (hull on raw points), t_r (reduction)
// and t_s (hull on the reduced set), averaged over repetitions; asserts
// that raw and reduced hulls match before recording. Melkman requires the
// proposed method (only it yields a polyline); for its t_n reference,
// quickhull runs on the raw points. Throws std::invalid_argument on an
// incompatible method/algo pairing and std::runtime_error on hull mismatch.
BenchRecord run_pipeline(std::span<const Point> points,
                         const PipelineOptions& options);

void emit_csv(std::span<const BenchRecord> records, std::ostream& os);
std::vector<BenchRecord> parse_csv(std::istream& is);

struct LinearFit {
    double slope = 0;
    double intercept = 0;
    double r_squared = 0;
};

// Least-squares fit of y against x; needs >= 2 distinct x values.
LinearFit fit_linear(std::span<const double> x, std::span<const double> y);

// Per-method t_r-vs-n fits, a method x algo speedup table, and flags for
// records failing the practical-linearity condition p < n(w+1).
void stats_report(std::span<const BenchRecord> records, std::ostream& os);

}  // namespace chp::bench
