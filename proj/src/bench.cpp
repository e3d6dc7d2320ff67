#include "chp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include "chp/baselines.hpp"
#include "chp/hulls.hpp"

namespace chp::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point t0, Clock::time_point t1) {
    return std::chrono::duration<double>(t1 - t0).count();
}

Hull run_hull(HullAlgo algo, std::span<const Point> pts) {
    switch (algo) {
        case HullAlgo::quickhull: return hulls::quickhull(pts);
        case HullAlgo::graham: return hulls::graham_scan(pts);
        case HullAlgo::jarvis: return hulls::jarvis_march(pts);
        default:
            throw std::invalid_argument("run_hull: melkman needs a chain");
    }
}

}  // namespace

std::string method_name(Method m, int tztm_iters) {
    switch (m) {
        case Method::none: return "none";
        case Method::proposed: return "proposed";
        case Method::at: return "at";
        case Method::tztm: return "tztm" + std::to_string(tztm_iters);
    }
    return "?";
}

std::string algo_name(HullAlgo a) {
    switch (a) {
        case HullAlgo::quickhull: return "quickhull";
        case HullAlgo::graham: return "graham";
        case HullAlgo::jarvis: return "jarvis";
        case HullAlgo::melkman: return "melkman";
    }
    return "?";
}

BenchRecord run_pipeline(std::span<const Point> points,
                         const PipelineOptions& options) {
    if (points.empty()) throw std::invalid_argument("run_pipeline: empty input");
    if (options.repetitions < 1)
        throw std::invalid_argument("run_pipeline: repetitions must be >= 1");
    if (options.algo == HullAlgo::melkman && options.method != Method::proposed)
        throw std::invalid_argument(
            "run_pipeline: melkman requires the proposed preconditioner");
    if (options.method == Method::none && options.algo == HullAlgo::melkman)
        throw std::invalid_argument("run_pipeline: melkman needs a polyline");

    BenchRecord rec;
    rec.dataset = options.dataset;
    rec.n = static_cast<std::int64_t>(points.size());
    rec.method = method_name(options.method, options.tztm_iters);
    rec.algo = algo_name(options.algo);
    rec.repetitions = options.repetitions;

    const BoundingBox bbox = find_bounds(points);
    rec.p = bbox.width();
    rec.q = bbox.height();
    rec.density = static_cast<double>(rec.n) /
                  (static_cast<double>(rec.p) * static_cast<double>(rec.q));

    // t_n reference: the same hull algorithm on the raw points. Melkman has
    // no set-based form, so quickhull stands in (as in the source study).
    const HullAlgo raw_algo =
        options.algo == HullAlgo::melkman ? HullAlgo::quickhull : options.algo;
    Hull raw_hull;
    double t_n = 0;
    for (int r = 0; r < options.repetitions; ++r) {
        const auto t0 = Clock::now();
        raw_hull = run_hull(raw_algo, points);
        t_n += seconds(t0, Clock::now());
    }
    rec.t_n = t_n / options.repetitions;

    Hull reduced_hull;
    double t_r = 0, t_s = 0;
    for (int r = 0; r < options.repetitions; ++r) {
        switch (options.method) {
            case Method::none: {
                const auto t0 = Clock::now();
                reduced_hull = run_hull(options.algo, points);
                t_s += seconds(t0, Clock::now());
                rec.s = rec.n;
                break;
            }
            case Method::proposed: {
                reducer::PreconditionOptions popt;
                popt.second_scan = options.second_scan;
                popt.occ_kind = options.occ_kind;
                const auto res = reducer::precondition(points, popt);
                t_r += res.total();
                rec.s = res.array.valid_count();
                const auto t0 = Clock::now();
                if (options.algo == HullAlgo::melkman)
                    reduced_hull = hulls::melkman(res.chain);
                else
                    reduced_hull = run_hull(options.algo, res.chain.vertices);
                t_s += seconds(t0, Clock::now());
                break;
            }
            case Method::at:
            case Method::tztm: {
                const auto t0 = Clock::now();
                const std::vector<Point> kept =
                    options.method == Method::at
                        ? baselines::at_reduce(points)
                        : baselines::tztm_reduce(points, options.tztm_iters);
                const auto t1 = Clock::now();
                reduced_hull = run_hull(options.algo, kept);
                const auto t2 = Clock::now();
                t_r += seconds(t0, t1);
                t_s += seconds(t1, t2);
                rec.s = static_cast<std::int64_t>(kept.size());
                break;
            }
        }
    }
    rec.t_r = t_r / options.repetitions;
    rec.t_s = t_s / options.repetitions;

    if (!(reduced_hull == raw_hull))
        throw std::runtime_error("run_pipeline: hull mismatch for method " +
                                 rec.method + " / " + rec.algo);

    rec.speedup = options.method == Method::none
                      ? 1.0
                      : rec.t_n / (rec.t_r + rec.t_s);
    rec.reduction_pct =
        1.0 - static_cast<double>(rec.s) / static_cast<double>(rec.n);
    return rec;
}

void emit_csv(std::span<const BenchRecord> records, std::ostream& os) {
    std::vector<const BenchRecord*> sorted;
    sorted.reserve(records.size());
    for (const auto& r : records) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const BenchRecord* a, const BenchRecord* b) {
                         if (a->dataset != b->dataset) return a->dataset < b->dataset;
                         if (a->method != b->method) return a->method < b->method;
                         return a->algo < b->algo;
                     });
    os << "dataset,n,p,q,density,method,algo,s,t_n,t_r,t_s,speedup,"
          "reduction_pct,repetitions\n";
    for (const BenchRecord* r : sorted) {
        os << r->dataset << ',' << r->n << ',' << r->p << ',' << r->q << ','
           << std::setprecision(17) << r->density << ',' << r->method << ','
           << r->algo << ',' << r->s << ',' << std::fixed
           << std::setprecision(9) << r->t_n << ',' << r->t_r << ',' << r->t_s
           << ',' << r->speedup << ',' << r->reduction_pct
           << std::defaultfloat << ',' << r->repetitions << '\n';
    }
}

std::vector<BenchRecord> parse_csv(std::istream& is) {
    std::vector<BenchRecord> out;
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("parse_csv: missing header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) f.push_back(field);
        if (f.size() != 14) throw std::runtime_error("parse_csv: bad row");
        BenchRecord r;
        r.dataset = f[0];
        r.n = std::stoll(f[1]);
        r.p = std::stoll(f[2]);
        r.q = std::stoll(f[3]);
        r.density = std::stod(f[4]);
        r.method = f[5];
        r.algo = f[6];
        r.s = std::stoll(f[7]);
        r.t_n = std::stod(f[8]);
        r.t_r = std::stod(f[9]);
        r.t_s = std::stod(f[10]);
        r.speedup = std::stod(f[11]);
        r.reduction_pct = std::stod(f[12]);
        r.repetitions = std::stoi(f[13]);
        out.push_back(std::move(r));
    }
    return out;
}

LinearFit fit_linear(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("fit_linear: need >= 2 samples");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
        syy += y[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0) throw std::invalid_argument("fit_linear: x values identical");
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / den;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double pred = fit.slope * x[i] + fit.intercept;
        ss_res += (y[i] - pred) * (y[i] - pred);
        ss_tot += (y[i] - mean_y) * (y[i] - mean_y);
    }
    fit.r_squared = ss_tot == 0 ? 1.0 : 1.0 - ss_res / ss_tot;
    return fit;
}

void stats_report(std::span<const BenchRecord> records, std::ostream& os) {
    if (records.empty()) throw std::invalid_argument("stats_report: no records");

    std::map<std::string, std::vector<const BenchRecord*>> by_method;
    for (const auto& r : records) by_method[r.method].push_back(&r);

    os << "# reduction time fits (t_r vs n)\n";
    for (const auto& [method, recs] : by_method) {
        if (method == "none") continue;
        std::vector<double> xs, ys;
        for (const auto* r : recs) {
            xs.push_back(static_cast<double>(r->n));
            ys.push_back(r->t_r);
        }
        const bool distinct =
            std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>{}) !=
            xs.end();
        if (xs.size() < 2 || !distinct) {
            os << method << ": insufficient data for a fit\n";
            continue;
        }
        const LinearFit fit = fit_linear(xs, ys);
        os << method << ": t_r = " << std::scientific << std::setprecision(3)
           << fit.slope << " * n + " << fit.intercept << std::defaultfloat
           << "  (R^2 = " << std::setprecision(4) << fit.r_squared << ")\n";
    }

    os << "# mean speedup per method x algo\n";
    std::map<std::pair<std::string, std::string>, std::pair<double, int>> cells;
    for (const auto& r : records) {
        auto& cell = cells[{r.method, r.algo}];
        cell.first += r.speedup;
        cell.second += 1;
    }
    for (const auto& [key, cell] : cells)
        os << key.first << " x " << key.second << ": "
           << std::setprecision(4) << cell.first / cell.second << '\n';

    os << "# practical linearity (p < n(w+1), w=64)\n";
    int flagged = 0;
    for (const auto& r : records) {
        if (!occupancy::practical_linearity_check(
                static_cast<std::uint64_t>(r.n), static_cast<std::uint64_t>(r.p),
                64)) {
            os << "flagged: " << r.dataset << " n=" << r.n << " p=" << r.p << '\n';
            ++flagged;
        }
    }
    if (flagged == 0) os << "all records pass\n";
}

}  // namespace chp::bench
