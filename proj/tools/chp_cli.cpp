// chp: reduce integer 2D point sets before convex hull construction and
// benchmark the effect. Subcommands: reduce, hull, bench, extract-bench.
#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <unordered_set>

#include <CLI11.hpp>

#include "chp/baselines.hpp"
#include "chp/bench.hpp"
#include "chp/dataset.hpp"
#include "chp/hulls.hpp"
#include "chp/kernels.hpp"
#include "chp/occupancy.hpp"
#include "chp/reducer.hpp"

namespace {

using namespace chp;

struct CommonOpts {
    std::string input;
    std::string generator;
    std::string projection = "xy";
    double scale = 1.0;
    std::int64_t n = 0;
    std::int64_t p = 0;
    double density = 0.0;
    std::uint64_t seed = 1;
};

void add_input_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--input", o.input, "point file (2 or 3 columns, '#' comments)");
    cmd->add_option("--generator", o.generator,
                    "uniform-box|uniform-density|disc|annulus|circle");
    cmd->add_option("--projection", o.projection, "xy|xz|yz for 3D inputs")
        ->check(CLI::IsMember({"xy", "xz", "yz"}));
    cmd->add_option("--scale", o.scale, "float->integer quantization multiplier");
    cmd->add_option("--n", o.n, "generator point count");
    cmd->add_option("--p", o.p, "generator grid side");
    cmd->add_option("--density", o.density, "generator density n/(p*q)");
    cmd->add_option("--seed", o.seed, "generator seed");
}

std::vector<Point> load(const CommonOpts& o) {
    dataset::DatasetSpec spec;
    if (!o.generator.empty())
        spec.source = o.generator;
    else if (!o.input.empty())
        spec.source = o.input;
    else
        throw CLI::ValidationError("need --input or --generator");
    if (o.projection == "xz") spec.projection = dataset::Projection::xz;
    if (o.projection == "yz") spec.projection = dataset::Projection::yz;
    spec.scale = o.scale;
    spec.n = o.n;
    spec.p = o.p;
    spec.density = o.density;
    spec.seed = o.seed;
    return dataset::load_points(spec);
}

std::string dataset_id(const CommonOpts& o) {
    return !o.generator.empty() ? o.generator : o.input;
}

occupancy::Kind parse_occ(const std::string& s) {
    return s == "tree" ? occupancy::Kind::tree : occupancy::Kind::array;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("cannot open output file: " + path);
    return file;
}

int cmd_reduce(const CommonOpts& common, const std::string& method,
               int tztm_iters, bool second_scan, const std::string& occ,
               const std::string& dump_l) {
    const std::vector<Point> pts = load(common);
    std::int64_t s = 0;
    if (method == "proposed") {
        reducer::PreconditionOptions opts;
        opts.second_scan = second_scan;
        opts.occ_kind = parse_occ(occ);
        const auto res = reducer::precondition(pts, opts);
        s = res.array.valid_count();
        if (!dump_l.empty()) {
            std::ofstream out(dump_l);
            if (!out) throw CLI::ValidationError("cannot open " + dump_l);
            reducer::serialize(res.array, out);
        }
    } else if (method == "at") {
        s = static_cast<std::int64_t>(baselines::at_reduce(pts).size());
    } else if (method == "tztm") {
        s = static_cast<std::int64_t>(
            baselines::tztm_reduce(pts, tztm_iters).size());
    } else {
        s = static_cast<std::int64_t>(pts.size());
    }
    const double reduction =
        1.0 - static_cast<double>(s) / static_cast<double>(pts.size());
    std::cout << "n " << pts.size() << "\ns " << s << "\nreduction_pct "
              << reduction << '\n';
    return 0;
}

int cmd_hull(const CommonOpts& common, const std::string& method,
             const std::string& algo, int tztm_iters, bool second_scan,
             const std::string& occ) {
    const std::vector<Point> pts = load(common);

    Hull hull;
    if (method == "proposed") {
        reducer::PreconditionOptions opts;
        opts.second_scan = second_scan;
        opts.occ_kind = parse_occ(occ);
        const auto res = reducer::precondition(pts, opts);
        if (algo == "melkman") hull = hulls::melkman(res.chain);
        else if (algo == "graham") hull = hulls::graham_scan(res.chain.vertices);
        else if (algo == "jarvis") hull = hulls::jarvis_march(res.chain.vertices);
        else hull = hulls::quickhull(res.chain.vertices);
    } else {
        std::vector<Point> reduced;
        if (method == "at") reduced = baselines::at_reduce(pts);
        else if (method == "tztm") reduced = baselines::tztm_reduce(pts, tztm_iters);
        else reduced.assign(pts.begin(), pts.end());
        if (algo == "melkman")
            throw CLI::ValidationError("melkman requires --method proposed");
        if (algo == "graham") hull = hulls::graham_scan(reduced);
        else if (algo == "jarvis") hull = hulls::jarvis_march(reduced);
        else hull = hulls::quickhull(reduced);
    }
    for (const Point& v : hull.vertices) std::cout << v.x << ' ' << v.y << '\n';
    return 0;
}

int cmd_bench(const CommonOpts& common, std::vector<std::string> methods,
              std::vector<std::string> algos, int reps, int tztm_iters,
              bool second_scan, const std::string& occ,
              const std::string& output, bool report) {
    const std::vector<Point> pts = load(common);
    if (methods.empty()) methods = {"none", "proposed", "at", "tztm"};
    if (algos.empty()) algos = {"quickhull", "graham", "jarvis", "melkman"};

    std::vector<bench::BenchRecord> records;
    for (const std::string& m : methods) {
        for (const std::string& a : algos) {
            bench::PipelineOptions opts;
            opts.dataset = dataset_id(common);
            opts.repetitions = reps;
            opts.tztm_iters = tztm_iters;
            opts.second_scan = second_scan;
            opts.occ_kind = parse_occ(occ);
            if (m == "none") opts.method = bench::Method::none;
            else if (m == "proposed") opts.method = bench::Method::proposed;
            else if (m == "at") opts.method = bench::Method::at;
            else if (m == "tztm") opts.method = bench::Method::tztm;
            else throw CLI::ValidationError("unknown method: " + m);
            if (a == "quickhull") opts.algo = bench::HullAlgo::quickhull;
            else if (a == "graham") opts.algo = bench::HullAlgo::graham;
            else if (a == "jarvis") opts.algo = bench::HullAlgo::jarvis;
            else if (a == "melkman") opts.algo = bench::HullAlgo::melkman;
            else throw CLI::ValidationError("unknown algo: " + a);
            if (opts.algo == bench::HullAlgo::melkman &&
                opts.method != bench::Method::proposed)
                continue;  // no polyline from the other methods
            records.push_back(bench::run_pipeline(pts, opts));
        }
    }
    std::ofstream file;
    std::ostream& os = open_output(file, output);
    bench::emit_csv(records, os);
    if (report) bench::stats_report(records, std::cerr);
    return 0;
}

// Array-vs-tree occupancy benchmark over a density sweep: time s inserts and
// one full ordered extraction for each structure, verifying equal output.
int cmd_extract_bench(std::uint64_t p, std::vector<double> densities,
                      std::uint64_t seed, int reps, const std::string& output) {
    using Clock = std::chrono::steady_clock;
    if (densities.empty())
        densities = {0.05, 0.15, 0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.85};

    std::ofstream file;
    std::ostream& os = open_output(file, output);
    os << "p,density,s,array_insert_s,array_scan_s,tree_insert_s,tree_scan_s\n";
    for (const double density : densities) {
        std::mt19937_64 rng(seed);
        const auto s = static_cast<std::uint64_t>(density * static_cast<double>(p));
        std::uniform_int_distribution<std::uint64_t> pick(1, p);
        std::vector<std::uint64_t> sample(s);
        for (auto& v : sample) v = pick(rng);

        double t_ai = 0, t_as = 0, t_ti = 0, t_ts = 0;
        std::uint64_t checksum_array = 0, checksum_tree = 0;
        for (int r = 0; r < reps; ++r) {
            occupancy::BlockedBitset<std::uint64_t> bits(p);
            auto t0 = Clock::now();
            for (std::uint64_t v : sample) bits.insert(v);
            auto t1 = Clock::now();
            checksum_array = 0;
            bits.for_each([&](std::uint64_t i) { checksum_array += i; });
            auto t2 = Clock::now();

            occupancy::WAryOccupancyTree<std::uint64_t> tree(p);
            auto t3 = Clock::now();
            for (std::uint64_t v : sample) tree.insert(v);
            auto t4 = Clock::now();
            checksum_tree = 0;
            tree.for_each([&](std::uint64_t i) { checksum_tree += i; });
            auto t5 = Clock::now();

            t_ai += std::chrono::duration<double>(t1 - t0).count();
            t_as += std::chrono::duration<double>(t2 - t1).count();
            t_ti += std::chrono::duration<double>(t4 - t3).count();
            t_ts += std::chrono::duration<double>(t5 - t4).count();
        }
        if (checksum_array != checksum_tree)
            throw std::runtime_error("extract-bench: array/tree disagree");
        os << p << ',' << density << ',' << s << ',' << t_ai / reps << ','
           << t_as / reps << ',' << t_ti / reps << ',' << t_ts / reps << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"point-set reduction and convex hull benchmark"};
    app.require_subcommand(1);

    CommonOpts common;
    std::string method = "proposed";
    std::string algo = "quickhull";
    std::string occ = "array";
    std::string output;
    std::string dump_l;
    std::vector<std::string> methods, algos;
    int reps = 100;
    int tztm_iters = 4;
    bool second_scan = false;
    bool report = false;
    std::uint64_t xp = 1ull << 24;
    std::vector<double> densities;
    std::uint64_t xseed = 1;
    int xreps = 3;

    auto* reduce_cmd = app.add_subcommand("reduce", "run a preconditioner");
    add_input_flags(reduce_cmd, common);
    reduce_cmd->add_option("--method", method, "none|proposed|at|tztm");
    reduce_cmd->add_option("--tztm-iters", tztm_iters, "TZTM iterations");
    reduce_cmd->add_flag("--second-scan", second_scan, "second scan along y");
    reduce_cmd->add_option("--occupancy", occ, "array|tree");
    reduce_cmd->add_option("--dump-l", dump_l, "write the extremal array");

    auto* hull_cmd = app.add_subcommand("hull", "full pipeline, print hull");
    add_input_flags(hull_cmd, common);
    hull_cmd->add_option("--method", method, "none|proposed|at|tztm");
    hull_cmd->add_option("--algo", algo, "quickhull|graham|jarvis|melkman");
    hull_cmd->add_option("--tztm-iters", tztm_iters, "TZTM iterations");
    hull_cmd->add_flag("--second-scan", second_scan, "second scan along y");
    hull_cmd->add_option("--occupancy", occ, "array|tree");

    auto* bench_cmd = app.add_subcommand("bench", "method x algo matrix -> CSV");
    add_input_flags(bench_cmd, common);
    bench_cmd->add_option("--method", methods, "subset of none,proposed,at,tztm")
        ->delimiter(',');
    bench_cmd->add_option("--algo", algos,
                          "subset of quickhull,graham,jarvis,melkman")
        ->delimiter(',');
    bench_cmd->add_option("--reps", reps, "repetitions per timing");
    bench_cmd->add_option("--tztm-iters", tztm_iters, "TZTM iterations");
    bench_cmd->add_flag("--second-scan", second_scan, "second scan along y");
    bench_cmd->add_option("--occupancy", occ, "array|tree");
    bench_cmd->add_option("--output", output, "CSV path (default stdout)");
    bench_cmd->add_flag("--report", report, "print fit/speedup summary to stderr");

    auto* extract_cmd =
        app.add_subcommand("extract-bench", "array vs tree occupancy benchmark");
    extract_cmd->add_option("--p", xp, "bit universe size");
    extract_cmd->add_option("--density", densities, "s/p densities to sweep")
        ->delimiter(',');
    extract_cmd->add_option("--seed", xseed, "sample seed");
    extract_cmd->add_option("--reps", xreps, "repetitions per density");
    extract_cmd->add_option("--output", output, "CSV path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (reduce_cmd->parsed())
            return cmd_reduce(common, method, tztm_iters, second_scan, occ, dump_l);
        if (hull_cmd->parsed())
            return cmd_hull(common, method, algo, tztm_iters, second_scan, occ);
        if (bench_cmd->parsed())
            return cmd_bench(common, methods, algos, reps, tztm_iters,
                             second_scan, occ, output, report);
        if (extract_cmd->parsed())
            return cmd_extract_bench(xp, densities, xseed, xreps, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
