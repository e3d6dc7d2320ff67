#include <doctest.h>

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

#include "chp/bench.hpp"
#include "chp/dataset.hpp"
#include "test_util.hpp"

using namespace chp;
using namespace chp::bench;
using namespace chp::dataset;

TEST_CASE("parse 2D integer points") {
    std::istringstream in("2 3\n7 1\n4 9\n");
    CHECK(parse_points(in, Projection::xy, 1.0) ==
          std::vector<Point>{{2, 3}, {7, 1}, {4, 9}});
}

TEST_CASE("parse handles comments, blanks, commas") {
    std::istringstream in("# header\n\n1,2\n 3 ,4 \n");
    CHECK(parse_points(in, Projection::xy, 1.0) ==
          std::vector<Point>{{1, 2}, {3, 4}});
}

TEST_CASE("3D projection with quantization") {
    std::istringstream in("1.26 4.50 9.99\n");
    CHECK(parse_points(in, Projection::xy, 10.0) ==
          std::vector<Point>{{13, 45}});
    std::istringstream in2("1.26 4.50 9.99\n");
    CHECK(parse_points(in2, Projection::xz, 10.0) ==
          std::vector<Point>{{13, 100}});
    std::istringstream in3("1.26 4.50 9.99\n");
    CHECK(parse_points(in3, Projection::yz, 10.0) ==
          std::vector<Point>{{45, 100}});
}

TEST_CASE("rounding is half away from zero") {
    std::istringstream in("0.5 -0.5\n2.5 -2.5\n");
    CHECK(parse_points(in, Projection::xy, 1.0) ==
          std::vector<Point>{{1, -1}, {3, -3}});
}

TEST_CASE("parse errors carry line numbers") {
    std::istringstream one_field("1 2\n7\n");
    CHECK_THROWS_WITH_AS(parse_points(one_field, Projection::xy, 1.0),
                         "expected 2 or 3 fields at line 2", std::runtime_error);
    std::istringstream garbage("1 2\n3 zap\n");
    CHECK_THROWS_WITH_AS(parse_points(garbage, Projection::xy, 1.0),
                         "malformed point at line 2", std::runtime_error);
    std::istringstream overflow("1e30 2\n");
    CHECK_THROWS_AS(parse_points(overflow, Projection::xy, 1.0),
                    std::runtime_error);
}

TEST_CASE("generators are deterministic under a fixed seed") {
    DatasetSpec spec;
    spec.source = "uniform-box";
    spec.n = 5000;
    spec.p = 1000;
    spec.seed = 42;
    const auto a = generate(spec);
    const auto b = generate(spec);
    CHECK(a == b);
    CHECK(a.size() == 5000);
    for (const Point& pt : a) {
        CHECK(pt.x >= 1);
        CHECK(pt.x <= 1000);
        CHECK(pt.y >= 1);
        CHECK(pt.y <= 1000);
    }
    spec.seed = 43;
    CHECK(generate(spec) != a);
}

TEST_CASE("uniform-density resolves n from p") {
    DatasetSpec spec;
    spec.source = "uniform-density";
    spec.p = 100;
    spec.density = 0.44;
    CHECK(generate(spec).size() == 4400);
}

TEST_CASE("run_pipeline with no preconditioner") {
    std::mt19937_64 rng(127);
    const auto pts = testutil::random_points(rng, 2000, 1, 100);
    PipelineOptions opts;
    opts.method = Method::none;
    opts.algo = HullAlgo::quickhull;
    opts.repetitions = 3;
    const BenchRecord rec = run_pipeline(pts, opts);
    CHECK(rec.t_r == 0);
    CHECK(rec.s == rec.n);
    CHECK(rec.speedup == 1.0);
    CHECK(rec.reduction_pct == 0.0);
}

TEST_CASE("run_pipeline proposed method reduces dense data") {
    std::mt19937_64 rng(131);
    const auto pts = testutil::random_points(rng, 50000, 1, 200);
    PipelineOptions opts;
    opts.method = Method::proposed;
    opts.repetitions = 2;
    for (const HullAlgo algo : {HullAlgo::quickhull, HullAlgo::graham,
                                HullAlgo::jarvis, HullAlgo::melkman}) {
        opts.algo = algo;
        const BenchRecord rec = run_pipeline(pts, opts);
        CHECK(rec.s <= 2 * rec.p);
        CHECK(rec.reduction_pct > 1.0 - 2.0 / 200 - 0.01);
    }
}

TEST_CASE("run_pipeline tztm iterations give non-increasing s") {
    std::mt19937_64 rng(137);
    const auto pts = testutil::random_points(rng, 5000, 1, 150);
    PipelineOptions opts;
    opts.method = Method::tztm;
    opts.algo = HullAlgo::quickhull;
    opts.repetitions = 1;
    std::int64_t prev = std::numeric_limits<std::int64_t>::max();
    for (int iters : {2, 3, 4}) {
        opts.tztm_iters = iters;
        const BenchRecord rec = run_pipeline(pts, opts);
        CHECK(rec.s <= prev);
        prev = rec.s;
    }
}

TEST_CASE("melkman pairing is enforced") {
    std::mt19937_64 rng(139);
    const auto pts = testutil::random_points(rng, 100, 1, 50);
    PipelineOptions opts;
    opts.algo = HullAlgo::melkman;
    opts.method = Method::at;
    opts.repetitions = 1;
    CHECK_THROWS_AS(run_pipeline(pts, opts), std::invalid_argument);
}

TEST_CASE("csv emission and round trip") {
    BenchRecord r;
    r.dataset = "demo";
    r.n = 1000;
    r.p = 50;
    r.q = 60;
    r.density = 1000.0 / 3000.0;
    r.method = "proposed";
    r.algo = "graham";
    r.s = 90;
    r.t_n = 0.001234567;
    r.t_r = 0.000123456;
    r.t_s = 0.000012345;
    r.speedup = 9.087;
    r.reduction_pct = 0.91;
    r.repetitions = 100;
    BenchRecord r2 = r;
    r2.dataset = "alpha";

    std::vector<BenchRecord> recs{r, r2};
    std::ostringstream os;
    emit_csv(recs, os);
    const std::string text = os.str();
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
    // Deterministic row order: dataset, then method, then algo.
    CHECK(text.find("alpha") < text.find("demo"));
    CHECK(text.find("0.001234567") != std::string::npos);

    // Parse then re-emit: textual fixpoint at the stated precision.
    std::istringstream is(text);
    const auto parsed = parse_csv(is);
    REQUIRE(parsed.size() == 2);
    std::ostringstream os2;
    emit_csv(parsed, os2);
    CHECK(os2.str() == text);

    std::ostringstream empty;
    emit_csv({}, empty);
    const std::string header_only = empty.str();
    CHECK(std::count(header_only.begin(), header_only.end(), '\n') == 1);
}

TEST_CASE("linear fit recovers an exact line") {
    const std::vector<double> x{1, 2, 3, 4};
    const std::vector<double> y{3, 5, 7, 9};
    const LinearFit fit = fit_linear(x, y);
    CHECK(fit.slope == doctest::Approx(2.0));
    CHECK(fit.intercept == doctest::Approx(1.0));
    CHECK(fit.r_squared == doctest::Approx(1.0));
    CHECK_THROWS_AS(fit_linear(std::vector<double>{1}, std::vector<double>{1}),
                    std::invalid_argument);
}

TEST_CASE("stats_report produces fits and flags") {
    std::vector<BenchRecord> recs;
    for (int i = 1; i <= 5; ++i) {
        BenchRecord r;
        r.dataset = "sweep";
        r.n = i * 1000;
        r.p = 100;
        r.q = 100;
        r.method = "proposed";
        r.algo = "graham";
        r.t_r = 1e-6 * r.n + 1e-5;
        r.speedup = 3.0;
        recs.push_back(r);
    }
    std::ostringstream os;
    stats_report(recs, os);
    const std::string text = os.str();
    CHECK(text.find("proposed: t_r =") != std::string::npos);
    CHECK(text.find("R^2") != std::string::npos);
    CHECK(text.find("all records pass") != std::string::npos);

    // A sparse record trips the linearity flag.
    BenchRecord sparse;
    sparse.dataset = "sparse";
    sparse.n = 10;
    sparse.p = 100000;
    sparse.method = "proposed";
    sparse.algo = "graham";
    recs.push_back(sparse);
    std::ostringstream os2;
    stats_report(recs, os2);
    CHECK(os2.str().find("flagged: sparse") != std::string::npos);

    std::ostringstream os3;
    CHECK_THROWS_AS(stats_report({}, os3), std::invalid_argument);

    // Single record per method: no fit possible.
    std::vector<BenchRecord> single{recs[0]};
    std::ostringstream os4;
    stats_report(single, os4);
    CHECK(os4.str().find("insufficient data") != std::string::npos);
}
