#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "chp/baselines.hpp"
#include "chp/hulls.hpp"
#include "test_util.hpp"

using namespace chp;
using namespace chp::baselines;

TEST_CASE("at_reduce discards the center of a square") {
    const std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}};
    auto kept = at_reduce(pts);
    std::sort(kept.begin(), kept.end(), lex_less);
    CHECK(kept == std::vector<Point>{{0, 0}, {0, 4}, {4, 0}, {4, 4}});
}

TEST_CASE("at_reduce keeps collinear input unchanged") {
    const std::vector<Point> pts{{0, 0}, {1, 1}, {2, 2}, {3, 3}};
    CHECK(at_reduce(pts) == pts);
    CHECK(at_reduce(std::vector<Point>{{5, 5}}) == std::vector<Point>{{5, 5}});
    CHECK_THROWS_AS(at_reduce({}), std::invalid_argument);
}

TEST_CASE("at_reduce keeps boundary co-extremes") {
    // (0, 2) shares x-min with the corners; it sits on the quadrilateral
    // boundary and must not be discarded.
    const std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {0, 2}, {2, 2}};
    auto kept = at_reduce(pts);
    CHECK(std::find(kept.begin(), kept.end(), Point{0, 2}) != kept.end());
    CHECK(std::find(kept.begin(), kept.end(), Point{2, 2}) == kept.end());
}

TEST_CASE("at_reduce halves large uniform sets") {
    std::mt19937_64 rng(79);
    const auto pts = testutil::random_points(rng, 20000, 1, 1000);
    const auto kept = at_reduce(pts);
    CHECK(kept.size() < pts.size() / 2);
}

TEST_CASE("at_reduce never discards a hull vertex") {
    std::mt19937_64 rng(83);
    for (int trial = 0; trial < 300; ++trial) {
        const auto pts = testutil::mixed_case(rng, 1 + rng() % 120);
        const auto kept = at_reduce(pts);
        CHECK(hulls::graham_scan(kept) == hulls::graham_scan(pts));
    }
}

TEST_CASE("tztm_reduce is a fixed point once only hull vertices remain") {
    const std::vector<Point> tri{{0, 0}, {10, 0}, {5, 8}};
    CHECK(tztm_reduce(tri, 1) == tztm_reduce(tri, 4));
    CHECK_THROWS_AS(tztm_reduce(tri, 0), std::invalid_argument);
}

TEST_CASE("tztm_reduce keeps every vertex of a 16-gon, drops the center") {
    std::vector<Point> pts;
    for (int k = 0; k < 16; ++k) {
        const double t = 2.0 * 3.14159265358979 * k / 16;
        pts.push_back({static_cast<std::int64_t>(std::llround(1000 * std::cos(t))),
                       static_cast<std::int64_t>(std::llround(1000 * std::sin(t)))});
    }
    std::vector<Point> with_center = pts;
    with_center.push_back({0, 0});
    for (int iters = 1; iters <= 5; ++iters) {
        auto kept = tztm_reduce(with_center, iters);
        std::sort(kept.begin(), kept.end(), lex_less);
        auto expected = pts;
        std::sort(expected.begin(), expected.end(), lex_less);
        CHECK(kept == expected);
    }
}

TEST_CASE("tztm survivor counts are non-increasing in iterations") {
    std::mt19937_64 rng(89);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pts = testutil::random_points(rng, 3000, 1, 300);
        std::size_t prev = pts.size();
        for (int iters = 1; iters <= 5; ++iters) {
            const auto kept = tztm_reduce(pts, iters);
            CHECK(kept.size() <= prev);
            prev = kept.size();
        }
    }
}

TEST_CASE("tztm_reduce never discards a hull vertex") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 200; ++trial) {
        const auto pts = testutil::mixed_case(rng, 1 + rng() % 100);
        for (int iters = 1; iters <= 4; ++iters) {
            const auto kept = tztm_reduce(pts, iters);
            CHECK(hulls::graham_scan(kept) == hulls::graham_scan(pts));
        }
    }
}
