// AVX2 variants of the bounds and translation kernels. Points are stored
// as (x, y) int64 pairs, so each 256-bit vector carries two points in an
// x,y,x,y lane pattern; lane-parallel min/max keeps x and y separate and a
// final cross-lane fold merges them.
#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "chp/kernels.hpp"

namespace chp::kernels {

namespace {

inline __m256i min_epi64(__m256i a, __m256i b) {
    return _mm256_blendv_epi8(a, b, _mm256_cmpgt_epi64(a, b));
}

inline __m256i max_epi64(__m256i a, __m256i b) {
    return _mm256_blendv_epi8(b, a, _mm256_cmpgt_epi64(a, b));
}

}  // namespace

MinMax min_max_avx2(const Point* pts, std::size_t n) {
    MinMax mm{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    const std::size_t pairs = n / 2;
    if (pairs >= 2) {
        const auto* data = reinterpret_cast<const __m256i*>(pts);
        __m256i lo = _mm256_loadu_si256(data);
        __m256i hi = lo;
        for (std::size_t v = 1; v < pairs; ++v) {
            const __m256i cur = _mm256_loadu_si256(data + v);
            lo = min_epi64(lo, cur);
            hi = max_epi64(hi, cur);
        }
        alignas(32) std::int64_t lo_lanes[4];
        alignas(32) std::int64_t hi_lanes[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(lo_lanes), lo);
        _mm256_store_si256(reinterpret_cast<__m256i*>(hi_lanes), hi);
        mm.x_min = lo_lanes[0] < lo_lanes[2] ? lo_lanes[0] : lo_lanes[2];
        mm.y_min = lo_lanes[1] < lo_lanes[3] ? lo_lanes[1] : lo_lanes[3];
        mm.x_max = hi_lanes[0] > hi_lanes[2] ? hi_lanes[0] : hi_lanes[2];
        mm.y_max = hi_lanes[1] > hi_lanes[3] ? hi_lanes[1] : hi_lanes[3];
    }
    for (std::size_t i = pairs >= 2 ? pairs * 2 : 1; i < n; ++i) {
        if (pts[i].x < mm.x_min) mm.x_min = pts[i].x;
        if (pts[i].x > mm.x_max) mm.x_max = pts[i].x;
        if (pts[i].y < mm.y_min) mm.y_min = pts[i].y;
        if (pts[i].y > mm.y_max) mm.y_max = pts[i].y;
    }
    return mm;
}

void translate_avx2(const Point* in, std::size_t n, std::int64_t dx,
                    std::int64_t dy, Point* out) {
    const __m256i delta = _mm256_set_epi64x(dy, dx, dy, dx);
    const std::size_t pairs = n / 2;
    const auto* src = reinterpret_cast<const __m256i*>(in);
    auto* dst = reinterpret_cast<__m256i*>(out);
    for (std::size_t v = 0; v < pairs; ++v) {
        _mm256_storeu_si256(dst + v,
                            _mm256_add_epi64(_mm256_loadu_si256(src + v), delta));
    }
    for (std::size_t i = pairs * 2; i < n; ++i)
        out[i] = {in[i].x + dx, in[i].y + dy};
}

}  // namespace chp::kernels

#endif  // x86-64
