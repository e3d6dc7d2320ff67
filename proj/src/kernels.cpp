#include "chp/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace chp::kernels {

MinMax min_max_scalar(const Point* pts, std::size_t n) {
    MinMax mm{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
    for (std::size_t i = 1; i < n; ++i) {
        mm.x_min = std::min(mm.x_min, pts[i].x);
        mm.x_max = std::max(mm.x_max, pts[i].x);
        mm.y_min = std::min(mm.y_min, pts[i].y);
        mm.y_max = std::max(mm.y_max, pts[i].y);
    }
    return mm;
}

void translate_scalar(const Point* in, std::size_t n, std::int64_t dx,
                      std::int64_t dy, Point* out) {
    for (std::size_t i = 0; i < n; ++i) out[i] = {in[i].x + dx, in[i].y + dy};
}

namespace {

using MinMaxFn = MinMax (*)(const Point*, std::size_t);
using TranslateFn = void (*)(const Point*, std::size_t, std::int64_t,
                             std::int64_t, Point*);

struct Dispatch {
    MinMaxFn min_max = min_max_scalar;
    TranslateFn translate = translate_scalar;
    std::string_view name = "scalar";
};

Dispatch resolve() {
    Dispatch d;
#if defined(__x86_64__) || defined(_M_X64)
    if (__builtin_cpu_supports("avx2")) {
        d.min_max = min_max_avx2;
        d.translate = translate_avx2;
        d.name = "avx2";
    }
#endif
    return d;
}

const Dispatch& dispatch() {
    static const Dispatch d = resolve();
    return d;
}

}  // namespace

MinMax min_max(std::span<const Point> pts) {
    if (pts.empty()) throw std::invalid_argument("min_max: empty input");
    return dispatch().min_max(pts.data(), pts.size());
}

void translate(std::span<const Point> in, std::int64_t dx, std::int64_t dy,
               std::span<Point> out) {
    if (out.size() < in.size())
        throw std::invalid_argument("translate: output too small");
    dispatch().translate(in.data(), in.size(), dx, dy, out.data());
}

std::string_view active_kernel() { return dispatch().name; }

}  // namespace chp::kernels
