#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "chp/geometry.hpp"

// Data-parallel inner loops of the preconditioner: coordinate min/max and
// point translation. Scalar reference kernels always exist; on x86-64 an
// AVX2 variant is selected at runtime when the CPU supports it.
namespace chp::kernels {

struct MinMax {
    std::int64_t x_min;
    std::int64_t x_max;
    std::int64_t y_min;
    std::int64_t y_max;
};

MinMax min_max_scalar(const Point* pts, std::size_t n);
void translate_scalar(const Point* in, std::size_t n, std::int64_t dx,
                      std::int64_t dy, Point* out);

#if defined(__x86_64__) || defined(_M_X64)
MinMax min_max_avx2(const Point* pts, std::size_t n);
void translate_avx2(const Point* in, std::size_t n, std::int64_t dx,
                    std::int64_t dy, Point* out);
#endif

// Runtime-dispatched entry points. n must be >= 1 for min_max.
MinMax min_max(std::span<const Point> pts);
void translate(std::span<const Point> in, std::int64_t dx, std::int64_t dy,
               std::span<Point> out);

// "avx2" or "scalar", whichever the dispatcher picked.
std::string_view active_kernel();

}  // namespace chp::kernels
