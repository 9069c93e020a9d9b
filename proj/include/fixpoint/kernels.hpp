#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fixpoint::kernels {

/// Arrays shorter than this run the serial path; the crossover keeps thread
/// dispatch overhead away from scalar-sized problems.
inline constexpr std::size_t parallel_threshold = 8192;

/// True when the library was built with OpenMP.
bool parallel_available() noexcept;

/// Number of OpenMP threads the parallel path would use (1 without OpenMP).
int parallel_width() noexcept;

// Serial reference implementations. These are the semantics of record: the
// parallel variants must agree bitwise (element-wise maps and max-reductions
// are order-insensitive in IEEE arithmetic).
namespace serial {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept;

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept;

void scale(double a, std::span<const double> x, std::span<double> out) noexcept;

double max_abs(std::span<const double> x) noexcept;

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept;

bool all_finite(std::span<const double> x) noexcept;

template <class F>
void map_index(std::size_t n, std::span<double> out, F&& f) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = f(i);
    }
}

template <class F>
double max_map(std::size_t n, F&& f) {
    double acc = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = f(i);
        if (v > acc) acc = v;
    }
    return acc;
}

} // namespace serial

// OpenMP implementations. Without OpenMP they delegate to the serial path.
namespace par {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept;

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept;

void scale(double a, std::span<const double> x, std::span<double> out) noexcept;

double max_abs(std::span<const double> x) noexcept;

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept;

bool all_finite(std::span<const double> x) noexcept;

template <class F>
void map_index(std::size_t n, std::span<double> out, F&& f) {
#ifdef _OPENMP
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
        out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
    }
#else
    serial::map_index(n, out, std::forward<F>(f));
#endif
}

template <class F>
double max_map(std::size_t n, F&& f) {
#ifdef _OPENMP
    double acc = -std::numeric_limits<double>::infinity();
    const auto sn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static) reduction(max : acc)
    for (std::ptrdiff_t i = 0; i < sn; ++i) {
        const double v = f(static_cast<std::size_t>(i));
        if (v > acc) acc = v;
    }
    return acc;
#else
    return serial::max_map(n, std::forward<F>(f));
#endif
}

} // namespace par

// Size-dispatched entry points used by the point/grid operations.

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept;

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept;

void scale(double a, std::span<const double> x, std::span<double> out) noexcept;

double max_abs(std::span<const double> x) noexcept;

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept;

bool all_finite(std::span<const double> x) noexcept;

template <class F>
void map_index(std::size_t n, std::span<double> out, F&& f) {
    if (parallel_available() && n >= parallel_threshold) {
        par::map_index(n, out, std::forward<F>(f));
    } else {
        serial::map_index(n, out, std::forward<F>(f));
    }
}

template <class F>
double max_map(std::size_t n, F&& f) {
    if (parallel_available() && n >= parallel_threshold) {
        return par::max_map(n, std::forward<F>(f));
    }
    return serial::max_map(n, std::forward<F>(f));
}

/// Cumulative composite trapezoid: out[0] = 0,
/// out[k] = out[k-1] + h*(values[k-1]+values[k])/2. Exact for affine
/// integrands. Sequential left-to-right by contract so results are bitwise
/// reproducible regardless of thread count.
std::vector<double> cumulative_trapezoid(std::span<const double> values, double h);

} // namespace fixpoint::kernels
