#include "fixpoint/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace fixpoint::kernels {

bool parallel_available() noexcept {
#ifdef _OPENMP
    return true;
#else
    return false;
#endif
}

int parallel_width() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace serial {

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = x[i] + c;
    }
}

void scale(double a, std::span<const double> x, std::span<double> out) noexcept {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = a * x[i];
    }
}

double max_abs(std::span<const double> x) noexcept {
    double acc = 0.0;
    for (const double v : x) {
        const double a = std::fabs(v);
        if (a > acc || std::isnan(a)) acc = a;
    }
    return acc;
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept {
    const std::size_t n = x.size();
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double a = std::fabs(x[i] - y[i]);
        if (a > acc || std::isnan(a)) acc = a;
    }
    return acc;
}

bool all_finite(std::span<const double> x) noexcept {
    for (const double v : x) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

} // namespace serial

namespace par {

#ifdef _OPENMP

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = a * x[i] + b * y[i];
    }
}

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = x[i] + c;
    }
}

void scale(double a, std::span<const double> x, std::span<double> out) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[i] = a * x[i];
    }
}

double max_abs(std::span<const double> x) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    double acc = 0.0;
    bool nan_seen = false;
#pragma omp parallel for schedule(static) reduction(max : acc) reduction(|| : nan_seen)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double a = std::fabs(x[i]);
        nan_seen = nan_seen || std::isnan(a);
        if (a > acc) acc = a;
    }
    return nan_seen ? std::numeric_limits<double>::quiet_NaN() : acc;
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    double acc = 0.0;
    bool nan_seen = false;
#pragma omp parallel for schedule(static) reduction(max : acc) reduction(|| : nan_seen)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double a = std::fabs(x[i] - y[i]);
        nan_seen = nan_seen || std::isnan(a);
        if (a > acc) acc = a;
    }
    return nan_seen ? std::numeric_limits<double>::quiet_NaN() : acc;
}

bool all_finite(std::span<const double> x) noexcept {
    const auto n = static_cast<std::ptrdiff_t>(x.size());
    bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        ok = ok && std::isfinite(x[i]);
    }
    return ok;
}

#else

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept {
    serial::axpby(a, x, b, y, out);
}

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept {
    serial::add_scalar(x, c, out);
}

void scale(double a, std::span<const double> x, std::span<double> out) noexcept {
    serial::scale(a, x, out);
}

double max_abs(std::span<const double> x) noexcept { return serial::max_abs(x); }

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept {
    return serial::max_abs_diff(x, y);
}

bool all_finite(std::span<const double> x) noexcept { return serial::all_finite(x); }

#endif

} // namespace par

namespace {

inline bool use_parallel(std::size_t n) noexcept {
    return parallel_available() && n >= parallel_threshold;
}

} // namespace

void axpby(double a, std::span<const double> x, double b, std::span<const double> y,
           std::span<double> out) noexcept {
    if (use_parallel(out.size())) {
        par::axpby(a, x, b, y, out);
    } else {
        serial::axpby(a, x, b, y, out);
    }
}

void add_scalar(std::span<const double> x, double c, std::span<double> out) noexcept {
    if (use_parallel(out.size())) {
        par::add_scalar(x, c, out);
    } else {
        serial::add_scalar(x, c, out);
    }
}

void scale(double a, std::span<const double> x, std::span<double> out) noexcept {
    if (use_parallel(out.size())) {
        par::scale(a, x, out);
    } else {
        serial::scale(a, x, out);
    }
}

double max_abs(std::span<const double> x) noexcept {
    return use_parallel(x.size()) ? par::max_abs(x) : serial::max_abs(x);
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) noexcept {
    return use_parallel(x.size()) ? par::max_abs_diff(x, y) : serial::max_abs_diff(x, y);
}

bool all_finite(std::span<const double> x) noexcept {
    return use_parallel(x.size()) ? par::all_finite(x) : serial::all_finite(x);
}

std::vector<double> cumulative_trapezoid(std::span<const double> values, double h) {
    if (values.empty()) {
        throw std::invalid_argument("cumulative_trapezoid: need at least one node");
    }
    std::vector<double> out(values.size());
    out[0] = 0.0;
    for (std::size_t k = 1; k < values.size(); ++k) {
        out[k] = out[k - 1] + h * (values[k - 1] + values[k]) / 2.0;
    }
    return out;
}

} // namespace fixpoint::kernels
