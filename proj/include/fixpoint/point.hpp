#pragma once

#include <cmath>
#include <concepts>
#include <cstddef>
#include <vector>

#include "fixpoint/kernels.hpp"

namespace fixpoint {

// --- scalar points (real line with |.|) -------------------------------------

/// Literal (1-a)*x + a*y. No algebraic rearrangement, so a=0 and a=1 are
/// bitwise exact.
inline double convex_combination(double x, double y, double a) noexcept {
    return (1.0 - a) * x + a * y;
}

inline double distance(double x, double y) noexcept { return std::fabs(x - y); }

inline double norm_of(double x) noexcept { return std::fabs(x); }

inline bool all_finite_point(double x) noexcept { return std::isfinite(x); }

inline double shifted(double x, double e) noexcept { return x + e; }

inline double scaled(double x, double a) noexcept { return a * x; }

/// Scalar used in trace records and CSVs: the value itself for scalars,
/// the norm for vector-like points.
inline double summary_value(double x) noexcept { return x; }

// --- fixed-dimension vector points (max-norm) --------------------------------

struct VecN {
    std::vector<double> values;

    std::size_t dim() const noexcept { return values.size(); }
};

VecN convex_combination(const VecN& x, const VecN& y, double a);
double distance(const VecN& x, const VecN& y);
double norm_of(const VecN& x) noexcept;
bool all_finite_point(const VecN& x) noexcept;
VecN shifted(const VecN& x, double e);
VecN scaled(const VecN& x, double a);
double summary_value(const VecN& x) noexcept;

// --- the point concept the schemes are written against -----------------------

template <typename P>
concept MetricPoint = std::copyable<P> && requires(const P& x, const P& y, double a) {
    { convex_combination(x, y, a) } -> std::same_as<P>;
    { distance(x, y) } -> std::convertible_to<double>;
    { norm_of(x) } -> std::convertible_to<double>;
    { all_finite_point(x) } -> std::convertible_to<bool>;
    { shifted(x, a) } -> std::same_as<P>;
    { summary_value(x) } -> std::convertible_to<double>;
};

} // namespace fixpoint
