#pragma once

#include <cstddef>
#include <vector>

#include "fixpoint/point.hpp"

namespace fixpoint {

/// Uniform grid over [t_start, t_start + (count-1)*h], both ends included.
/// t0_index marks the node where the delay history ends; for delay problems
/// the grid spans [t0-tau, b] and t0_index = tau/h.
struct UniformGrid {
    double t_start = 0.0;
    double h = 1.0;
    std::size_t count = 0;
    std::size_t t0_index = 0;

    /// Grid for a delay problem over [t0-tau, b]. Rejects spacings where
    /// (b-t0+tau)/h or tau/h is not an integer (within 1e-9): delayed lookups
    /// must be exact node reads, interpolation is not applied.
    static UniformGrid over_delay_domain(double t0, double b, double tau, double h);

    double node(std::size_t k) const noexcept {
        return t_start + static_cast<double>(k) * h;
    }

    double t_end() const noexcept { return node(count - 1); }

    bool same_layout(const UniformGrid& o) const noexcept {
        return t_start == o.t_start && h == o.h && count == o.count && t0_index == o.t0_index;
    }
};

/// Grid function under the discrete Chebyshev (sup over nodes) norm.
struct GridFunction {
    UniformGrid grid;
    std::vector<double> values;

    static GridFunction constant(const UniformGrid& g, double v);
};

GridFunction convex_combination(const GridFunction& x, const GridFunction& y, double a);
double distance(const GridFunction& x, const GridFunction& y);
double norm_of(const GridFunction& x) noexcept;
bool all_finite_point(const GridFunction& x) noexcept;
GridFunction shifted(const GridFunction& x, double e);
GridFunction scaled(const GridFunction& x, double a);
double summary_value(const GridFunction& x) noexcept;

static_assert(MetricPoint<double>);

} // namespace fixpoint
