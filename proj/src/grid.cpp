#include "fixpoint/grid.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fixpoint {

namespace {

// (length/h) must be an integer within 1e-9; returns the rounded step count.
std::size_t integral_steps(double length, double h, const char* what) {
    const double q = length / h;
    const double r = std::round(q);
    if (!(h > 0.0) || !std::isfinite(q) || std::fabs(q - r) > 1e-9 || r < 0.0) {
        throw std::invalid_argument(std::string(what) +
                                    " must be an integer multiple of the grid spacing h");
    }
    return static_cast<std::size_t>(r);
}

} // namespace

UniformGrid UniformGrid::over_delay_domain(double t0, double b, double tau, double h) {
    if (!(tau > 0.0)) throw std::invalid_argument("grid: tau must be positive");
    if (!(t0 < b)) throw std::invalid_argument("grid: need t0 < b");
    const std::size_t total = integral_steps(b - (t0 - tau), h, "(b - t0 + tau)");
    const std::size_t delay = integral_steps(tau, h, "tau");
    if (total < delay) throw std::invalid_argument("grid: inconsistent span");
    UniformGrid g;
    g.t_start = t0 - tau;
    g.h = h;
    g.count = total + 1;
    g.t0_index = delay;
    return g;
}

GridFunction GridFunction::constant(const UniformGrid& g, double v) {
    return GridFunction{g, std::vector<double>(g.count, v)};
}

namespace {

void require_same_layout(const GridFunction& x, const GridFunction& y) {
    if (!x.grid.same_layout(y.grid) || x.values.size() != y.values.size()) {
        throw std::invalid_argument("grid functions live on different grids");
    }
}

} // namespace

GridFunction convex_combination(const GridFunction& x, const GridFunction& y, double a) {
    require_same_layout(x, y);
    GridFunction out{x.grid, std::vector<double>(x.values.size())};
    kernels::axpby(1.0 - a, x.values, a, y.values, out.values);
    return out;
}

double distance(const GridFunction& x, const GridFunction& y) {
    require_same_layout(x, y);
    return kernels::max_abs_diff(x.values, y.values);
}

double norm_of(const GridFunction& x) noexcept { return kernels::max_abs(x.values); }

bool all_finite_point(const GridFunction& x) noexcept {
    return kernels::all_finite(x.values);
}

GridFunction shifted(const GridFunction& x, double e) {
    GridFunction out{x.grid, std::vector<double>(x.values.size())};
    kernels::add_scalar(x.values, e, out.values);
    return out;
}

GridFunction scaled(const GridFunction& x, double a) {
    GridFunction out{x.grid, std::vector<double>(x.values.size())};
    kernels::scale(a, x.values, out.values);
    return out;
}

double summary_value(const GridFunction& x) noexcept { return norm_of(x); }

// VecN lives here as well: same kernels, same norm.

VecN convex_combination(const VecN& x, const VecN& y, double a) {
    if (x.dim() != y.dim()) throw std::invalid_argument("vector dimensions differ");
    VecN out{std::vector<double>(x.dim())};
    kernels::axpby(1.0 - a, x.values, a, y.values, out.values);
    return out;
}

double distance(const VecN& x, const VecN& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("vector dimensions differ");
    return kernels::max_abs_diff(x.values, y.values);
}

double norm_of(const VecN& x) noexcept { return kernels::max_abs(x.values); }

bool all_finite_point(const VecN& x) noexcept { return kernels::all_finite(x.values); }

VecN shifted(const VecN& x, double e) {
    VecN out{std::vector<double>(x.dim())};
    kernels::add_scalar(x.values, e, out.values);
    return out;
}

VecN scaled(const VecN& x, double a) {
    VecN out{std::vector<double>(x.dim())};
    kernels::scale(a, x.values, out.values);
    return out;
}

double summary_value(const VecN& x) noexcept { return norm_of(x); }

} // namespace fixpoint
