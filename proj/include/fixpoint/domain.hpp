#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "fixpoint/grid.hpp"
#include "fixpoint/point.hpp"

namespace fixpoint {

/// Uniform draw in [0,1) built directly from the generator's 64-bit output,
/// so sampling is reproducible across standard libraries.
inline double uniform01(std::mt19937_64& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Closed interval [lo, hi]; lo < hi. Infinite endpoints model unbounded
/// domains (those cannot be sampled).
struct IntervalDomain {
    double lo;
    double hi;

    static IntervalDomain make(double lo, double hi);
    static IntervalDomain whole_line() noexcept;

    bool contains(double x) const noexcept { return x >= lo && x <= hi; }
    bool bounded() const noexcept;
    double sample(std::mt19937_64& rng) const;
};

/// Axis-aligned box in d dimensions under the max-norm.
struct BoxDomain {
    std::vector<IntervalDomain> coords;

    static BoxDomain make(std::vector<IntervalDomain> coords);

    bool contains(const VecN& x) const noexcept;
    bool bounded() const noexcept;
    VecN sample(std::mt19937_64& rng) const;
};

/// The space of grid functions on a fixed grid, optionally with per-node
/// value bounds (needed only for sampling).
struct GridDomain {
    UniformGrid grid;
    double value_lo = -std::numeric_limits<double>::infinity();
    double value_hi = std::numeric_limits<double>::infinity();

    bool contains(const GridFunction& x) const noexcept;
    bool bounded() const noexcept;
    GridFunction sample(std::mt19937_64& rng) const;
};

template <typename P>
struct domain_traits;

template <>
struct domain_traits<double> {
    using type = IntervalDomain;
};

template <>
struct domain_traits<VecN> {
    using type = BoxDomain;
};

template <>
struct domain_traits<GridFunction> {
    using type = GridDomain;
};

template <typename P>
using DomainOf = typename domain_traits<P>::type;

} // namespace fixpoint
