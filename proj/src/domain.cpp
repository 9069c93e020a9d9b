#include "fixpoint/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace fixpoint {

IntervalDomain IntervalDomain::make(double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("interval domain: need lo < hi");
    return IntervalDomain{lo, hi};
}

IntervalDomain IntervalDomain::whole_line() noexcept {
    return IntervalDomain{-std::numeric_limits<double>::infinity(),
                          std::numeric_limits<double>::infinity()};
}

bool IntervalDomain::bounded() const noexcept {
    return std::isfinite(lo) && std::isfinite(hi);
}

double IntervalDomain::sample(std::mt19937_64& rng) const {
    if (!bounded()) throw std::invalid_argument("cannot sample an unbounded interval");
    return lo + uniform01(rng) * (hi - lo);
}

BoxDomain BoxDomain::make(std::vector<IntervalDomain> coords) {
    if (coords.empty()) throw std::invalid_argument("box domain: need at least one coordinate");
    for (const auto& c : coords) {
        if (!(c.lo < c.hi)) throw std::invalid_argument("box domain: need lo < hi per coordinate");
    }
    return BoxDomain{std::move(coords)};
}

bool BoxDomain::contains(const VecN& x) const noexcept {
    if (x.dim() != coords.size()) return false;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (!coords[i].contains(x.values[i])) return false;
    }
    return true;
}

bool BoxDomain::bounded() const noexcept {
    for (const auto& c : coords) {
        if (!c.bounded()) return false;
    }
    return true;
}

VecN BoxDomain::sample(std::mt19937_64& rng) const {
    VecN out{std::vector<double>(coords.size())};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        out.values[i] = coords[i].sample(rng);
    }
    return out;
}

bool GridDomain::contains(const GridFunction& x) const noexcept {
    if (!x.grid.same_layout(grid) || x.values.size() != grid.count) return false;
    if (value_lo == -std::numeric_limits<double>::infinity() &&
        value_hi == std::numeric_limits<double>::infinity()) {
        return true;
    }
    for (const double v : x.values) {
        if (!(v >= value_lo && v <= value_hi)) return false;
    }
    return true;
}

bool GridDomain::bounded() const noexcept {
    return std::isfinite(value_lo) && std::isfinite(value_hi);
}

GridFunction GridDomain::sample(std::mt19937_64& rng) const {
    if (!bounded()) throw std::invalid_argument("cannot sample an unbounded grid domain");
    GridFunction out{grid, std::vector<double>(grid.count)};
    for (auto& v : out.values) {
        v = value_lo + uniform01(rng) * (value_hi - value_lo);
    }
    return out;
}

} // namespace fixpoint
