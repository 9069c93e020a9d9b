#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <utility>

#include "fixpoint/domain.hpp"
#include "fixpoint/errors.hpp"
#include "fixpoint/point.hpp"

namespace fixpoint {

/// A self-map T on a domain. eval must be pure and re-entrant: the schemes
/// call it concurrently and rely on identical inputs giving identical
/// outputs.
template <MetricPoint P>
struct SelfMap {
    std::function<P(const P&)> eval;
    DomainOf<P> domain;
    std::optional<P> fixed_point{};
};

/// Spot-checks that eval maps the domain into itself (on sampled points; a
/// violation throws rather than clamping) and, when a fixed point is
/// declared, that its residual is at most 1e-12*(1+norm(p)). Unbounded
/// domains skip the closure sampling.
template <MetricPoint P>
void validate_self_map(const SelfMap<P>& map, std::size_t samples, std::uint64_t seed) {
    if (map.fixed_point) {
        const P& p = *map.fixed_point;
        const double resid = distance(map.eval(p), p);
        if (!(resid <= 1e-12 * (1.0 + norm_of(p)))) {
            std::ostringstream os;
            os << "declared fixed point has residual " << resid;
            throw DomainViolation(os.str());
        }
        if (!map.domain.contains(p)) {
            throw DomainViolation("declared fixed point lies outside the domain");
        }
    }
    if (!map.domain.bounded()) return;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const P x = map.domain.sample(rng);
        const P tx = map.eval(x);
        if (!map.domain.contains(tx)) {
            std::ostringstream os;
            os << "self-map leaves its domain at sample " << i;
            throw DomainViolation(os.str());
        }
    }
}

} // namespace fixpoint
