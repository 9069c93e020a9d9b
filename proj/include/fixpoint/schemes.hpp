#pragma once

#include <array>
#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string_view>
#include <vector>

#include "fixpoint/errors.hpp"
#include "fixpoint/point.hpp"
#include "fixpoint/schedule.hpp"
#include "fixpoint/self_map.hpp"

namespace fixpoint {

/// The eight iteration schemes. Update rules, writing c(x,y,a) for the
/// convex combination (1-a)x + a*y:
///
///   Picard      x' = Tx
///   Mann        x' = c(x, Tx, a)
///   Ishikawa    v  = c(x, Tx, b);                     x' = c(x, Tv, a)
///   PicardMann  y  = c(x, Tx, a);                     x' = Ty
///   SP          z  = c(x, Tx, g); y = c(z, Tz, b);    x' = c(y, Ty, a)
///   CR          z  = c(x, Tx, g); y = c(Tx, Tz, b);   x' = c(y, Ty, a)
///   PicardS     z  = c(x, Tx, g); y = c(Tx, Tz, b);   x' = Ty
///   NewTwoStep  y  = T[c(x, Tx, b)];                  x' = T[c(y, Ty, a)]
enum class SchemeKind {
    picard,
    mann,
    ishikawa,
    picard_mann,
    sp,
    cr,
    picard_s,
    new_two_step,
};

inline constexpr std::array<SchemeKind, 8> all_schemes = {
    SchemeKind::picard,     SchemeKind::mann, SchemeKind::ishikawa,
    SchemeKind::picard_mann, SchemeKind::sp,   SchemeKind::cr,
    SchemeKind::picard_s,   SchemeKind::new_two_step,
};

std::string_view scheme_name(SchemeKind kind) noexcept;
std::optional<SchemeKind> scheme_from_name(std::string_view name) noexcept;

/// Which of the three schedule sequences a scheme consumes.
struct SchemeUsage {
    bool alpha;
    bool beta;
    bool gamma;
};

SchemeUsage scheme_usage(SchemeKind kind) noexcept;

/// Schedule values at one index.
struct SchemeParams {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

enum class StopReason { tolerance_reached, max_iter, divergence_guard };

std::string_view stop_reason_name(StopReason r) noexcept;

struct TraceRecord {
    std::size_t n;
    double x;  ///< the iterate for scalars, its norm otherwise
    std::optional<double> err;  ///< ||x_n - p||, present iff p is known
    double residual;            ///< ||x_n - T x_n||
};

struct IterationTrace {
    SchemeKind scheme{};
    std::vector<TraceRecord> records;
    StopReason stop_reason = StopReason::max_iter;
    bool residual_criterion_met = false;
    bool error_criterion_met = false;
    std::optional<double> fixed_point_summary;  ///< norm of the known p
    double tol = 0.0;

    bool converged() const noexcept { return stop_reason == StopReason::tolerance_reached; }

    /// Index at which the tolerance stop fired; empty when it never did.
    std::optional<std::size_t> iterations_to_tolerance() const noexcept {
        if (!converged() || records.empty()) return std::nullopt;
        return records.back().n;
    }
};

struct IterateOptions {
    double tol;
    std::size_t max_iter;
    /// Norms beyond this trip the divergence guard.
    double guard_norm = 1e100;
};

namespace detail {

/// One update with T(x) already evaluated; every scheme reads Tx first, so
/// iterate can reuse the residual evaluation.
template <MetricPoint P>
P step_with_tx(SchemeKind kind, const P& x, const P& tx, const SelfMap<P>& map,
               const SchemeParams& prm) {
    const auto& T = map.eval;
    switch (kind) {
        case SchemeKind::picard:
            return tx;
        case SchemeKind::mann:
            return convex_combination(x, tx, prm.alpha);
        case SchemeKind::ishikawa: {
            const P v = convex_combination(x, tx, prm.beta);
            return convex_combination(x, T(v), prm.alpha);
        }
        case SchemeKind::picard_mann:
            return T(convex_combination(x, tx, prm.alpha));
        case SchemeKind::sp: {
            const P z = convex_combination(x, tx, prm.gamma);
            const P y = convex_combination(z, T(z), prm.beta);
            return convex_combination(y, T(y), prm.alpha);
        }
        case SchemeKind::cr: {
            const P z = convex_combination(x, tx, prm.gamma);
            const P y = convex_combination(tx, T(z), prm.beta);
            return convex_combination(y, T(y), prm.alpha);
        }
        case SchemeKind::picard_s: {
            const P z = convex_combination(x, tx, prm.gamma);
            const P y = convex_combination(tx, T(z), prm.beta);
            return T(y);
        }
        case SchemeKind::new_two_step: {
            const P y = T(convex_combination(x, tx, prm.beta));
            return T(convex_combination(y, T(y), prm.alpha));
        }
    }
    throw std::invalid_argument("unknown scheme kind");
}

inline void require_params_in_range(SchemeKind kind, const SchemeParams& prm) {
    const SchemeUsage u = scheme_usage(kind);
    const auto bad = [](double v) { return !(v >= 0.0 && v <= 1.0); };
    if ((u.alpha && bad(prm.alpha)) || (u.beta && bad(prm.beta)) || (u.gamma && bad(prm.gamma))) {
        std::ostringstream os;
        os << scheme_name(kind) << ": schedule parameters must lie in [0,1]";
        throw std::invalid_argument(os.str());
    }
}

[[noreturn]] inline void throw_domain_violation(SchemeKind kind, std::size_t index) {
    std::ostringstream os;
    os << scheme_name(kind) << " step left the domain at index " << index;
    throw DomainViolation(os.str());
}

} // namespace detail

/// One update of the given scheme. The result must stay in the map's domain;
/// escaping it is an error, never a clamp.
template <MetricPoint P>
P step(SchemeKind kind, const P& x, const SelfMap<P>& map, const SchemeParams& prm) {
    detail::require_params_in_range(kind, prm);
    P next = detail::step_with_tx(kind, x, map.eval(x), map, prm);
    if (!map.domain.contains(next)) detail::throw_domain_violation(kind, 0);
    return next;
}

template <MetricPoint P>
struct IterateResult {
    IterationTrace trace;
    P last;
};

/// Runs a scheme from x0 with per-index schedule values. Stops when the
/// residual ||x_n - T x_n|| <= tol, or ||x_n - p|| <= tol when p is known
/// (both criteria are recorded), at max_iter steps, or when the divergence
/// guard trips (non-finite value or norm above guard_norm; recorded in the
/// trace, not thrown). The trace holds every iterate.
template <MetricPoint P>
IterateResult<P> iterate(SchemeKind kind, const SelfMap<P>& map, const P& x0,
                         const ScheduleSpec& sched, const IterateOptions& opts) {
    if (!(opts.tol > 0.0)) throw std::invalid_argument("iterate: tol must be positive");
    if (opts.max_iter < 1) throw std::invalid_argument("iterate: max_iter must be >= 1");
    if (!map.domain.contains(x0)) {
        throw DomainViolation("iterate: x0 lies outside the domain");
    }

    IterationTrace trace;
    trace.scheme = kind;
    trace.tol = opts.tol;
    if (map.fixed_point) trace.fixed_point_summary = norm_of(*map.fixed_point);

    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    P x = x0;
    for (std::size_t n = 0;; ++n) {
        if (!all_finite_point(x) || norm_of(x) > opts.guard_norm) {
            trace.records.push_back({n, summary_value(x),
                                     map.fixed_point ? std::optional<double>(distance(x, *map.fixed_point))
                                                     : std::nullopt,
                                     nan});
            trace.stop_reason = StopReason::divergence_guard;
            break;
        }
        const P tx = map.eval(x);
        const double residual = distance(x, tx);
        std::optional<double> err;
        if (map.fixed_point) err = distance(x, *map.fixed_point);
        trace.records.push_back({n, summary_value(x), err, residual});

        if (!all_finite_point(tx)) {
            trace.stop_reason = StopReason::divergence_guard;
            break;
        }
        const bool residual_ok = residual <= opts.tol;
        const bool err_ok = err.has_value() && *err <= opts.tol;
        if (residual_ok || err_ok) {
            trace.stop_reason = StopReason::tolerance_reached;
            trace.residual_criterion_met = residual_ok;
            trace.error_criterion_met = err_ok;
            break;
        }
        if (n == opts.max_iter) {
            trace.stop_reason = StopReason::max_iter;
            break;
        }
        const SchemeParams prm{sched.alpha.value(n), sched.beta.value(n), sched.gamma.value(n)};
        P next = detail::step_with_tx(kind, x, tx, map, prm);
        if (all_finite_point(next) && !map.domain.contains(next)) {
            detail::throw_domain_violation(kind, n);
        }
        x = std::move(next);
    }
    return IterateResult<P>{std::move(trace), std::move(x)};
}

} // namespace fixpoint
