#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "fixpoint/schemes.hpp"

namespace fixpoint {

struct ComparisonEntry {
    SchemeKind kind{};
    std::optional<std::size_t> iterations;  ///< empty = tolerance not reached
    std::optional<double> final_err;
    double final_residual = 0.0;
    StopReason stop_reason = StopReason::max_iter;
};

/// Multi-scheme comparison from one shared x0 and schedule. ordering holds
/// the requested schemes sorted ascending by iterations-to-tolerance, ties
/// broken by final error (residual when no fixed point is known), then by
/// scheme name so reports are deterministic.
struct ComparisonReport {
    std::vector<IterationTrace> traces;     ///< in requested order
    std::vector<ComparisonEntry> entries;   ///< in requested order
    std::vector<SchemeKind> ordering;
};

template <MetricPoint P>
ComparisonReport compare_schemes(std::span<const SchemeKind> kinds, const SelfMap<P>& map,
                                 const P& x0, const ScheduleSpec& sched, double tol,
                                 std::size_t max_iter);

struct RatioEntry {
    std::size_t n;
    std::optional<double> ratio;  ///< empty where the denominator vanishes
};

/// ||a_n - p|| / ||b_n - p|| over the common index range of two traces
/// recorded against the same fixed point. Denominators at or below 1e-300
/// yield undefined entries rather than infinities.
std::vector<RatioEntry> rate_ratio_empirical(const IterationTrace& a, const IterationTrace& b);

template <MetricPoint P>
std::vector<RatioEntry> rate_ratio_empirical(const IterationTrace& a, const IterationTrace& b,
                                             const P& p) {
    const double pn = norm_of(p);
    const auto mismatch = [&](const IterationTrace& t) {
        return !t.fixed_point_summary ||
               std::fabs(*t.fixed_point_summary - pn) > 1e-9 * (1.0 + pn);
    };
    if (mismatch(a) || mismatch(b)) {
        throw std::invalid_argument("rate_ratio_empirical: traces were not recorded against p");
    }
    return rate_ratio_empirical(a, b);
}

enum class PerturbationKind { decaying, constant, noise };

/// Additive perturbation family for the stability experiment:
///   decaying  e_n = c/(n+1)^q, q > 1
///   constant  e_n = c
///   noise     e_n uniform in [-c, c], seeded
struct PerturbationSpec {
    PerturbationKind kind = PerturbationKind::decaying;
    double c = 0.0;
    double q = 2.0;
    std::uint64_t seed = 0;
};

struct StabilityRecord {
    std::size_t n;
    double z;    ///< z_n (norm for vector-like points)
    double eps;  ///< ||z_{n+1} - f(T, z_n)|| = |e_n|
    double err;  ///< ||z_n - p||
};

/// Perturbed run z_{n+1} = f(T, z_n) + e_n of the two-step scheme, with tail
/// evidence for the two directions of T-stability. Verdicts are finite-horizon
/// evidence only: the tail window is the last tail_fraction of the horizon and
/// both thresholds are fixed constants recorded here.
struct StabilityReport {
    static constexpr double tail_fraction = 0.2;
    static constexpr double eps_tail_threshold = 1e-4;
    static constexpr double err_tail_threshold = 1e-4;

    PerturbationSpec pert;
    std::vector<StabilityRecord> records;
    std::size_t tail_start = 0;
    double tail_eps_max = 0.0;
    double tail_err_max = 0.0;
    double tail_err_min = 0.0;
    bool eps_vanishes = false;             ///< tail eps max below threshold
    bool converges_to_fixed_point = false; ///< tail err max below threshold
    bool verdict_forward = false;
    bool verdict_converse = false;
    bool guard_tripped = false;
};

template <MetricPoint P>
StabilityReport stability_experiment(const SelfMap<P>& map, const P& x0,
                                     const ScheduleSpec& sched, const PerturbationSpec& pert,
                                     std::size_t horizon);

/// Theorem-style equivalence probe: do PicardMann and the two-step scheme
/// agree on convergence from the same x0? Disagreement is reported as-is.
struct EquivalenceReport {
    bool picard_mann_converged = false;
    bool new_scheme_converged = false;
    bool both_converge = false;
    bool neither = false;
    bool agree = false;
};

template <MetricPoint P>
EquivalenceReport equivalence_check(const SelfMap<P>& map, const P& x0,
                                    const ScheduleSpec& sched, double tol,
                                    std::size_t max_iter);

// --- implementation ----------------------------------------------------------

template <MetricPoint P>
ComparisonReport compare_schemes(std::span<const SchemeKind> kinds, const SelfMap<P>& map,
                                 const P& x0, const ScheduleSpec& sched, double tol,
                                 std::size_t max_iter) {
    if (kinds.empty()) throw std::invalid_argument("compare_schemes: no schemes requested");

    ComparisonReport rep;
    rep.traces.resize(kinds.size());
    const auto n = static_cast<std::ptrdiff_t>(kinds.size());
    std::exception_ptr failure;
    // Runs are independent; each owns its trace.
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        try {
            auto result = iterate(kinds[i], map, x0, sched, IterateOptions{tol, max_iter});
            rep.traces[i] = std::move(result.trace);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(fixpoint_compare_failure)
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    rep.entries.reserve(kinds.size());
    for (const auto& trace : rep.traces) {
        ComparisonEntry e;
        e.kind = trace.scheme;
        e.iterations = trace.iterations_to_tolerance();
        e.final_err = trace.records.back().err;
        e.final_residual = trace.records.back().residual;
        e.stop_reason = trace.stop_reason;
        rep.entries.push_back(e);
    }

    std::vector<std::size_t> idx(kinds.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    const auto key = [&](std::size_t i) {
        const auto& e = rep.entries[i];
        const double tie = e.final_err ? *e.final_err : e.final_residual;
        const std::size_t iters =
            e.iterations ? *e.iterations : std::numeric_limits<std::size_t>::max();
        return std::tuple<std::size_t, double, std::string_view>(iters, tie,
                                                                 scheme_name(e.kind));
    };
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
    rep.ordering.reserve(kinds.size());
    for (const std::size_t i : idx) rep.ordering.push_back(kinds[i]);
    return rep;
}

template <MetricPoint P>
StabilityReport stability_experiment(const SelfMap<P>& map, const P& x0,
                                     const ScheduleSpec& sched, const PerturbationSpec& pert,
                                     std::size_t horizon) {
    if (horizon < 20) throw std::invalid_argument("stability_experiment: horizon must be >= 20");
    if (!map.fixed_point) {
        throw std::invalid_argument("stability_experiment: the map needs a known fixed point");
    }
    if (!(pert.c >= 0.0)) throw std::invalid_argument("stability_experiment: c must be >= 0");
    if (pert.kind == PerturbationKind::decaying && !(pert.q > 1.0)) {
        throw std::invalid_argument("stability_experiment: decaying perturbations need q > 1");
    }

    std::mt19937_64 rng(pert.seed);
    const P& p = *map.fixed_point;
    StabilityReport rep;
    rep.pert = pert;
    rep.records.reserve(horizon);

    P z = x0;
    for (std::size_t n = 0; n < horizon; ++n) {
        if (!all_finite_point(z)) {
            rep.guard_tripped = true;
            break;
        }
        const SchemeParams prm{sched.alpha.value(n), sched.beta.value(n), sched.gamma.value(n)};
        const P exact = detail::step_with_tx(SchemeKind::new_two_step, z, map.eval(z), map, prm);
        double e = 0.0;
        switch (pert.kind) {
            case PerturbationKind::decaying:
                e = pert.c / std::pow(static_cast<double>(n + 1), pert.q);
                break;
            case PerturbationKind::constant:
                e = pert.c;
                break;
            case PerturbationKind::noise:
                e = (2.0 * uniform01(rng) - 1.0) * pert.c;
                break;
        }
        P znext = shifted(exact, e);
        rep.records.push_back(
            {n, summary_value(z), distance(znext, exact), distance(z, p)});
        z = std::move(znext);
    }

    const std::size_t len = rep.records.size();
    rep.tail_start = len - static_cast<std::size_t>(
                               static_cast<double>(len) * StabilityReport::tail_fraction);
    if (!rep.records.empty() && rep.tail_start >= len) rep.tail_start = len - 1;
    rep.tail_err_min = std::numeric_limits<double>::infinity();
    for (std::size_t i = rep.tail_start; i < len; ++i) {
        rep.tail_eps_max = std::max(rep.tail_eps_max, rep.records[i].eps);
        rep.tail_err_max = std::max(rep.tail_err_max, rep.records[i].err);
        rep.tail_err_min = std::min(rep.tail_err_min, rep.records[i].err);
    }
    if (!rep.guard_tripped && len == horizon) {
        rep.eps_vanishes = rep.tail_eps_max <= StabilityReport::eps_tail_threshold;
        rep.converges_to_fixed_point = rep.tail_err_max <= StabilityReport::err_tail_threshold;
    }
    rep.verdict_forward = rep.eps_vanishes && rep.converges_to_fixed_point;
    rep.verdict_converse = rep.converges_to_fixed_point && rep.eps_vanishes;
    return rep;
}

template <MetricPoint P>
EquivalenceReport equivalence_check(const SelfMap<P>& map, const P& x0,
                                    const ScheduleSpec& sched, double tol,
                                    std::size_t max_iter) {
    EquivalenceReport rep;
    const IterateOptions opts{tol, max_iter};
    rep.picard_mann_converged =
        iterate(SchemeKind::picard_mann, map, x0, sched, opts).trace.converged();
    rep.new_scheme_converged =
        iterate(SchemeKind::new_two_step, map, x0, sched, opts).trace.converged();
    rep.both_converge = rep.picard_mann_converged && rep.new_scheme_converged;
    rep.neither = !rep.picard_mann_converged && !rep.new_scheme_converged;
    rep.agree = rep.both_converge || rep.neither;
    return rep;
}

} // namespace fixpoint
