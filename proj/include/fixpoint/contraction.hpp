#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "fixpoint/schedule.hpp"
#include "fixpoint/schemes.hpp"
#include "fixpoint/self_map.hpp"

namespace fixpoint {

/// Weak-contraction slack at one pair: ||Tx-Ty|| - delta*||x-y|| - L*||x-Tx||.
/// The condition holds when the slack is at most 1e-12.
struct ConditionCheck {
    bool holds;
    double slack;
};

inline constexpr double condition_slack_tolerance = 1e-12;

template <MetricPoint P>
ConditionCheck verify_condition(const SelfMap<P>& map, const P& x, const P& y, double delta,
                                double l) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("verify_condition: delta must lie in (0,1)");
    }
    if (!(l >= 0.0)) throw std::invalid_argument("verify_condition: L must be >= 0");
    const P tx = map.eval(x);
    const P ty = map.eval(y);
    const double slack = distance(tx, ty) - delta * distance(x, y) - l * distance(x, tx);
    return ConditionCheck{slack <= condition_slack_tolerance, slack};
}

/// Empirically certified (delta, L) pair over a sampled bounded domain.
/// delta_hat >= 1 means the sampled pairs admit no contraction constant at
/// any grid L; such estimates are reported with certified=false and a
/// positive max_violation (measured against delta capped just below 1).
struct WeakContractionEstimate {
    double delta_hat = 1.0;
    double l_hat = 0.0;
    std::size_t samples = 0;
    double max_violation = 0.0;
    std::uint64_t sampler_seed = 0;
    bool certified = false;
};

template <MetricPoint P>
WeakContractionEstimate estimate_weak_contraction(const SelfMap<P>& map, std::size_t count,
                                                  std::uint64_t seed,
                                                  std::span<const double> l_grid);

/// Inputs of the Picard-Mann / two-step error bounds: contraction constant,
/// schedules, initial error, and the bound index n.
struct BoundInputs {
    double delta;
    ScheduleSpec sched;
    double initial_err;
    std::size_t n;
};

/// delta^(2(n+1)) * prod_{k=0..n} (1-alpha_k(1-delta))(1-beta_k(1-delta)) * initial_err.
double new_scheme_bound(const BoundInputs& inp);

/// delta^(n+1) * prod_{k=0..n} (1-alpha_k(1-delta)) * initial_err.
double picard_mann_bound(const BoundInputs& inp);

/// delta^(n+1) * prod_{k=0..n} (1-beta_k(1-delta)): the ratio of the two
/// bounds for equal positive initial errors. Strictly decreasing in n.
double bound_ratio(const BoundInputs& inp);

/// Nonnegative sequences (a_n, mu_n, b_n) with mu_n in (0,1), checked on a
/// finite horizon.
struct SequenceTriple {
    std::function<double(std::size_t)> a;
    std::function<double(std::size_t)> mu;
    std::function<double(std::size_t)> b;
    std::size_t horizon;
};

/// Finite-horizon evidence for the a_n -> 0 lemma. hypothesis_holds reports
/// the per-index recursion a_{n+1} <= (1-mu_n)a_n + b_n (with 1e-12 relative
/// slack); the divergence of sum(mu) and b_n/mu_n -> 0 are asymptotic and
/// only evidenced, never decided.
struct WengReport {
    bool hypothesis_holds = true;
    std::optional<std::size_t> first_violation;
    double mu_partial_sum = 0.0;
    bool mu_divergence_evidence = false;  ///< partial sum above 10 on the horizon
    double b_over_mu_tail_max = 0.0;      ///< max of b_n/mu_n over the last 10%
    double tail_max = 0.0;                ///< max of a_n over the last 10%
};

WengReport lemma_weng_check(const SequenceTriple& seq);

// --- implementation ----------------------------------------------------------

namespace detail {

struct PairScan {
    // Largest (d_T - l*d_xtx)/d_xy over ordered sample pairs, clamped at 0.
    // Evaluated one l at a time; pairs with d_xy == 0 are skipped.
    template <MetricPoint P>
    static double delta_for_l(std::span<const P> xs, std::span<const P> txs,
                              std::span<const double> d_xtx, double l);

    // Largest ||Tx-Ty|| - delta*||x-y|| - l*||x-Tx|| over ordered pairs.
    template <MetricPoint P>
    static double violation(std::span<const P> xs, std::span<const P> txs,
                            std::span<const double> d_xtx, double delta, double l);
};

template <MetricPoint P>
double PairScan::delta_for_l(std::span<const P> xs, std::span<const P> txs,
                             std::span<const double> d_xtx, double l) {
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
    double best = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(max : best)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double local = 0.0;
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            const double d_xy = distance(xs[i], xs[j]);
            if (!(d_xy > 0.0)) continue;
            const double d_t = distance(txs[i], txs[j]);
            const double r1 = (d_t - l * d_xtx[i]) / d_xy;
            const double r2 = (d_t - l * d_xtx[j]) / d_xy;
            const double r = r1 > r2 ? r1 : r2;
            if (r > local) local = r;
        }
        if (local > best) best = local;
    }
    return best;
}

template <MetricPoint P>
double PairScan::violation(std::span<const P> xs, std::span<const P> txs,
                           std::span<const double> d_xtx, double delta, double l) {
    const auto n = static_cast<std::ptrdiff_t>(xs.size());
    double worst = -std::numeric_limits<double>::infinity();
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) reduction(max : worst)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        double local = -std::numeric_limits<double>::infinity();
        for (std::ptrdiff_t j = i + 1; j < n; ++j) {
            const double d_xy = distance(xs[i], xs[j]);
            const double d_t = distance(txs[i], txs[j]);
            const double v1 = d_t - delta * d_xy - l * d_xtx[i];
            const double v2 = d_t - delta * d_xy - l * d_xtx[j];
            const double v = v1 > v2 ? v1 : v2;
            if (v > local) local = v;
        }
        if (local > worst) worst = local;
    }
    return worst;
}

} // namespace detail

template <MetricPoint P>
WeakContractionEstimate estimate_weak_contraction(const SelfMap<P>& map, std::size_t count,
                                                  std::uint64_t seed,
                                                  std::span<const double> l_grid) {
    if (count < 2) throw std::invalid_argument("estimate_weak_contraction: need count >= 2");
    if (l_grid.empty()) throw std::invalid_argument("estimate_weak_contraction: empty L grid");
    if (!map.domain.bounded()) {
        throw std::invalid_argument("estimate_weak_contraction: domain must be bounded");
    }
    for (const double l : l_grid) {
        if (!(l >= 0.0)) throw std::invalid_argument("estimate_weak_contraction: L must be >= 0");
    }

    std::mt19937_64 rng(seed);
    std::vector<P> xs;
    xs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) xs.push_back(map.domain.sample(rng));
    std::vector<P> txs;
    txs.reserve(count);
    for (const P& x : xs) txs.push_back(map.eval(x));
    std::vector<double> d_xtx(count);
    for (std::size_t i = 0; i < count; ++i) d_xtx[i] = distance(xs[i], txs[i]);

    WeakContractionEstimate est;
    est.samples = count;
    est.sampler_seed = seed;
    est.delta_hat = std::numeric_limits<double>::infinity();
    for (const double l : l_grid) {
        const double d = detail::PairScan::delta_for_l<P>(xs, txs, d_xtx, l);
        if (d < est.delta_hat) {
            est.delta_hat = d;
            est.l_hat = l;
        }
    }
    est.certified = est.delta_hat < 1.0;
    // Violations against the certified constant, or against the largest
    // admissible delta when none exists (so uncertifiable maps report > 0).
    const double delta_used = est.certified ? est.delta_hat : 1.0 - 1e-9;
    est.max_violation =
        detail::PairScan::violation<P>(xs, txs, d_xtx, delta_used, est.l_hat);
    if (est.certified && !(est.max_violation <= condition_slack_tolerance)) {
        est.certified = false;  // numerical inconsistency; do not claim certification
    }
    return est;
}

} // namespace fixpoint
