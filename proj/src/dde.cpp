#include "fixpoint/dde.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "fixpoint/errors.hpp"
#include "fixpoint/kernels.hpp"

namespace fixpoint {

double require_c5(double delta, double t0, double b) {
    const double v = 2.0 * delta * (b - t0);
    if (!(v < 1.0)) {
        std::ostringstream os;
        os << "condition C(5) fails: 2δ(b−t0) = " << v << " must be < 1";
        throw HypothesisViolation(os.str());
    }
    return v;
}

DelayProblem DelayProblem::make(double t0, double b, double tau,
                                std::function<double(double, double, double)> rhs,
                                std::function<double(double)> history, double delta,
                                double lipschitz_l) {
    if (!(tau > 0.0)) throw std::invalid_argument("delay problem: tau must be positive");
    if (!(t0 < b)) throw std::invalid_argument("delay problem: need t0 < b");
    if (!rhs || !history) throw std::invalid_argument("delay problem: f and phi are required");
    if (!(delta > 0.0)) throw std::invalid_argument("delay problem: delta must be positive");
    if (!(lipschitz_l >= 0.0)) throw std::invalid_argument("delay problem: L must be >= 0");
    require_c5(delta, t0, b);
    DelayProblem p;
    p.t0 = t0;
    p.b = b;
    p.tau = tau;
    p.rhs = std::move(rhs);
    p.history = std::move(history);
    p.delta = delta;
    p.lipschitz_l = lipschitz_l;
    return p;
}

namespace {

// Shared state of one built operator: the grid and the frozen history prefix.
struct OperatorState {
    DelayProblem prob;
    UniformGrid grid;
    std::vector<double> phi_nodes;  // phi at nodes 0..t0_index
    double phi_at_t0 = 0.0;

    GridFunction apply(const GridFunction& x) const {
        const std::size_t count = grid.count;
        const std::size_t i0 = grid.t0_index;
        const std::size_t m = count - i0;  // nodes from t0 to b inclusive

        // integrand at nodes >= t0; node-wise, so the map may run in parallel
        std::vector<double> integrand(m);
        kernels::map_index(m, integrand, [&](std::size_t j) {
            const std::size_t node = i0 + j;
            return prob.rhs(grid.node(node), x.values[node], x.values[node - i0]);
        });
        if (!kernels::all_finite(integrand)) {
            for (std::size_t j = 0; j < m; ++j) {
                if (!std::isfinite(integrand[j])) {
                    std::ostringstream os;
                    os << "f returned a non-finite value at node " << (i0 + j) << " (t = "
                       << grid.node(i0 + j) << ")";
                    throw EvaluationError(os.str());
                }
            }
        }
        const std::vector<double> cum = kernels::cumulative_trapezoid(integrand, grid.h);

        GridFunction out{grid, std::vector<double>(count)};
        std::copy(phi_nodes.begin(), phi_nodes.end(), out.values.begin());
        std::span<double> suffix(out.values.data() + i0, m);
        kernels::add_scalar(cum, phi_at_t0, suffix);
        return out;
    }
};

} // namespace

SelfMap<GridFunction> build_operator(const DelayProblem& prob, const UniformGrid& grid) {
    if (grid.count == 0 || grid.t0_index >= grid.count) {
        throw std::invalid_argument("build_operator: malformed grid");
    }
    auto state = std::make_shared<OperatorState>();
    state->prob = prob;
    state->grid = grid;
    state->phi_nodes.resize(grid.t0_index + 1);
    for (std::size_t k = 0; k <= grid.t0_index; ++k) {
        state->phi_nodes[k] = prob.history(grid.node(k));
        if (!std::isfinite(state->phi_nodes[k])) {
            std::ostringstream os;
            os << "phi is non-finite at node " << k << " (t = " << grid.node(k) << ")";
            throw EvaluationError(os.str());
        }
    }
    state->phi_at_t0 = state->phi_nodes.back();

    SelfMap<GridFunction> map;
    map.eval = [state](const GridFunction& x) { return state->apply(x); };
    map.domain = GridDomain{grid};
    return map;
}

ConditionsReport check_conditions(const DelayProblem& prob, std::size_t sample_count,
                                  std::uint64_t seed) {
    ConditionsReport rep;

    // C(1): plain arithmetic on t0, b, tau.
    rep.entries[0] = {(prob.t0 < prob.b && prob.tau > 0.0) ? ConditionStatus::verified
                                                           : ConditionStatus::violated,
                      prob.b - prob.t0};

    // C(3): probe phi on the history interval; finiteness is evidence,
    // continuity stays with the caller.
    double phi_max = 0.0;
    bool phi_finite = true;
    const std::size_t probes = 64;
    for (std::size_t k = 0; k <= probes; ++k) {
        const double t = prob.t0 - prob.tau +
                         (prob.tau * static_cast<double>(k)) / static_cast<double>(probes);
        const double v = prob.history(t);
        phi_finite = phi_finite && std::isfinite(v);
        phi_max = std::max(phi_max, std::fabs(v));
    }
    rep.entries[2] = {phi_finite ? ConditionStatus::asserted_by_caller
                                 : ConditionStatus::violated,
                      phi_max};

    // C(2) and C(4): sampled probes of f. Candidate values range over a box
    // scaled to the history magnitude.
    const double radius = 2.0 * (1.0 + phi_max);
    std::mt19937_64 rng(seed);
    double f_max = 0.0;
    bool f_finite = true;
    double c4_max_slack = -std::numeric_limits<double>::infinity();
    bool c4_ok = true;
    const std::size_t quad_nodes = 64;
    for (std::size_t i = 0; i < sample_count; ++i) {
        const double t = prob.t0 + uniform01(rng) * (prob.b - prob.t0);
        const auto draw = [&] { return -radius + 2.0 * radius * uniform01(rng); };
        const double x = draw(), y = draw(), u = draw(), v = draw();

        const double fxy = prob.rhs(t, x, y);
        const double fuv = prob.rhs(t, u, v);
        f_finite = f_finite && std::isfinite(fxy) && std::isfinite(fuv);
        f_max = std::max({f_max, std::fabs(fxy), std::fabs(fuv)});

        // integral of f(s,u,v) over [t0,t] with constant candidates u, v
        std::vector<double> g(quad_nodes + 1);
        const double hq = (t - prob.t0) / static_cast<double>(quad_nodes);
        for (std::size_t k = 0; k <= quad_nodes; ++k) {
            g[k] = prob.rhs(prob.t0 + static_cast<double>(k) * hq, u, v);
        }
        const double integral = kernels::cumulative_trapezoid(g, hq).back();
        const double tu = prob.history(prob.t0) + integral;
        const double lhs = std::fabs(fxy - fuv);
        const double rhs = prob.delta * (std::fabs(x - u) + std::fabs(y - v)) +
                           prob.lipschitz_l * (std::fabs(tu - u) + std::fabs(tu - v));
        const double slack = lhs - rhs;
        c4_max_slack = std::max(c4_max_slack, slack);
        c4_ok = c4_ok && slack <= 1e-9 * (1.0 + std::fabs(rhs));
    }
    rep.entries[1] = {f_finite ? ConditionStatus::asserted_by_caller : ConditionStatus::violated,
                      f_max};
    rep.entries[3] = {c4_ok ? ConditionStatus::verified : ConditionStatus::violated,
                      c4_max_slack};

    // C(5): machine-verified; a failure here voids the fixed-point theorem.
    rep.entries[4] = {ConditionStatus::verified, require_c5(prob.delta, prob.t0, prob.b)};
    return rep;
}

DdeSolution solve_dde(const DelayProblem& prob, double h, const ScheduleSpec& sched, double tol,
                      std::size_t max_iter, std::uint64_t seed) {
    const UniformGrid grid = UniformGrid::over_delay_domain(prob.t0, prob.b, prob.tau, h);
    DdeSolution out;
    out.conditions = check_conditions(prob, 256, seed);
    const SelfMap<GridFunction> op = build_operator(prob, grid);

    // x0 = phi on the history, extended constantly by phi(t0)
    GridFunction x0{grid, std::vector<double>(grid.count)};
    for (std::size_t k = 0; k <= grid.t0_index; ++k) x0.values[k] = prob.history(grid.node(k));
    for (std::size_t k = grid.t0_index + 1; k < grid.count; ++k) {
        x0.values[k] = x0.values[grid.t0_index];
    }

    auto result = iterate(SchemeKind::new_two_step, op, x0, sched, IterateOptions{tol, max_iter});
    out.converged = result.trace.converged();
    out.trace = std::move(result.trace);
    out.solution = std::move(result.last);
    return out;
}

GridFunction method_of_steps_oracle(const DelayProblem& prob, double h) {
    if (!(prob.b - prob.t0 <= prob.tau)) {
        throw std::invalid_argument(
            "method_of_steps_oracle: needs b - t0 <= tau (single-interval stepping)");
    }
    const UniformGrid grid = UniformGrid::over_delay_domain(prob.t0, prob.b, prob.tau, h);
    GridFunction out{grid, std::vector<double>(grid.count)};
    for (std::size_t k = 0; k <= grid.t0_index; ++k) out.values[k] = prob.history(grid.node(k));

    // classical fourth-order step; x(t - tau) = phi(t - tau) throughout
    double x = out.values[grid.t0_index];
    for (std::size_t j = grid.t0_index; j + 1 < grid.count; ++j) {
        const double t = grid.node(j);
        const double k1 = prob.rhs(t, x, prob.history(t - prob.tau));
        const double k2 =
            prob.rhs(t + h / 2.0, x + h / 2.0 * k1, prob.history(t + h / 2.0 - prob.tau));
        const double k3 =
            prob.rhs(t + h / 2.0, x + h / 2.0 * k2, prob.history(t + h / 2.0 - prob.tau));
        const double k4 = prob.rhs(t + h, x + h * k3, prob.history(t + h - prob.tau));
        x = x + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        out.values[j + 1] = x;
    }
    return out;
}

} // namespace fixpoint
