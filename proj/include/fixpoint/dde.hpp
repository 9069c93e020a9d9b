#pragma once

#include <array>
#include <cstdint>
#include <functional>

#include "fixpoint/grid.hpp"
#include "fixpoint/schemes.hpp"
#include "fixpoint/self_map.hpp"

namespace fixpoint {

/// The delay problem x'(t) = f(t, x(t), x(t-tau)) on [t0, b] with history
/// x(t) = phi(t) on [t0-tau, t0]. delta and lipschitz_l are the constants of
/// the C(4) growth condition on f.
struct DelayProblem {
    double t0 = 0.0;
    double b = 0.0;
    double tau = 0.0;
    std::function<double(double, double, double)> rhs;  ///< f(t, x, x_delayed)
    std::function<double(double)> history;              ///< phi
    double delta = 0.0;
    double lipschitz_l = 0.0;

    /// Validating factory. Rejects tau <= 0, t0 >= b, delta <= 0, L < 0 and
    /// throws HypothesisViolation when 2*delta*(b-t0) >= 1 (condition C(5)).
    static DelayProblem make(double t0, double b, double tau,
                             std::function<double(double, double, double)> rhs,
                             std::function<double(double)> history, double delta,
                             double lipschitz_l);
};

/// C(5) arithmetic shared by the factory and the conditions checker.
/// Returns 2*delta*(b-t0); throws HypothesisViolation when it is >= 1.
double require_c5(double delta, double t0, double b);

enum class ConditionStatus { verified, asserted_by_caller, violated };

struct ConditionEntry {
    ConditionStatus status = ConditionStatus::asserted_by_caller;
    double evidence = 0.0;
};

/// Status of conditions C(1)..C(5), entries[0] = C(1). C(1) and C(5) are
/// decidable arithmetic and always machine-verified; C(2)/C(3) are probed for
/// finiteness and remain caller asserted; C(4) is spot-checked on sampled
/// tuples with constant candidate functions.
struct ConditionsReport {
    std::array<ConditionEntry, 5> entries{};

    bool all_satisfied() const noexcept {
        for (const auto& e : entries) {
            if (e.status == ConditionStatus::violated) return false;
        }
        return true;
    }
};

/// The integral operator on grid functions:
///   (Tx)(t) = phi(t)                                           t <= t0
///   (Tx)(t) = phi(t0) + integral_{t0}^{t} f(s, x(s), x(s-tau)) t >  t0
/// with the integral taken by the cumulative trapezoid rule and the delayed
/// argument read by exact node lookup. The history prefix of the output is a
/// bitwise copy of phi's node values for every input.
SelfMap<GridFunction> build_operator(const DelayProblem& prob, const UniformGrid& grid);

ConditionsReport check_conditions(const DelayProblem& prob, std::size_t sample_count,
                                  std::uint64_t seed);

struct DdeSolution {
    GridFunction solution;
    IterationTrace trace;
    ConditionsReport conditions;
    bool converged = false;
};

/// Solves the delay problem by running the two-step scheme on the integral
/// operator under the discrete sup norm, starting from phi extended
/// constantly by phi(t0). A max_iter stop returns the trace with the
/// solution flagged unconverged rather than throwing.
DdeSolution solve_dde(const DelayProblem& prob, double h, const ScheduleSpec& sched, double tol,
                      std::size_t max_iter, std::uint64_t seed = 0x5eed);

/// Independent reference: classical RK4 on x'(t) = f(t, x, phi(t-tau)) over
/// [t0, b], valid while b - t0 <= tau so the delayed argument stays inside
/// the history. Returns the full grid function (phi prefix included).
GridFunction method_of_steps_oracle(const DelayProblem& prob, double h);

} // namespace fixpoint
