#pragma once

#include <optional>
#include <string>

#include "fixpoint/dde.hpp"
#include "fixpoint/self_map.hpp"

namespace fixpoint {

/// A named scalar fixed-point problem: the map plus its canonical start.
struct ScalarProblem {
    std::string name;
    SelfMap<double> map;
    double x0 = 0.0;
};

/// T(x) = (x+2)^(1/3) on [0,4], x0 = 1.99. The fixed point (the real root of
/// x^3 - x - 2) is located by bisection at construction.
ScalarProblem make_cuberoot_problem();

/// T(x) = delta*x on [-1,1], x0 = 1, fixed point 0. Requires delta in (0,1).
ScalarProblem make_linear_problem(double delta);

/// T(x) = x on [-1,1]; every point is fixed, none is declared.
ScalarProblem make_identity_problem();

/// T(x) = x + 1 on the whole line: no fixed point exists.
ScalarProblem make_translation_problem();

/// x'(t) = -x(t-tau) with phi = 1, t0 = 0, tau = 1; exact solution 1-t on
/// [0, b] for b <= 1. delta = 1, so C(5) needs b < 0.5.
DelayProblem make_negfeedback_problem(double b = 0.45);

/// x'(t) = -x(t) (the delayed argument is unused) with phi = 1; exact
/// solution e^{-t}. Carries a genuine O(h^2) quadrature error, which the
/// negfeedback problem does not.
DelayProblem make_expdecay_problem(double b = 0.45);

/// x'(t) = 0: the solution is constantly phi(t0).
DelayProblem make_zero_rhs_problem(double b = 0.45);

/// Resolves "cuberoot", "identity", "linear-<delta>" (e.g. "linear-0.5").
std::optional<ScalarProblem> builtin_scalar_problem(const std::string& name);

/// Resolves "negfeedback", "expdecay", "zero-rhs".
std::optional<DelayProblem> builtin_delay_problem(const std::string& name, double b_override);

} // namespace fixpoint
