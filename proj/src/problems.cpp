#include "fixpoint/problems.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace fixpoint {

namespace {

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Bisection for the real root of x^3 - x - 2 = 0 on [1,2]; the interval
// shrinks below 1e-15 well within 60 halvings.
double cuberoot_fixed_point() {
    auto f = [](double x) { return x * x * x - x - 2.0; };
    double lo = 1.0, hi = 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) > 0.0) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

ScalarProblem make_cuberoot_problem() {
    ScalarProblem p;
    p.name = "cuberoot";
    p.map.eval = [](const double& x) { return std::cbrt(x + 2.0); };
    p.map.domain = IntervalDomain::make(0.0, 4.0);
    p.map.fixed_point = cuberoot_fixed_point();
    p.x0 = 1.99;
    validate_self_map(p.map, 64, 0x51d);
    return p;
}

ScalarProblem make_linear_problem(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("linear problem: delta must lie in (0,1)");
    }
    ScalarProblem p;
    p.name = "linear-" + short_number(delta);
    p.map.eval = [delta](const double& x) { return delta * x; };
    p.map.domain = IntervalDomain::make(-1.0, 1.0);
    p.map.fixed_point = 0.0;
    p.x0 = 1.0;
    validate_self_map(p.map, 64, 0x51d);
    return p;
}

ScalarProblem make_identity_problem() {
    ScalarProblem p;
    p.name = "identity";
    p.map.eval = [](const double& x) { return x; };
    p.map.domain = IntervalDomain::make(-1.0, 1.0);
    p.x0 = 0.5;
    return p;
}

ScalarProblem make_translation_problem() {
    ScalarProblem p;
    p.name = "translation";
    p.map.eval = [](const double& x) { return x + 1.0; };
    p.map.domain = IntervalDomain::whole_line();
    p.x0 = 0.0;
    return p;
}

DelayProblem make_negfeedback_problem(double b) {
    return DelayProblem::make(
        0.0, b, 1.0, [](double, double, double y) { return -y; },
        [](double) { return 1.0; }, 1.0, 0.1);
}

DelayProblem make_expdecay_problem(double b) {
    return DelayProblem::make(
        0.0, b, 1.0, [](double, double x, double) { return -x; },
        [](double) { return 1.0; }, 1.0, 0.1);
}

DelayProblem make_zero_rhs_problem(double b) {
    return DelayProblem::make(
        0.0, b, 1.0, [](double, double, double) { return 0.0; },
        [](double) { return 1.0; }, 0.01, 0.1);
}

std::optional<ScalarProblem> builtin_scalar_problem(const std::string& name) {
    if (name == "cuberoot") return make_cuberoot_problem();
    if (name == "identity") return make_identity_problem();
    if (name.rfind("linear-", 0) == 0) {
        const std::string tail = name.substr(7);
        char* end = nullptr;
        const double delta = std::strtod(tail.c_str(), &end);
        if (end == tail.c_str() + tail.size() && !tail.empty() && delta > 0.0 && delta < 1.0) {
            return make_linear_problem(delta);
        }
    }
    return std::nullopt;
}

std::optional<DelayProblem> builtin_delay_problem(const std::string& name, double b_override) {
    if (name == "negfeedback") return make_negfeedback_problem(b_override);
    if (name == "expdecay") return make_expdecay_problem(b_override);
    if (name == "zero-rhs") return make_zero_rhs_problem(b_override);
    return std::nullopt;
}

} // namespace fixpoint
