#include "fixpoint/contraction.hpp"

#include <cmath>
#include <stdexcept>

namespace fixpoint {

namespace {

void require_bound_inputs(const BoundInputs& inp) {
    if (!(inp.delta > 0.0 && inp.delta < 1.0)) {
        throw std::invalid_argument("bounds: delta must lie in (0,1)");
    }
    if (!(inp.initial_err >= 0.0)) {
        throw std::invalid_argument("bounds: initial error must be >= 0");
    }
}

} // namespace

double new_scheme_bound(const BoundInputs& inp) {
    require_bound_inputs(inp);
    const double one_minus = 1.0 - inp.delta;
    double prod = 1.0;
    for (std::size_t k = 0; k <= inp.n; ++k) {
        prod *= (1.0 - inp.sched.alpha.value(k) * one_minus) *
                (1.0 - inp.sched.beta.value(k) * one_minus);
    }
    return std::pow(inp.delta, 2.0 * static_cast<double>(inp.n + 1)) * prod * inp.initial_err;
}

double picard_mann_bound(const BoundInputs& inp) {
    require_bound_inputs(inp);
    const double one_minus = 1.0 - inp.delta;
    double prod = 1.0;
    for (std::size_t k = 0; k <= inp.n; ++k) {
        prod *= 1.0 - inp.sched.alpha.value(k) * one_minus;
    }
    return std::pow(inp.delta, static_cast<double>(inp.n + 1)) * prod * inp.initial_err;
}

double bound_ratio(const BoundInputs& inp) {
    require_bound_inputs(inp);
    const double one_minus = 1.0 - inp.delta;
    double prod = 1.0;
    for (std::size_t k = 0; k <= inp.n; ++k) {
        prod *= 1.0 - inp.sched.beta.value(k) * one_minus;
    }
    return std::pow(inp.delta, static_cast<double>(inp.n + 1)) * prod;
}

WengReport lemma_weng_check(const SequenceTriple& seq) {
    if (seq.horizon < 10) throw std::invalid_argument("lemma_weng_check: horizon must be >= 10");

    WengReport rep;
    const std::size_t tail_start = seq.horizon - seq.horizon / 10;
    double a_cur = seq.a(0);
    for (std::size_t n = 0; n < seq.horizon; ++n) {
        const double mu = seq.mu(n);
        const double b = seq.b(n);
        if (!(a_cur >= 0.0) || !(b >= 0.0) || !(mu > 0.0 && mu < 1.0)) {
            throw std::invalid_argument("lemma_weng_check: sequence values out of range");
        }
        rep.mu_partial_sum += mu;
        if (n >= tail_start) {
            const double q = b / mu;
            if (q > rep.b_over_mu_tail_max) rep.b_over_mu_tail_max = q;
            if (a_cur > rep.tail_max) rep.tail_max = a_cur;
        }
        const double a_next = seq.a(n + 1);
        const double rhs = (1.0 - mu) * a_cur + b;
        if (rep.hypothesis_holds && a_next > rhs + 1e-12 * (1.0 + std::fabs(a_cur))) {
            rep.hypothesis_holds = false;
            rep.first_violation = n;
        }
        a_cur = a_next;
    }
    // the horizon index itself belongs to the tail window
    if (a_cur > rep.tail_max) rep.tail_max = a_cur;
    rep.mu_divergence_evidence = rep.mu_partial_sum > 10.0;
    return rep;
}

} // namespace fixpoint
