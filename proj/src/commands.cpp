#include "fixpoint/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "fixpoint/contraction.hpp"
#include "fixpoint/csv.hpp"
#include "fixpoint/dde.hpp"
#include "fixpoint/errors.hpp"
#include "fixpoint/harness.hpp"
#include "fixpoint/problems.hpp"

namespace fixpoint {

namespace {

namespace fs = std::filesystem;

ScalarProblem resolve_scalar(const ProblemSpec& spec) {
    std::optional<ScalarProblem> p;
    if (spec.kind == "linear") {
        if (!spec.delta) throw ConfigError("config: linear problem needs 'delta'");
        p = make_linear_problem(*spec.delta);
    } else {
        p = builtin_scalar_problem(spec.kind);
    }
    if (!p) throw ConfigError("config: unknown scalar problem '" + spec.kind + "'");
    if (spec.x0) {
        if (!p->map.domain.contains(*spec.x0)) {
            throw ConfigError("config: x0 lies outside the problem domain");
        }
        p->x0 = *spec.x0;
    }
    return std::move(*p);
}

DelayProblem resolve_delay(const ProblemSpec& spec) {
    const double b = spec.b.value_or(0.45);
    auto p = builtin_delay_problem(spec.kind, b);
    if (!p) throw ConfigError("config: unknown delay problem '" + spec.kind + "'");
    return std::move(*p);
}

fs::path prepare_output_dir(const RunConfig& cfg) {
    fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    return dir;
}

std::string plot_script(const std::vector<SchemeKind>& kinds, bool has_err) {
    std::string names;
    for (const SchemeKind k : kinds) {
        if (!names.empty()) names += ' ';
        names += scheme_name(k);
    }
    const int ycol = has_err ? 4 : 5;
    std::ostringstream os;
    os << "# per-iteration " << (has_err ? "error" : "residual")
       << " of each scheme, log scale\n"
       << "set datafile separator ','\n"
       << "set logscale y\n"
       << "set xlabel 'n'\n"
       << "set ylabel '" << (has_err ? "||x_n - p||" : "||x_n - T x_n||") << "'\n"
       << "set key outside right\n"
       << "schemes = \"" << names << "\"\n"
       << "plot for [s in schemes] 'compare.csv' using 1:(strcol(2) eq s ? column(" << ycol
       << ") : 1/0) with linespoints title s\n";
    return os.str();
}

std::string iterations_label(const std::optional<std::size_t>& it) {
    return it ? std::to_string(*it) : std::string("not reached");
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
    const ScalarProblem prob = resolve_scalar(cfg.problem);
    const auto report = compare_schemes<double>(cfg.schemes, prob.map, prob.x0, cfg.schedule,
                                                cfg.tol, cfg.max_iter);
    const fs::path dir = prepare_output_dir(cfg);
    atomic_write_file(dir / "compare.csv", render_trace_csv(report.traces));
    const bool has_err = prob.map.fixed_point.has_value();
    atomic_write_file(dir / "compare_plot.gp", plot_script(cfg.schemes, has_err));

    out << "problem: " << prob.name << "\n";
    for (const auto& e : report.entries) {
        out << "  " << scheme_name(e.kind) << ": iterations=" << iterations_label(e.iterations)
            << " stop=" << stop_reason_name(e.stop_reason);
        if (e.final_err) out << " final_err=" << format_float(*e.final_err);
        out << " final_residual=" << format_float(e.final_residual) << "\n";
    }
    out << "ordering:";
    for (std::size_t i = 0; i < report.ordering.size(); ++i) {
        out << (i == 0 ? " " : " < ") << scheme_name(report.ordering[i]);
    }
    out << "\n";
    return exit_ok;
}

int cmd_stability(const RunConfig& cfg, std::ostream& out) {
    const ScalarProblem prob = resolve_scalar(cfg.problem);
    const auto rep = stability_experiment<double>(prob.map, prob.x0, cfg.schedule,
                                                  cfg.perturbation, cfg.horizon);
    std::string csv = "n,z,eps,err\n";
    for (const auto& r : rep.records) {
        csv += std::to_string(r.n);
        csv += ',';
        csv += format_float(r.z);
        csv += ',';
        csv += format_float(r.eps);
        csv += ',';
        csv += format_float(r.err);
        csv += '\n';
    }
    const fs::path dir = prepare_output_dir(cfg);
    atomic_write_file(dir / "stability.csv", csv);

    out << "problem: " << prob.name << "\n"
        << "tail window: last " << (StabilityReport::tail_fraction * 100) << "% (from n="
        << rep.tail_start << ")\n"
        << "tail eps max = " << format_float(rep.tail_eps_max) << "\n"
        << "tail err max = " << format_float(rep.tail_err_max) << "\n"
        << "tail err min = " << format_float(rep.tail_err_min) << "\n"
        << "verdict_forward=" << (rep.verdict_forward ? "true" : "false")
        << " verdict_converse=" << (rep.verdict_converse ? "true" : "false") << "\n";
    return exit_ok;
}

std::string_view condition_status_name(ConditionStatus s) {
    switch (s) {
        case ConditionStatus::verified: return "verified";
        case ConditionStatus::asserted_by_caller: return "asserted-by-caller";
        case ConditionStatus::violated: return "violated";
    }
    return "?";
}

int cmd_dde(const RunConfig& cfg, std::ostream& out) {
    const DelayProblem prob = resolve_delay(cfg.problem);
    const auto sol = solve_dde(prob, cfg.h, cfg.schedule, cfg.tol, cfg.max_iter, cfg.seed);
    const GridFunction ref = method_of_steps_oracle(prob, cfg.h);

    std::string csv = "t,x,x_ref,abs_err\n";
    double sup_err = 0.0;
    for (std::size_t k = 0; k < sol.solution.grid.count; ++k) {
        const double x = sol.solution.values[k];
        const double r = ref.values[k];
        const double e = std::fabs(x - r);
        sup_err = std::max(sup_err, e);
        csv += format_float(sol.solution.grid.node(k));
        csv += ',';
        csv += format_float(x);
        csv += ',';
        csv += format_float(r);
        csv += ',';
        csv += format_float(e);
        csv += '\n';
    }
    std::string cond;
    for (std::size_t i = 0; i < sol.conditions.entries.size(); ++i) {
        const auto& e = sol.conditions.entries[i];
        cond += "C(" + std::to_string(i + 1) + "): ";
        cond += condition_status_name(e.status);
        cond += " evidence=" + format_float(e.evidence) + "\n";
    }
    const fs::path dir = prepare_output_dir(cfg);
    atomic_write_file(dir / "solution.csv", csv);
    atomic_write_file(dir / "conditions.txt", cond);

    out << "C(5): 2δ(b−t0) = " << format_float(sol.conditions.entries[4].evidence)
        << " < 1\n"
        << "sup error vs method-of-steps reference = " << format_float(sup_err) << "\n"
        << "residual = " << format_float(sol.trace.records.back().residual) << "\n";
    if (sol.converged) {
        out << "converged at iteration " << sol.trace.records.back().n << "\n";
        return exit_ok;
    }
    out << "NOT converged within max_iter=" << cfg.max_iter << "\n";
    return exit_no_convergence;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out) {
    std::string csv = "n,new_scheme_bound,picard_mann_bound,bound_ratio\n";
    for (std::size_t n = 0; n <= cfg.n_max; ++n) {
        const BoundInputs inp{cfg.bounds_delta, cfg.schedule, cfg.initial_err, n};
        csv += std::to_string(n);
        csv += ',';
        csv += format_float(new_scheme_bound(inp));
        csv += ',';
        csv += format_float(picard_mann_bound(inp));
        csv += ',';
        csv += format_float(bound_ratio(inp));
        csv += '\n';
    }
    const fs::path dir = prepare_output_dir(cfg);
    atomic_write_file(dir / "bounds.csv", csv);

    const BoundInputs last{cfg.bounds_delta, cfg.schedule, cfg.initial_err, cfg.n_max};
    out << "delta=" << format_float(cfg.bounds_delta) << " initial_err="
        << format_float(cfg.initial_err) << " rows=" << (cfg.n_max + 1) << "\n"
        << "bound_ratio(" << cfg.n_max << ") = " << format_float(bound_ratio(last)) << "\n";
    return exit_ok;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out) {
    const ScalarProblem prob = resolve_scalar(cfg.problem);
    const auto est =
        estimate_weak_contraction<double>(prob.map, cfg.samples, cfg.seed, cfg.l_grid);

    std::string csv = "delta_hat,l_hat,samples,max_violation,seed,certified\n";
    csv += format_float(est.delta_hat);
    csv += ',';
    csv += format_float(est.l_hat);
    csv += ',';
    csv += std::to_string(est.samples);
    csv += ',';
    csv += format_float(est.max_violation);
    csv += ',';
    csv += std::to_string(est.sampler_seed);
    csv += ',';
    csv += est.certified ? "true" : "false";
    csv += '\n';
    const fs::path dir = prepare_output_dir(cfg);
    atomic_write_file(dir / "certify.csv", csv);

    out << "problem: " << prob.name << "\n"
        << "delta_hat=" << format_float(est.delta_hat) << " at L=" << format_float(est.l_hat)
        << " over " << est.samples << " samples (seed " << est.sampler_seed << ")\n"
        << "max_violation=" << format_float(est.max_violation) << "\n"
        << (est.certified ? "certified weak contraction on the sampled region\n"
                          : "NOT certifiable on the sampled region\n");
    return exit_ok;
}

} // namespace

int run_command(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
        case Command::compare: return cmd_compare(cfg, out);
        case Command::stability: return cmd_stability(cfg, out);
        case Command::dde: return cmd_dde(cfg, out);
        case Command::bounds: return cmd_bounds(cfg, out);
        case Command::certify: return cmd_certify(cfg, out);
    }
    throw ConfigError("config: unknown command");
}

int run_command_catching(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        return run_command(cfg, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const HypothesisViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_hypothesis_violation;
    } catch (const DomainViolation& e) {
        err << "error: " << e.what() << "\n";
        return exit_hypothesis_violation;
    } catch (const EvaluationError& e) {
        err << "error: " << e.what() << "\n";
        return exit_hypothesis_violation;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_config_error;
    }
}

} // namespace fixpoint
