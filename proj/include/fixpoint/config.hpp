#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fixpoint/harness.hpp"
#include "fixpoint/schedule.hpp"
#include "fixpoint/schemes.hpp"

namespace fixpoint {

enum class Command { compare, stability, dde, bounds, certify };

std::string_view command_name(Command c) noexcept;

/// Problem selector: a built-in name, optionally with overrides when given
/// as an inline object ({"kind": "linear", "delta": 0.5, ...}).
struct ProblemSpec {
    std::string kind = "cuberoot";
    std::optional<double> delta;  ///< linear maps
    std::optional<double> x0;
    std::optional<double> b;      ///< delay problems
};

/// One fully validated run: flat keys from a single JSON document. Unknown
/// keys are rejected.
struct RunConfig {
    Command command = Command::compare;
    ProblemSpec problem;
    ScheduleSpec schedule = ScheduleSpec::constant_all(0.25);
    double tol = 1e-12;
    std::size_t max_iter = 100;
    std::size_t horizon = 200;
    double h = 0.01;
    std::uint64_t seed = 42;
    std::string output_dir = ".";

    std::vector<SchemeKind> schemes;   // compare; defaults to all eight
    PerturbationSpec perturbation;     // stability
    double bounds_delta = 0.5;         // bounds
    double initial_err = 1.0;          // bounds
    std::size_t n_max = 20;            // bounds
    std::size_t samples = 10000;       // certify
    std::vector<double> l_grid{0.0};   // certify
};

/// Parses and schema-checks a config document for the given command.
/// Throws ConfigError on unknown keys, malformed values, or a "command" key
/// that contradicts the subcommand.
RunConfig parse_config(const std::string& json_text, Command command);

} // namespace fixpoint
