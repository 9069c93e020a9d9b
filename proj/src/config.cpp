#include "fixpoint/config.hpp"

#include <set>

#include <json.hpp>

#include "fixpoint/errors.hpp"

namespace fixpoint {

using nlohmann::json;

std::string_view command_name(Command c) noexcept {
    switch (c) {
        case Command::compare: return "compare";
        case Command::stability: return "stability";
        case Command::dde: return "dde";
        case Command::bounds: return "bounds";
        case Command::certify: return "certify";
    }
    return "?";
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw ConfigError("config: " + what); }

double as_number(const json& j, const char* key) {
    if (!j.is_number()) fail(std::string(key) + " must be a number");
    return j.get<double>();
}

std::size_t as_count(const json& j, const char* key) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        fail(std::string(key) + " must be a nonnegative integer");
    }
    return j.get<std::size_t>();
}

Schedule parse_one_schedule(const json& j, const char* key) {
    if (j.is_number()) return Schedule::constant(j.get<double>());
    if (!j.is_object()) fail(std::string(key) + " must be a number or an object");
    for (const auto& [k, v] : j.items()) {
        static const std::set<std::string> known{"kind", "value", "values",
                                                 "divergent_sum_attested"};
        if (!known.count(k)) fail("unknown schedule key '" + k + "'");
    }
    const std::string kind = j.value("kind", "constant");
    try {
        if (kind == "constant") return Schedule::constant(as_number(j.at("value"), "value"));
        if (kind == "harmonic") return Schedule::harmonic();
        if (kind == "table") {
            if (!j.contains("values") || !j.at("values").is_array()) {
                fail("table schedule needs a 'values' array");
            }
            std::vector<double> vals;
            for (const auto& v : j.at("values")) vals.push_back(as_number(v, "values"));
            return Schedule::table(std::move(vals), j.value("divergent_sum_attested", false));
        }
    } catch (const json::exception& e) {
        fail(std::string(key) + ": " + e.what());
    } catch (const std::invalid_argument& e) {
        fail(std::string(key) + ": " + e.what());
    }
    fail("unknown schedule kind '" + kind + "'");
}

ScheduleSpec parse_schedule(const json& j) {
    for (const auto& [k, v] : j.items()) {
        if (k != "alpha" && k != "beta" && k != "gamma") {
            fail("unknown schedule key '" + k + "'");
        }
    }
    ScheduleSpec spec = ScheduleSpec::constant_all(0.25);
    if (j.contains("alpha")) spec.alpha = parse_one_schedule(j.at("alpha"), "alpha");
    if (j.contains("beta")) spec.beta = parse_one_schedule(j.at("beta"), "beta");
    if (j.contains("gamma")) spec.gamma = parse_one_schedule(j.at("gamma"), "gamma");
    return spec;
}

ProblemSpec parse_problem(const json& j) {
    ProblemSpec spec;
    if (j.is_string()) {
        spec.kind = j.get<std::string>();
        return spec;
    }
    if (!j.is_object()) fail("problem must be a name or an object");
    for (const auto& [k, v] : j.items()) {
        static const std::set<std::string> known{"kind", "delta", "x0", "b"};
        if (!known.count(k)) fail("unknown problem key '" + k + "'");
    }
    if (!j.contains("kind") || !j.at("kind").is_string()) fail("problem needs a 'kind' string");
    spec.kind = j.at("kind").get<std::string>();
    if (j.contains("delta")) spec.delta = as_number(j.at("delta"), "problem.delta");
    if (j.contains("x0")) spec.x0 = as_number(j.at("x0"), "problem.x0");
    if (j.contains("b")) spec.b = as_number(j.at("b"), "problem.b");
    return spec;
}

PerturbationSpec parse_perturbation(const json& j, std::uint64_t seed) {
    if (!j.is_object()) fail("perturbation must be an object");
    for (const auto& [k, v] : j.items()) {
        static const std::set<std::string> known{"kind", "c", "q"};
        if (!known.count(k)) fail("unknown perturbation key '" + k + "'");
    }
    PerturbationSpec p;
    const std::string kind = j.value("kind", "decaying");
    if (kind == "decaying") {
        p.kind = PerturbationKind::decaying;
    } else if (kind == "constant") {
        p.kind = PerturbationKind::constant;
    } else if (kind == "noise") {
        p.kind = PerturbationKind::noise;
    } else {
        fail("unknown perturbation kind '" + kind + "'");
    }
    if (j.contains("c")) p.c = as_number(j.at("c"), "perturbation.c");
    if (j.contains("q")) p.q = as_number(j.at("q"), "perturbation.q");
    if (!(p.c >= 0.0)) fail("perturbation.c must be >= 0");
    if (p.kind == PerturbationKind::decaying && !(p.q > 1.0)) {
        fail("decaying perturbations need q > 1");
    }
    p.seed = seed;
    return p;
}

const std::set<std::string>& allowed_keys(Command c) {
    static const std::set<std::string> common{"command", "problem", "schedule", "tol",
                                              "max_iter", "seed", "output_dir"};
    static const auto with = [](std::initializer_list<std::string> extra) {
        std::set<std::string> s = common;
        s.insert(extra);
        return s;
    };
    static const std::set<std::string> compare = with({"schemes"});
    static const std::set<std::string> stability = with({"horizon", "perturbation"});
    static const std::set<std::string> dde = with({"h"});
    static const std::set<std::string> bounds = with({"delta", "initial_err", "n_max"});
    static const std::set<std::string> certify = with({"samples", "l_grid"});
    switch (c) {
        case Command::compare: return compare;
        case Command::stability: return stability;
        case Command::dde: return dde;
        case Command::bounds: return bounds;
        case Command::certify: return certify;
    }
    return common;
}

} // namespace

RunConfig parse_config(const std::string& json_text, Command command) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("top level must be an object");

    const auto& allowed = allowed_keys(command);
    for (const auto& [k, v] : doc.items()) {
        if (!allowed.count(k)) {
            fail("unknown key '" + k + "' for command '" + std::string(command_name(command)) +
                 "'");
        }
    }

    RunConfig cfg;
    cfg.command = command;
    if (doc.contains("command")) {
        if (!doc.at("command").is_string() ||
            doc.at("command").get<std::string>() != command_name(command)) {
            fail("'command' disagrees with the invoked subcommand");
        }
    }
    if (doc.contains("problem")) cfg.problem = parse_problem(doc.at("problem"));
    if (doc.contains("schedule")) cfg.schedule = parse_schedule(doc.at("schedule"));
    if (doc.contains("tol")) cfg.tol = as_number(doc.at("tol"), "tol");
    if (doc.contains("max_iter")) cfg.max_iter = as_count(doc.at("max_iter"), "max_iter");
    if (doc.contains("horizon")) cfg.horizon = as_count(doc.at("horizon"), "horizon");
    if (doc.contains("h")) cfg.h = as_number(doc.at("h"), "h");
    if (doc.contains("seed")) cfg.seed = as_count(doc.at("seed"), "seed");
    if (doc.contains("output_dir")) {
        if (!doc.at("output_dir").is_string()) fail("output_dir must be a string");
        cfg.output_dir = doc.at("output_dir").get<std::string>();
    }
    if (!(cfg.tol > 0.0)) fail("tol must be positive");
    if (cfg.max_iter < 1) fail("max_iter must be >= 1");

    switch (command) {
        case Command::compare: {
            if (doc.contains("schemes")) {
                if (!doc.at("schemes").is_array() || doc.at("schemes").empty()) {
                    fail("'schemes' must be a nonempty array of scheme names");
                }
                for (const auto& s : doc.at("schemes")) {
                    if (!s.is_string()) fail("'schemes' entries must be strings");
                    const auto kind = scheme_from_name(s.get<std::string>());
                    if (!kind) fail("unknown scheme '" + s.get<std::string>() + "'");
                    cfg.schemes.push_back(*kind);
                }
            } else {
                cfg.schemes.assign(all_schemes.begin(), all_schemes.end());
            }
            break;
        }
        case Command::stability: {
            if (cfg.horizon < 20) fail("horizon must be >= 20");
            if (doc.contains("perturbation")) {
                cfg.perturbation = parse_perturbation(doc.at("perturbation"), cfg.seed);
            } else {
                cfg.perturbation = PerturbationSpec{PerturbationKind::decaying, 0.1, 2.0,
                                                    cfg.seed};
            }
            break;
        }
        case Command::dde: {
            if (!(cfg.h > 0.0)) fail("h must be positive");
            break;
        }
        case Command::bounds: {
            if (doc.contains("delta")) cfg.bounds_delta = as_number(doc.at("delta"), "delta");
            if (doc.contains("initial_err")) {
                cfg.initial_err = as_number(doc.at("initial_err"), "initial_err");
            }
            if (doc.contains("n_max")) cfg.n_max = as_count(doc.at("n_max"), "n_max");
            if (!(cfg.bounds_delta > 0.0 && cfg.bounds_delta < 1.0)) {
                fail("delta must lie in (0,1)");
            }
            if (!(cfg.initial_err >= 0.0)) fail("initial_err must be >= 0");
            break;
        }
        case Command::certify: {
            if (doc.contains("samples")) cfg.samples = as_count(doc.at("samples"), "samples");
            if (cfg.samples < 2) fail("samples must be >= 2");
            if (doc.contains("l_grid")) {
                if (!doc.at("l_grid").is_array() || doc.at("l_grid").empty()) {
                    fail("'l_grid' must be a nonempty array");
                }
                cfg.l_grid.clear();
                for (const auto& v : doc.at("l_grid")) {
                    const double l = as_number(v, "l_grid");
                    if (!(l >= 0.0)) fail("l_grid entries must be >= 0");
                    cfg.l_grid.push_back(l);
                }
            }
            break;
        }
    }
    return cfg;
}

} // namespace fixpoint
