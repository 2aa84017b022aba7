#include "constellab/runner.hpp"

#include <algorithm>
#include <chrono>
#include <ostream>

#include "constellab/problem.hpp"
#include "constellab/report.hpp"
#include "constellab/selftest.hpp"

namespace constellab {
namespace {

const char* kSchema = "constellation-lab/1";

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {
        "check",        "git-check",   "derive-params", "approx",
        "choose-window", "hilbert-chow", "enumerate",    "selftest",
    };
    return names;
}

long parse_long_flag(const std::string& flag, const std::string& value) {
    try {
        std::size_t used = 0;
        const long parsed = std::stol(value, &used);
        if (used == value.size()) return parsed;
    } catch (const std::exception&) {
    }
    throw InputError(flag + " expects an integer, got '" + value + "'");
}

/// [task] options with the command-line overrides applied.
TaskOptions effective_task(const ProblemFile& problem, const CliOptions& opt) {
    TaskOptions task = problem.task;
    if (opt.seed) task.seed = *opt.seed;
    if (opt.samples) task.samples = *opt.samples;
    if (opt.cap) task.cap = *opt.cap;
    if (opt.bound) task.bound = *opt.bound;
    return task;
}

EnumerationOptions enumeration_options(const TaskOptions& task) {
    EnumerationOptions options;
    options.seed = task.seed;
    options.random_samples = task.samples;
    options.cap = task.cap;
    return options;
}

const char* scope_name(SubmoduleScope scope) {
    return scope == SubmoduleScope::Full ? "full" : "dminus";
}

/// Hilbert function for tasks that accept either an explicit [hilbert]
/// section or a [module] to read the dimensions from.
HilbertFunction hilbert_of(const ProblemFile& problem) {
    if (problem.hilbert) return *problem.hilbert;
    if (problem.module) return problem.module->hilbert_function();
    throw InputError("this task needs a [hilbert] section (or a [module] to take it from)");
}

/// When both a [hilbert] section and a [module] are given they must agree.
void check_hilbert_matches_module(const ProblemFile& problem) {
    if (!problem.hilbert || !problem.module) return;
    const HilbertFunction from_module = problem.module->hilbert_function();
    if (!leq_pointwise(*problem.hilbert, from_module) ||
        !leq_pointwise(from_module, *problem.hilbert))
        throw InputError("the [hilbert] section disagrees with the module's dimensions");
}

/// Derivation window: --window N picks the N-th growth window; otherwise an
/// explicit [params] window wins; otherwise the first usable growth window.
std::set<IrrepLabel> resolve_window(const ProblemFile& problem, const CliOptions& opt,
                                    const ThetaVector& theta, const HilbertFunction& h,
                                    std::optional<long>& index_out) {
    if (opt.window_index) {
        index_out = *opt.window_index;
        return growth_window(theta, h, *opt.window_index);
    }
    if (problem.params_window) {
        index_out.reset();
        return *problem.params_window;
    }
    const long first = first_usable_window_index(theta, h);
    index_out = first;
    return growth_window(theta, h, first);
}

Json window_json(const std::set<IrrepLabel>& window, const std::optional<long>& index) {
    Json out;
    out["labels"] = to_json(window);
    out["index"] = index ? Json(*index) : Json();
    return out;
}

Json error_report_json(const Rational& value, const Rational& formula,
                       const Rational& direct) {
    Json out;
    out["value"] = to_json(value);
    out["formula_value"] = to_json(formula);
    out["direct_difference"] = to_json(direct);
    return out;
}

/// One handler per subcommand; each returns the task echo and the result
/// body, assembled into the report envelope by run_cli.
struct SubReport {
    Json task;
    Json result;
};

SubReport run_check(const ProblemFile& problem, const CliOptions& opt) {
    const TaskOptions task = effective_task(problem, opt);
    const ThetaVector& theta = problem.need_theta();
    SubReport report;
    report.task["subcommand"] = "check";
    report.task["scope"] = scope_name(task.scope);
    report.task["seed"] = task.seed;
    report.task["samples"] = task.samples;
    report.task["cap"] = task.cap;

    if (problem.module) {
        check_hilbert_matches_module(problem);
        const StabilityVerdict verdict = theta_verdict_for_module(
            theta, *problem.module, task.scope, enumeration_options(task));
        report.result["mode"] = "module";
        report.result["hilbert"] = to_json(problem.module->hilbert_function());
        report.result["verdict"] = to_json(verdict);
        return report;
    }

    // No module: quantify over an explicit list of sub-Hilbert functions.
    if (problem.sub_hilberts.empty())
        throw InputError("check needs a [module] section or [subh <name>] sections");
    const HilbertFunction& h = problem.need_hilbert();
    SubmoduleHilbertSet subs;
    for (const auto& [name, sub] : problem.sub_hilberts) subs.functions.push_back(sub);
    std::sort(subs.functions.begin(), subs.functions.end());
    subs.functions.erase(std::unique(subs.functions.begin(), subs.functions.end()),
                         subs.functions.end());
    subs.exactness = task.subh_complete ? Exactness::EXACT : Exactness::SAMPLED;
    subs.candidates_enumerated = subs.functions.size();
    report.result["mode"] = "listed";
    report.result["hilbert"] = to_json(h);
    report.result["verdict"] = to_json(theta_verdict(theta, h, subs));
    return report;
}

SubReport run_git_check(const ProblemFile& problem, const CliOptions& opt) {
    const TaskOptions task = effective_task(problem, opt);
    const ThetaVector& theta = problem.need_theta();
    const EquivariantModule& module = problem.need_module();
    check_hilbert_matches_module(problem);
    const HilbertFunction h = module.hilbert_function();

    std::optional<long> index;
    const std::set<IrrepLabel> window = resolve_window(problem, opt, theta, h, index);
    const GitParameters params = derive_parameters(theta, h, window, problem.kappa_minus);
    for (const auto& [label, frame] : problem.frames)
        if (!std::count(params.d_minus.begin(), params.d_minus.end(), label))
            throw InputError("frame at '" + to_string(label) +
                             "' is outside the negative labels of theta");
    const std::set<IrrepLabel> d_minus(params.d_minus.begin(), params.d_minus.end());
    const QuotientPresentation p = QuotientPresentation::make(module, d_minus, problem.frames);
    const GitVerdict verdict = git_verdict(p, params, enumeration_options(task));

    SubReport report;
    report.task["subcommand"] = "git-check";
    report.task["seed"] = task.seed;
    report.task["samples"] = task.samples;
    report.task["cap"] = task.cap;
    report.result["window"] = window_json(window, index);
    report.result["parameters"] = to_json(params);
    report.result["theta_tilde"] = to_json(theta_tilde_vector(params, theta.group()));
    report.result["generated_in_dminus"] = p.generated_in_dminus_flag();
    report.result["verdict"] = to_json(verdict);
    return report;
}

SubReport run_derive_params(const ProblemFile& problem, const CliOptions& opt) {
    const ThetaVector& theta = problem.need_theta();
    const HilbertFunction h = hilbert_of(problem);
    check_hilbert_matches_module(problem);

    std::optional<long> index;
    const std::set<IrrepLabel> window = resolve_window(problem, opt, theta, h, index);
    const GitParameters params = derive_parameters(theta, h, window, problem.kappa_minus);

    SubReport report;
    report.task["subcommand"] = "derive-params";
    report.result["window"] = window_json(window, index);
    report.result["parameters"] = to_json(params);
    report.result["theta_tilde"] = to_json(theta_tilde_vector(params, theta.group()));
    return report;
}

SubReport run_approx(const ProblemFile& problem, const CliOptions& opt) {
    const TaskOptions task = effective_task(problem, opt);
    const ThetaVector& theta = problem.need_theta();
    const HilbertFunction h = hilbert_of(problem);
    check_hilbert_matches_module(problem);
    if (!task.hprime)
        throw InputError("approx needs 'hprime = <name>' in [task] naming a [subh] section");
    const HilbertFunction& h_prime = problem.need_subh(*task.hprime);

    const long base = opt.window_index ? *opt.window_index
                                       : first_usable_window_index(theta, h);
    const std::set<IrrepLabel> window = growth_window(theta, h, base);
    const std::set<IrrepLabel> next = growth_window(theta, h, base + 1);
    const ThetaErrorReport to_theta = error_to_theta(theta, h, h_prime, window);
    const WindowErrorReport between = error_between_windows(theta, h, h_prime, window, next);
    const long max_index = std::max(task.max_index, base);
    const Rational bound = task.bound ? *task.bound : Rational(1) / 1000;
    const LimitReport limit = verify_limit(theta, h, h_prime, max_index, bound);

    SubReport report;
    report.task["subcommand"] = "approx";
    report.task["hprime"] = *task.hprime;
    report.task["max_index"] = max_index;
    report.task["bound"] = to_json(bound);
    report.result["window"] = window_json(window, base);
    report.result["error_to_theta"] =
        error_report_json(to_theta.value, to_theta.formula_value, to_theta.direct_difference);
    report.result["error_to_next_window"] =
        error_report_json(between.value, between.formula_value, between.direct_difference);
    report.result["limit"] = to_json(limit);
    return report;
}

SubReport run_choose_window(const ProblemFile& problem, const CliOptions& opt) {
    const ProblemFile& p = problem;
    const ThetaVector& theta = p.need_theta();
    const HilbertFunction h = hilbert_of(p);
    const TaskOptions task = effective_task(problem, opt);
    if (task.candidates.empty())
        throw InputError(
            "choose-window needs 'candidates = <name>[;<name>...]' in [task] naming [subh] "
            "sections");
    std::vector<HilbertFunction> candidates;
    for (const std::string& name : task.candidates) candidates.push_back(p.need_subh(name));

    const WindowChoice choice = choose_window(theta, h, candidates, p.kappa_minus);

    SubReport report;
    report.task["subcommand"] = "choose-window";
    report.task["candidates"] = task.candidates;
    report.result["choice"] = to_json(choice);
    return report;
}

SubReport run_hilbert_chow(const ProblemFile& problem, const CliOptions& opt) {
    const TaskOptions task = effective_task(problem, opt);
    std::optional<EquivariantModule> module = problem.module;
    if (!module) {
        if (!task.point)
            throw InputError(
                "hilbert-chow needs a [module] section or 'point = ...' in [task] for a free "
                "orbit");
        module = free_orbit_module(problem.need_action(), *task.point);
    }
    const ActionSpec& action = module->action();
    const long bound =
        task.degree_bound > 0 ? task.degree_bound : default_degree_bound(action);
    const InvariantGenerators gens = invariant_monomial_generators(action, bound);
    const QuotientPoint point = hilbert_chow_point(*module, gens);

    SubReport report;
    report.task["subcommand"] = "hilbert-chow";
    report.task["degree_bound"] = bound;
    report.result["generators"] = to_json(action, gens);
    report.result["point"] = to_json(action, point);
    report.result["relations_hold"] = hilbert_chow_relations_hold(*module, gens);
    return report;
}

SubReport run_enumerate(const ProblemFile& problem, const CliOptions& opt) {
    const TaskOptions task = effective_task(problem, opt);
    const ActionSpec& action = problem.need_action();
    const ThetaVector& theta = problem.need_theta();
    const HilbertFunction& h = problem.need_hilbert();
    const EnumerationOptions options = enumeration_options(task);
    const std::vector<ClassifiedStaircase> classified =
        enumerate_monomial_constellations(action, theta, h, options);

    // GIT classification rides along when parameters can be derived; the
    // presentation only makes sense for modules generated at the negative
    // labels, so others report null there.
    std::optional<GitParameters> params;
    std::string params_error;
    if (!classified.empty()) {
        try {
            std::optional<long> index;
            const std::set<IrrepLabel> window =
                resolve_window(problem, opt, theta, h, index);
            params = derive_parameters(theta, h, window, problem.kappa_minus);
        } catch (const InputError& e) {
            params_error = e.what();
        }
    }

    Json entries = Json::array();
    std::map<std::string, long> status_counts;
    for (const ClassifiedStaircase& entry : classified) {
        ++status_counts[to_string(entry.verdict.status)];
        Json item;
        item["cells"] = entry.staircase.cells;
        item["monomials"] = to_string(action, entry.staircase);
        item["theta"] = to_json(entry.verdict);
        item["git"] = Json();
        if (params) {
            const EquivariantModule module = staircase_module(action, entry.staircase);
            const std::set<IrrepLabel> d_minus(params->d_minus.begin(), params->d_minus.end());
            if (generated_in_dminus(module, d_minus)) {
                const auto p = QuotientPresentation::make(module, d_minus);
                item["git"] = to_json(git_verdict(p, *params, options));
            }
        }
        entries.push_back(std::move(item));
    }

    SubReport report;
    report.task["subcommand"] = "enumerate";
    report.task["seed"] = task.seed;
    report.task["samples"] = task.samples;
    report.task["cap"] = task.cap;
    report.result["count"] = classified.size();
    report.result["status_counts"] = status_counts;
    report.result["parameters"] = params ? to_json(*params) : Json();
    if (!params_error.empty()) report.result["parameters_skipped"] = params_error;
    report.result["entries"] = std::move(entries);
    return report;
}

SubReport run_selftest_command() {
    const std::vector<SelftestResult> results = run_selftests();
    Json suites = Json::array();
    std::size_t checks = 0;
    std::size_t failed = 0;
    for (const SelftestResult& result : results) {
        checks += result.checks;
        failed += result.failures.size();
        Json suite;
        suite["suite"] = result.suite;
        suite["checks"] = result.checks;
        suite["failures"] = result.failures;
        suites.push_back(std::move(suite));
    }
    SubReport report;
    report.task["subcommand"] = "selftest";
    report.result["suites"] = std::move(suites);
    report.result["checks"] = checks;
    report.result["failed"] = failed;
    report.result["passed"] = failed == 0;
    return report;
}

SubReport dispatch(const CliOptions& opt) {
    if (opt.subcommand == "selftest") {
        if (opt.input_path) throw InputError("selftest takes no --input");
        return run_selftest_command();
    }
    if (!opt.input_path)
        throw InputError(opt.subcommand + " needs --input <problem file>");
    const ProblemFile problem = parse_problem_file(*opt.input_path);
    if (opt.subcommand == "check") return run_check(problem, opt);
    if (opt.subcommand == "git-check") return run_git_check(problem, opt);
    if (opt.subcommand == "derive-params") return run_derive_params(problem, opt);
    if (opt.subcommand == "approx") return run_approx(problem, opt);
    if (opt.subcommand == "choose-window") return run_choose_window(problem, opt);
    if (opt.subcommand == "hilbert-chow") return run_hilbert_chow(problem, opt);
    if (opt.subcommand == "enumerate") return run_enumerate(problem, opt);
    throw InternalError("subcommand '" + opt.subcommand + "' passed validation unhandled");
}

}  // namespace

CliOptions parse_cli(const std::vector<std::string>& args) {
    CliOptions opt;
    std::size_t i = 0;
    const auto need_value = [&](const std::string& flag) -> const std::string& {
        if (i + 1 >= args.size()) throw InputError(flag + " expects a value");
        return args[++i];
    };
    for (; i < args.size(); ++i) {
        const std::string& arg = args[i];
        if (arg == "--help" || arg == "-h" || arg == "help") {
            opt.help = true;
        } else if (arg == "--input" || arg == "-i") {
            opt.input_path = need_value(arg);
        } else if (arg == "--window") {
            opt.window_index = parse_long_flag(arg, need_value(arg));
        } else if (arg == "--seed") {
            const long seed = parse_long_flag(arg, need_value(arg));
            if (seed < 0) throw InputError("--seed expects a non-negative integer");
            opt.seed = static_cast<std::uint64_t>(seed);
        } else if (arg == "--bound") {
            opt.bound = parse_rational(need_value(arg));
        } else if (arg == "--cap") {
            const long cap = parse_long_flag(arg, need_value(arg));
            if (cap < 1) throw InputError("--cap expects a positive integer");
            opt.cap = static_cast<std::size_t>(cap);
        } else if (arg == "--samples") {
            const long samples = parse_long_flag(arg, need_value(arg));
            if (samples < 0) throw InputError("--samples expects a non-negative integer");
            opt.samples = static_cast<std::size_t>(samples);
        } else if (arg == "--timing") {
            opt.timing = true;
        } else if (!arg.empty() && arg[0] == '-') {
            throw InputError("unknown flag '" + arg + "' (see --help)");
        } else if (opt.subcommand.empty()) {
            opt.subcommand = arg;
        } else {
            throw InputError("unexpected argument '" + arg + "'");
        }
    }
    if (opt.help) return opt;
    if (opt.subcommand.empty())
        throw InputError("missing subcommand (see --help)");
    const auto& names = subcommands();
    if (std::find(names.begin(), names.end(), opt.subcommand) == names.end())
        throw InputError("unknown subcommand '" + opt.subcommand + "' (see --help)");
    return opt;
}

std::string usage_text() {
    std::string text =
        "constellation-lab — exact stability checks for equivariant modules\n"
        "\n"
        "usage: constellation-lab <subcommand> [flags]\n"
        "\n"
        "subcommands:\n"
        "  check         theta-stability verdict for a module (or a listed\n"
        "                family of sub-Hilbert functions)\n"
        "  git-check     one-parameter-subgroup weight verdict for a module\n"
        "                presentation\n"
        "  derive-params Grassmannian twists and character from (theta, h)\n"
        "                on a window\n"
        "  approx        window-approximation error reports and the limit\n"
        "                table\n"
        "  choose-window first window whose tail majorant certifies the\n"
        "                candidates\n"
        "  hilbert-chow  invariant generators and the support point of a\n"
        "                module\n"
        "  enumerate     monomial constellations for (action, h), classified\n"
        "  selftest      run every built-in invariant suite\n"
        "\n"
        "flags:\n"
        "  --input FILE  problem file (sectioned key-value text)\n"
        "  --window N    use the N-th growth window\n"
        "  --seed S      seed for sampled enumeration (default 0)\n"
        "  --samples N   random subspace samples per component set\n"
        "  --cap K       hard bound on enumerated candidates\n"
        "  --bound p/q   error threshold for limit checks (default 1/1000)\n"
        "  --timing      report wall-clock milliseconds instead of 0\n"
        "  --help        this text\n"
        "\n"
        "Reports are canonical JSON on stdout (exact rationals as \"p/q\"\n"
        "strings); diagnostics go to stderr.  Exit codes: 0 = computed\n"
        "(whatever the verdict), 2 = input error, 3 = internal error.\n";
    return text;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const CliOptions opt = parse_cli(args);
        if (opt.help) {
            out << usage_text();
            return 0;
        }
        const auto started = std::chrono::steady_clock::now();
        const SubReport sub = dispatch(opt);
        Json report;
        report["schema"] = kSchema;
        report["task"] = sub.task;
        report["result"] = sub.result;
        // 0 unless asked: equal runs must produce equal bytes.
        report["timing_ms"] = 0;
        if (opt.timing) {
            const auto elapsed = std::chrono::steady_clock::now() - started;
            report["timing_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        }
        out << render_report(report);
        if (opt.subcommand == "selftest" && !report["result"]["passed"].get<bool>()) {
            for (const Json& suite : report["result"]["suites"])
                for (const Json& failure : suite["failures"])
                    err << "selftest: " << suite["suite"].get<std::string>() << ": "
                        << failure.get<std::string>() << "\n";
            return 3;
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace constellab
