#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "constellab/equivariant.hpp"

namespace constellab {

/// Options of the [task] section.  Command-line flags may override the
/// seed, cap, bound and window index after parsing.
struct TaskOptions {
    long degree_bound = 0;  // 0 = derive from the action (reported either way)
    bool subh_complete = false;  // the [subh] blocks list every submodule
    std::vector<std::string> candidates;  // [subh] names fed to choose-window
    std::optional<std::string> hprime;    // [subh] name for error reports
    std::uint64_t seed = 0;
    std::size_t samples = 64;
    std::size_t cap = std::size_t{1} << 20;
    long max_index = 8;                // last growth-window index for limits
    std::optional<Rational> bound;     // error threshold for limit checks
    std::optional<std::vector<Rational>> point;  // orbit point, one per variable
    SubmoduleScope scope = SubmoduleScope::DminusGenerated;

    bool operator==(const TaskOptions&) const = default;
};

/// A parsed problem file, assembled into library objects.  Sections may
/// appear in any order; each appears at most once ([subh NAME] once per
/// name).  Every entry is validated eagerly with line-anchored messages.
struct ProblemFile {
    std::optional<GroupSpec> group;
    std::optional<ActionSpec> action;
    std::optional<ThetaVector> theta;
    std::optional<HilbertFunction> hilbert;
    std::map<std::string, HilbertFunction> sub_hilberts;
    std::optional<EquivariantModule> module;
    std::map<IrrepLabel, QMatrix> frames;       // [module] frame lines
    std::optional<std::set<IrrepLabel>> params_window;
    std::map<IrrepLabel, Rational> kappa_minus;  // [params] kappa lines
    TaskOptions task;

    // Demand a section, with a uniform "add the section" error otherwise.
    const GroupSpec& need_group() const;
    const ActionSpec& need_action() const;
    const ThetaVector& need_theta() const;
    const HilbertFunction& need_hilbert() const;
    const EquivariantModule& need_module() const;
    const HilbertFunction& need_subh(const std::string& name) const;

    bool operator==(const ProblemFile&) const = default;
};

/// Parse problem text; `origin` names the source in diagnostics
/// ("fixture.problem:12: ...").
ProblemFile parse_problem_text(const std::string& text, const std::string& origin);
ProblemFile parse_problem_file(const std::string& path);

/// Canonical text form of a problem; parsing it reproduces the same
/// ProblemFile (sections in fixed order, labels sorted, tails explicit).
std::string print_problem(const ProblemFile& problem);

}  // namespace constellab
