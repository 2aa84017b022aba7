// Acceptance gate for the library: twelve criteria, each pinning an
// independently computed value or an identity that must hold across
// randomized inputs.  Prints one PASS/FAIL line per criterion; the exit
// code is the number of failures.  All comparisons are exact — the only
// numeric threshold in this file is the pinned error bound 1/1000.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <exception>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "constellab/approx.hpp"
#include "constellab/fixtures.hpp"
#include "constellab/git.hpp"
#include "constellab/quotient.hpp"
#include "constellab/staircase.hpp"
#include "constellab/theta.hpp"

using namespace constellab;

namespace {

struct CheckFailure {
    std::string message;
};

void require(bool ok, const std::string& message) {
    if (!ok) throw CheckFailure{message};
}

std::set<IrrepLabel> box_window(long lo, long hi) {
    std::set<IrrepLabel> window;
    for (long n = lo; n <= hi; ++n) window.insert(IrrepLabel{{n}});
    return window;
}

Rational evaluate_monomial(const std::vector<Rational>& point, const std::vector<long>& exponents) {
    Rational value = 1;
    for (std::size_t i = 0; i < point.size(); ++i)
        value *= pow(point[i], static_cast<unsigned long>(exponents[i]));
    return value;
}

Rational random_nonzero_rational(std::mt19937_64& rng) {
    const Rational value =
        Rational(1 + static_cast<long>(rng() % 5)) / Rational(1 + static_cast<long>(rng() % 4));
    return rng() % 2 ? value : Rational(-value);
}

// ---------------------------------------------------------------------------
// Criterion 1.  The staircase classifier agrees with an independent
// brute-force oracle on two small cyclic cases: the oracle enumerates
// divisor-closed cell sets over a degree box and tests stability over
// arrow-closed cell subsets, sharing no code with the library's enumerator.

struct CyclicCase {
    long modulus = 0;
    std::array<long, 2> weights{};   // residue added by a step in x and in y
    std::map<long, long> counts;     // residue -> required multiplicity
    std::map<long, Rational> theta;  // residue -> theta value
    std::size_t stable_expected = 0;
};

long cell_residue(const CyclicCase& c, long a, long b) {
    const long r = (a * c.weights[0] + b * c.weights[1]) % c.modulus;
    return r < 0 ? r + c.modulus : r;
}

std::vector<std::vector<std::vector<long>>> oracle_staircases(const CyclicCase& c) {
    long total = 0;
    for (const auto& [residue, count] : c.counts) total += count;
    std::vector<std::pair<long, long>> box;
    for (long a = 0; a < total; ++a)
        for (long b = 0; a + b < total; ++b) box.emplace_back(a, b);
    std::vector<std::vector<std::vector<long>>> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << box.size()); ++mask) {
        if (std::popcount(mask) != static_cast<int>(total)) continue;
        std::set<std::pair<long, long>> cells;
        for (std::size_t i = 0; i < box.size(); ++i)
            if (mask >> i & 1) cells.insert(box[i]);
        bool closed = true;
        std::map<long, long> histogram;
        for (const auto& [a, b] : cells) {
            if (a > 0 && !cells.count({a - 1, b})) closed = false;
            if (b > 0 && !cells.count({a, b - 1})) closed = false;
            ++histogram[cell_residue(c, a, b)];
        }
        if (!closed || histogram != c.counts) continue;
        std::vector<std::vector<long>> listed;
        for (const auto& [a, b] : cells) listed.push_back({a, b});
        std::sort(listed.begin(), listed.end(), graded_lex_less);
        found.push_back(std::move(listed));
    }
    std::sort(found.begin(), found.end());
    return found;
}

bool oracle_stable(const CyclicCase& c, const std::vector<std::vector<long>>& cells) {
    const std::size_t n = cells.size();
    std::map<std::pair<long, long>, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[{cells[i][0], cells[i][1]}] = i;
    for (std::uint64_t sub = 1; sub + 1 < (std::uint64_t{1} << n); ++sub) {
        bool closed = true;
        Rational value = 0;
        for (std::size_t i = 0; i < n && closed; ++i) {
            if (!(sub >> i & 1)) continue;
            const long a = cells[i][0], b = cells[i][1];
            const std::array<std::pair<long, long>, 2> steps{{{a + 1, b}, {a, b + 1}}};
            for (const auto& step : steps) {
                const auto hit = index.find(step);
                if (hit != index.end() && !(sub >> hit->second & 1)) closed = false;
            }
            value += c.theta.at(cell_residue(c, a, b));
        }
        if (closed && !(value > 0)) return false;
    }
    return true;
}

void criterion_monomial_counts() {
    const std::vector<CyclicCase> cases = {
        {2, {1, 1}, {{0, 1}, {1, 1}}, {{0, Rational(-1)}, {1, Rational(1)}}, 2},
        {3,
         {2, 1},
         {{0, 1}, {1, 1}, {2, 1}},
         {{0, Rational(-2)}, {1, Rational(1)}, {2, Rational(1)}},
         3},
    };
    for (const CyclicCase& c : cases) {
        const std::string tag = "order " + std::to_string(c.modulus) + ": ";
        const GroupSpec group = GroupSpec::finite_abelian({c.modulus});
        const ActionSpec action = ActionSpec::make(
            group, {"x", "y"}, {IrrepLabel{{c.weights[0]}}, IrrepLabel{{c.weights[1]}}});
        std::map<IrrepLabel, long> counts;
        std::map<IrrepLabel, Rational> theta_values;
        for (const auto& [residue, count] : c.counts) counts[IrrepLabel{{residue}}] = count;
        for (const auto& [residue, value] : c.theta) theta_values[IrrepLabel{{residue}}] = value;
        const HilbertFunction h = HilbertFunction::from_counts(group, counts);
        const ThetaVector theta = ThetaVector::make(group, theta_values);

        const auto classified = enumerate_monomial_constellations(action, theta, h);
        const auto expected = oracle_staircases(c);
        require(classified.size() == expected.size(), tag + "staircase counts differ");
        std::size_t stable = 0;
        for (std::size_t i = 0; i < classified.size(); ++i) {
            require(classified[i].staircase.cells == expected[i], tag + "cell sets differ");
            require(classified[i].verdict.exactness == Exactness::EXACT,
                    tag + "classification must be exact");
            const bool library_stable = classified[i].verdict.status == Status::STABLE;
            require(library_stable == oracle_stable(c, expected[i]),
                    tag + "stability disagrees on " + to_string(action, Staircase{expected[i]}));
            if (library_stable) ++stable;
        }
        require(stable == c.stable_expected,
                tag + "expected " + std::to_string(c.stable_expected) + " stable, got " +
                    std::to_string(stable));
    }
}

// ---------------------------------------------------------------------------
// Criterion 2.  The worked three-character example: the derived ledger
// (kappa, chi, kappa_F, dim A, integrality scale), the one-step weights on
// the two generator lines, and the verdicts on the free-orbit and the
// nilpotent module, all pinned to hand-computed values.

void criterion_worked_example() {
    const IrrepLabel chi0{{0}}, chi1{{1}}, chi2{{2}};
    const fixtures::Instance orbit = fixtures::z3_free_orbit();
    const HilbertFunction h = orbit.module.hilbert_function();
    const GitParameters params =
        derive_parameters(orbit.theta, h, orbit.window, orbit.kappa_minus);
    require(params.dim_A == 2, "dim A must be 2");
    require(params.kappa_F == Rational(5), "kappa_F must be 5");
    require(params.kappa.at(chi0) == Rational(1) && params.kappa.at(chi1) == Rational(1) &&
                params.kappa.at(chi2) == Rational(3),
            "kappa must be (1, 1, 3)");
    require(params.chi.at(chi0) == Rational(-1) / 2 && params.chi.at(chi1) == Rational(1) / 2,
            "chi must be (-1/2, 1/2)");
    require(params.integrality_scale == 2, "integrality scale must be 2");

    const std::set<IrrepLabel> d_minus(params.d_minus.begin(), params.d_minus.end());
    const QuotientPresentation pres = QuotientPresentation::make(orbit.module, d_minus);
    const GradedSubspace line0{{chi0, Subspace::full(1)}};
    const GradedSubspace line1{{chi1, Subspace::full(1)}};
    require(mu_one_step(pres, params, line0).mu == Rational(4),
            "one-step weight at the trivial-character line must be 4");
    require(mu_one_step(pres, params, line1).mu == Rational(6),
            "one-step weight at the second line must be 6");
    const GitVerdict orbit_verdict = git_verdict(pres, params);
    require(orbit_verdict.status == Status::STABLE &&
                orbit_verdict.exactness == Exactness::EXACT,
            "the free-orbit module must be stable");

    const fixtures::Instance nil = fixtures::z3_nilpotent();
    require(nil.theta == orbit.theta, "both fixtures must share the same theta");
    const GitParameters nil_params =
        derive_parameters(nil.theta, nil.module.hilbert_function(), nil.window, nil.kappa_minus);
    const QuotientPresentation nil_pres = QuotientPresentation::make(nil.module, d_minus);
    require(mu_one_step(nil_pres, nil_params, line1).mu == Rational(-2),
            "one-step weight of the dead-end line must be -2");
    const GitVerdict nil_verdict = git_verdict(nil_pres, nil_params);
    require(nil_verdict.status == Status::UNSTABLE &&
                nil_verdict.exactness == Exactness::EXACT &&
                nil_verdict.witness_mu.has_value() && *nil_verdict.witness_mu == Rational(-2),
            "the nilpotent module must be unstable with minimal weight -2");

    const StabilityVerdict nil_theta =
        theta_verdict_for_module(nil.theta, nil.module, SubmoduleScope::Full);
    const HilbertFunction dead_end = HilbertFunction::from_counts(
        orbit.action.group, {{chi0, 0}, {chi1, 1}, {chi2, 0}});
    require(nil_theta.status == Status::UNSTABLE && nil_theta.witness.has_value() &&
                *nil_theta.witness == dead_end && *nil_theta.witness_value == Rational(-1),
            "the destabilizing submodule must be the dead-end line with value -1");
}

// ---------------------------------------------------------------------------
// Criterion 3.  On 200 randomized admissible instances: the graded and the
// telescoped readings of a filtration weight agree (recomputed here from the
// reported terms), a balanced two-step filtration reproduces the one-step
// weight, and shifting every weight by s adds s * kappa_F.

void criterion_filtration_weights() {
    std::mt19937_64 rng(20260817);
    int processed = 0;
    for (int attempt = 0; attempt < 3000 && processed < 200; ++attempt) {
        const fixtures::RandomInstance ri = fixtures::random_admissible_instance(rng);
        if (ri.parameters.dim_A < 2) continue;  // no two-weight decomposition exists
        ++processed;
        const Filtration f = fixtures::random_filtration(rng, ri.presentation);
        const FiltrationWeight w = mu_filtration(ri.presentation, ri.parameters, f);
        Rational graded = 0;
        for (const auto& [weight, term] : w.graded_terms) graded += term;
        Rational telescoped = Rational(f.pieces.begin()->first) * ri.parameters.kappa_F;
        for (const auto& [weight, term] : w.telescoped_terms) telescoped += term;
        require(graded == w.mu, "graded term sum must equal the reported weight");
        require(telescoped == w.mu, "telescoped term sum must equal the reported weight");

        const fixtures::SplitSubspace split = fixtures::random_split(rng, ri.presentation);
        const long part_dim = graded_total_dim(split.part);
        Filtration two;
        two.pieces[ri.parameters.dim_A - part_dim] = split.part;
        two.pieces[-part_dim] = split.complement;
        const Rational balanced = mu_filtration(ri.presentation, ri.parameters, two).mu;
        require(balanced == mu_one_step(ri.presentation, ri.parameters, split.part).mu,
                "a balanced two-step filtration must reproduce the one-step weight");

        Filtration shifted;
        for (const auto& [weight, piece] : two.pieces) shifted.pieces[weight + 3] = piece;
        require(mu_filtration(ri.presentation, ri.parameters, shifted).mu ==
                    balanced + Rational(3) * ri.parameters.kappa_F,
                "shifting all weights by 3 must add 3 * kappa_F");
    }
    require(processed == 200, "not enough instances with a two-weight decomposition");
}

// ---------------------------------------------------------------------------
// Criterion 4.  Saturation identity: for every saturated proper nonzero
// graded subspace reached from coordinate and random seeds across the whole
// fixture corpus, dim A * (window approximation of the closure) equals the
// one-step weight.  Saturation is idempotent.

void criterion_saturation_identity() {
    std::mt19937_64 rng(404);
    std::size_t checked = 0;
    for (const fixtures::Instance& inst : fixtures::corpus()) {
        const HilbertFunction h = inst.module.hilbert_function();
        const GitParameters params =
            derive_parameters(inst.theta, h, inst.window, inst.kappa_minus);
        const std::set<IrrepLabel> d_minus(params.d_minus.begin(), params.d_minus.end());
        const QuotientPresentation pres = QuotientPresentation::make(inst.module, d_minus);

        std::vector<std::pair<IrrepLabel, long>> dims;
        std::map<IrrepLabel, long> dim_map;
        for (const IrrepLabel& label : pres.generator_labels()) {
            dims.emplace_back(label, inst.module.dim_at(label));
            dim_map[label] = inst.module.dim_at(label);
        }
        std::vector<GradedSubspace> candidates;
        for (CoordinateSubspaceWalker walker(dims); !walker.done(); walker.advance())
            candidates.push_back(walker.current());
        for (int i = 0; i < 20; ++i) candidates.push_back(random_graded_subspace(rng, dim_map));

        for (const GradedSubspace& candidate : candidates) {
            if (graded_total_dim(candidate) == 0) continue;
            const Saturation sat = saturate(pres, candidate);
            require(saturate(pres, sat.saturated).saturated == sat.saturated,
                    inst.name + ": saturation must be idempotent");
            const long sat_dim = graded_total_dim(sat.saturated);
            if (sat_dim == 0 || sat_dim >= params.dim_A) continue;
            const OneStepWeight w = mu_one_step(pres, params, sat.saturated);
            require(Rational(params.dim_A) * theta_tilde(params, h, sat.closure_dims) == w.mu,
                    inst.name + ": dim A * approximation(closure) must equal the one-step weight");
            ++checked;
        }
    }
    require(checked > 0, "no proper nonzero saturated subspace was exercised");
}

// ---------------------------------------------------------------------------
// Criterion 5.  Every derived parameter set is admissible (sum of chi * h
// vanishes, the window approximation vanishes on h itself), and whenever
// theta has zero tails and the window covers everything the module sees,
// the window approximation agrees with theta on every submodule Hilbert
// function.

void criterion_admissibility() {
    std::size_t pointwise = 0;
    for (const fixtures::Instance& inst : fixtures::corpus()) {
        const HilbertFunction h = inst.module.hilbert_function();
        const GitParameters params =
            derive_parameters(inst.theta, h, inst.window, inst.kappa_minus);
        Rational chi_sum = 0;
        for (const auto& [label, value] : params.chi) chi_sum += value * h.value_at(label);
        require(chi_sum == 0, inst.name + ": sum of chi * h must vanish");
        require(theta_tilde(params, h, h) == 0,
                inst.name + ": the window approximation must vanish on h");
        require(pairing(inst.theta, h) == 0, inst.name + ": theta must pair to zero with h");

        if (inst.theta.function().has_tail() || params.S_D != 0) continue;
        const SubmoduleHilbertSet subs =
            enumerate_submodule_hilbert_functions(inst.module, SubmoduleScope::Full);
        const ThetaVector tilde = theta_tilde_vector(params, inst.action.group);
        for (const HilbertFunction& sub : subs.functions) {
            require(theta_tilde(params, h, sub) == pairing(inst.theta, sub),
                    inst.name + ": approximation must equal theta on a submodule");
            require(pairing(tilde, sub) == pairing(inst.theta, sub),
                    inst.name + ": the materialized approximation vector must equal theta");
            ++pointwise;
        }
    }
    require(pointwise > 0, "no zero-tail instance exercised the pointwise agreement");
}

// ---------------------------------------------------------------------------
// Criterion 6.  On the torus fixtures, the window error reports compute the
// same value through the closed tail formula and through the direct
// difference; the asymmetric error at [-2, 2] is 7/72, the window-to-window
// error from [-2, 2] to [-3, 3] is 19/432, and the symmetric fixture has
// error zero on every centered window.

void criterion_error_formulas() {
    const fixtures::TorusApprox asym = fixtures::torus_asymmetric();
    const fixtures::TorusApprox sym = fixtures::torus_symmetric();
    for (long n = 1; n <= 8; ++n) {
        const ThetaErrorReport report =
            error_to_theta(asym.theta, asym.h, asym.h_prime, box_window(-n, n));
        require(report.formula_value == report.direct_difference &&
                    report.value == report.formula_value,
                "asymmetric: formula and direct difference must agree");
        const ThetaErrorReport srep =
            error_to_theta(sym.theta, sym.h, sym.h_prime, box_window(-n, n));
        require(srep.formula_value == srep.direct_difference && srep.value == srep.formula_value,
                "symmetric: formula and direct difference must agree");
        require(srep.value == 0, "symmetric: the error must vanish on centered windows");
    }
    require(error_to_theta(asym.theta, asym.h, asym.h_prime, box_window(-2, 2)).value ==
                Rational(7) / 72,
            "asymmetric error at [-2, 2] must be 7/72");
    const WindowErrorReport between = error_between_windows(
        asym.theta, asym.h, asym.h_prime, box_window(-2, 2), box_window(-3, 3));
    require(between.formula_value == between.direct_difference &&
                between.value == between.formula_value,
            "between-window report must agree with the direct difference");
    require(between.value == Rational(19) / 432,
            "between-window error [-2,2] -> [-3,3] must be 19/432");
}

// ---------------------------------------------------------------------------
// Criterion 7.  The asymmetric window error at [-N, N] follows the closed
// form 2^-(N+1) - 3^-N / 4 for N = 1..8 and first drops below 1/1000 at
// N = 9; the limit verification reports the same crossing.

void criterion_error_limit() {
    const fixtures::TorusApprox asym = fixtures::torus_asymmetric();
    const Rational bound = Rational(1) / 1000;
    const auto error_at = [&](long n) {
        return error_to_theta(asym.theta, asym.h, asym.h_prime, box_window(-n, n)).value;
    };
    for (long n = 1; n <= 8; ++n) {
        const Rational closed_form = pow(Rational(1) / 2, static_cast<unsigned long>(n + 1)) -
                                     pow(Rational(1) / 3, static_cast<unsigned long>(n)) / 4;
        require(error_at(n) == closed_form, "closed form must match at index " + std::to_string(n));
    }
    require(error_at(8) > bound, "the error at index 8 must still exceed 1/1000");
    require(error_at(9) < bound, "the error at index 9 must be below 1/1000");

    const LimitReport limit = verify_limit(asym.theta, asym.h, asym.h_prime, 10, bound);
    require(limit.passed && limit.rows.size() == 10, "the limit verification must pass");
    long first_below = 0;
    for (const LimitRow& row : limit.rows) {
        require(row.error_abs <= row.majorant, "every error must respect its majorant");
        if (first_below == 0 && row.error_abs < bound) first_below = row.index;
    }
    require(first_below == 9, "the first window below the bound must have index 9");
}

// ---------------------------------------------------------------------------
// Criterion 8.  On every multiplicity-free instance (fixtures plus filtered
// random draws, all with exact enumeration): a stable module is generated
// by its components at the negative labels, and the verdict restricted to
// submodules generated there coincides with the full verdict.

void criterion_generation() {
    struct Case {
        std::string name;
        EquivariantModule module;
        ThetaVector theta;
    };
    std::vector<Case> cases;
    for (const fixtures::Instance& inst : fixtures::corpus())
        if (inst.module.multiplicity_free()) cases.push_back({inst.name, inst.module, inst.theta});

    // Random draws, skipping instances where theta vanishes on a component
    // the module actually has: the restricted scope is only guaranteed to
    // agree when theta is nonzero wherever the module lives.
    std::mt19937_64 rng(808);
    int accepted = 0;
    for (int attempt = 0; attempt < 1000 && accepted < 60; ++attempt) {
        fixtures::RandomInstance ri = fixtures::random_multfree_instance(rng);
        bool has_zero_label = false;
        for (const auto& [label, dim] : ri.instance.module.components())
            if (dim > 0 && ri.instance.theta.value_at(label) == 0) has_zero_label = true;
        if (has_zero_label) continue;
        cases.push_back({"random draw " + std::to_string(accepted), ri.instance.module,
                         ri.instance.theta});
        ++accepted;
    }
    require(accepted == 60, "not enough random multiplicity-free instances");

    bool saw_stable = false, saw_unstable = false;
    for (const Case& c : cases) {
        long total_dim = 0;
        for (const auto& [label, dim] : c.module.components()) total_dim += dim;
        require(total_dim <= 12, c.name + ": corpus instances must stay small");

        const StabilityVerdict full =
            theta_verdict_for_module(c.theta, c.module, SubmoduleScope::Full);
        require(full.exactness == Exactness::EXACT,
                c.name + ": multiplicity-free enumeration must be exact");
        const SignPartition signs = sign_partition(c.theta);
        const std::set<IrrepLabel> d_minus(signs.d_minus.begin(), signs.d_minus.end());
        if (full.status == Status::STABLE) {
            require(generated_in_dminus(c.module, d_minus),
                    c.name + ": stable but not generated at the negative labels");
            saw_stable = true;
        }
        if (full.status == Status::UNSTABLE) saw_unstable = true;

        const StabilityVerdict restricted =
            theta_verdict_for_module(c.theta, c.module, SubmoduleScope::DminusGenerated);
        require(restricted.exactness == Exactness::EXACT,
                c.name + ": restricted enumeration must be exact");
        require(restricted.status == full.status,
                c.name + ": restricted scope must reach the same verdict as the full scope");
    }
    require(saw_stable && saw_unstable, "the corpus must exercise both outcomes");
}

// ---------------------------------------------------------------------------
// Criterion 9.  On multiplicity-free instances, the quotient verdict equals
// the verdict of the window approximation vector over generated submodules;
// and every stable instance stays stable under the parameters produced by
// the automatic window choice.

void criterion_quotient_equivalence() {
    struct Case {
        std::string name;
        fixtures::Instance instance;
        QuotientPresentation presentation;
        GitParameters parameters;
    };
    std::vector<Case> cases;
    for (const fixtures::Instance& inst : fixtures::corpus()) {
        if (!inst.module.multiplicity_free()) continue;
        const GitParameters params = derive_parameters(
            inst.theta, inst.module.hilbert_function(), inst.window, inst.kappa_minus);
        const std::set<IrrepLabel> d_minus(params.d_minus.begin(), params.d_minus.end());
        cases.push_back(
            {inst.name, inst, QuotientPresentation::make(inst.module, d_minus), params});
    }
    std::mt19937_64 rng(909);
    for (int i = 0; i < 40; ++i) {
        fixtures::RandomInstance ri = fixtures::random_multfree_instance(rng);
        cases.push_back({"random draw " + std::to_string(i), std::move(ri.instance),
                         std::move(ri.presentation), std::move(ri.parameters)});
    }

    std::size_t rechosen = 0;
    for (const Case& c : cases) {
        const GitVerdict git = git_verdict(c.presentation, c.parameters);
        const ThetaVector tilde = theta_tilde_vector(c.parameters, c.instance.action.group);
        const StabilityVerdict approx_verdict = theta_verdict_for_module(
            tilde, c.instance.module, SubmoduleScope::DminusGenerated);
        require(git.exactness == Exactness::EXACT &&
                    approx_verdict.exactness == Exactness::EXACT,
                c.name + ": multiplicity-free verdicts must be exact");
        require(git.status == approx_verdict.status,
                c.name + ": quotient verdict must match the approximation verdict");

        const StabilityVerdict full =
            theta_verdict_for_module(c.instance.theta, c.instance.module, SubmoduleScope::Full);
        if (full.status != Status::STABLE) continue;
        const HilbertFunction h = c.instance.module.hilbert_function();
        const SubmoduleHilbertSet subs =
            enumerate_submodule_hilbert_functions(c.instance.module, SubmoduleScope::Full);
        std::vector<HilbertFunction> candidates;
        for (const HilbertFunction& sub : subs.functions)
            if (!sub.is_zero() && !(sub == h)) candidates.push_back(sub);
        if (candidates.empty()) continue;  // only trivial submodules: nothing to certify
        const WindowChoice choice =
            choose_window(c.instance.theta, h, candidates, c.instance.kappa_minus);
        const std::set<IrrepLabel> d_minus(choice.parameters.d_minus.begin(),
                                           choice.parameters.d_minus.end());
        const QuotientPresentation fresh = QuotientPresentation::make(c.instance.module, d_minus);
        require(git_verdict(fresh, choice.parameters).status == Status::STABLE,
                c.name + ": a stable instance must stay stable under the chosen window");
        ++rechosen;
    }
    require(rechosen > 0, "no stable instance exercised the automatic window choice");
}

// ---------------------------------------------------------------------------
// Criterion 10.  Gauge moves: twenty random gauges per fixture leave the
// quotient verdict, the stability verdict, and the support point unchanged,
// and transport one-step weights (the weight of the transformed subspace
// under the gauged presentation equals the original weight).

void criterion_gauge_invariance() {
    std::mt19937_64 rng(1010);
    for (const fixtures::Instance& inst : fixtures::corpus()) {
        const HilbertFunction h = inst.module.hilbert_function();
        const GitParameters params =
            derive_parameters(inst.theta, h, inst.window, inst.kappa_minus);
        const std::set<IrrepLabel> d_minus(params.d_minus.begin(), params.d_minus.end());
        const QuotientPresentation pres = QuotientPresentation::make(inst.module, d_minus);
        const GitVerdict base_git = git_verdict(pres, params);
        const StabilityVerdict base_theta =
            theta_verdict_for_module(inst.theta, inst.module, SubmoduleScope::Full);

        const bool has_point = !inst.action.group.has_ray_labels() &&
                               inst.module.dim_at(trivial_label(inst.action.group)) == 1;
        InvariantGenerators gens;
        QuotientPoint base_point;
        if (has_point) {
            gens = invariant_monomial_generators(inst.action,
                                                 default_degree_bound(inst.action));
            base_point = hilbert_chow_point(inst.module, gens);
        }

        for (int g = 0; g < 20; ++g) {
            GaugeElement gauge;
            std::map<IrrepLabel, QMatrix> inverse;
            for (const IrrepLabel& label : pres.generator_labels()) {
                QMatrix block = random_invertible(
                    rng, static_cast<std::size_t>(inst.module.dim_at(label)));
                inverse[label] = *block.inverse();
                gauge[label] = std::move(block);
            }
            const QuotientPresentation gauged = apply_gauge(pres, gauge);

            const GitVerdict moved = git_verdict(gauged, params);
            require(moved.status == base_git.status,
                    inst.name + ": the quotient verdict must not change under a gauge");
            if (base_git.exactness == Exactness::EXACT)
                require(moved.witness_mu == base_git.witness_mu,
                        inst.name + ": the minimal weight must not change under a gauge");

            const StabilityVerdict unchanged =
                theta_verdict_for_module(inst.theta, gauged.module(), SubmoduleScope::Full);
            require(unchanged.status == base_theta.status &&
                        unchanged.witness_value == base_theta.witness_value,
                    inst.name + ": the stability verdict must not change under a gauge");

            if (has_point) {
                const QuotientPoint moved_point = hilbert_chow_point(gauged.module(), gens);
                require(moved_point.coordinates == base_point.coordinates,
                        inst.name + ": the support point must not change under a gauge");
            }

            if (pres.dim_A() < 2) continue;
            const fixtures::SplitSubspace split = fixtures::random_split(rng, pres);
            GradedSubspace transported;
            for (const auto& [label, piece] : split.part)
                transported[label] = piece.image_under(inverse.at(label));
            require(mu_one_step(gauged, params, transported).mu ==
                        mu_one_step(pres, params, split.part).mu,
                    inst.name + ": one-step weights must transport along the gauge");
        }
    }
}

// ---------------------------------------------------------------------------
// Criterion 11.  Support points: the point of the module of functions on a
// free orbit is the orbit point itself — every invariant monomial evaluates
// to its value at the point — for 50 random rational points across two
// groups; the nilpotent fixture maps to the origin; the x-invertible orbit
// fixture maps to the configuration with x^3 = 1 and all else zero.

void criterion_support_points() {
    std::mt19937_64 rng(911);
    for (const ActionSpec& action : {fixtures::z3_action(), fixtures::z2z2_action()}) {
        const InvariantGenerators gens =
            invariant_monomial_generators(action, default_degree_bound(action));
        for (int i = 0; i < 25; ++i) {
            const std::vector<Rational> point{random_nonzero_rational(rng),
                                              random_nonzero_rational(rng)};
            const EquivariantModule m = free_orbit_module(action, point);
            require(hilbert_chow_relations_hold(m, gens),
                    "orbit module: the action scalars must be multiplicative");
            const QuotientPoint image = hilbert_chow_point(m, gens);
            require(image.coordinates.size() == gens.exponents.size(),
                    "orbit module: one coordinate per invariant monomial");
            for (const auto& [exponents, value] : image.coordinates)
                require(value == evaluate_monomial(point, exponents),
                        "orbit module: each invariant monomial must evaluate at the point");
        }
    }

    const fixtures::Instance nil = fixtures::z3_nilpotent();
    const InvariantGenerators z3_gens =
        invariant_monomial_generators(nil.action, default_degree_bound(nil.action));
    for (const auto& [exponents, value] : hilbert_chow_point(nil.module, z3_gens).coordinates)
        require(value == 0, "nilpotent module: the support point must be the origin");

    const fixtures::Instance orbit = fixtures::z3_free_orbit();
    for (const auto& [exponents, value] : hilbert_chow_point(orbit.module, z3_gens).coordinates) {
        const Rational expected = exponents == std::vector<long>{3, 0} ? Rational(1) : Rational(0);
        require(value == expected,
                "x-invertible orbit: x^3 must map to 1 and every other generator to 0");
    }
}

// ---------------------------------------------------------------------------
// Criterion 12.  When the unique negative label carries a one-dimensional
// component, stability is equivalent to the module being generated by that
// line — across staircase modules, orbit modules (including one with a dead
// direction), a nilpotent chain, and an arrowless module.

void criterion_cyclicity() {
    struct Case {
        std::string name;
        ActionSpec action;
        ThetaVector theta;
        EquivariantModule module;
    };
    std::vector<Case> cases;

    const auto point_theta = [](const GroupSpec& group) {
        std::map<IrrepLabel, Rational> values;
        long positive = 0;
        for (const IrrepLabel& label : all_labels(group))
            if (!(label == trivial_label(group))) ++positive;
        for (const IrrepLabel& label : all_labels(group))
            values[label] = label == trivial_label(group) ? Rational(-positive) : Rational(1);
        return ThetaVector::make(group, values);
    };

    for (const ActionSpec& action :
         {fixtures::z2_action(), fixtures::z3_action(), fixtures::z2z2_action()}) {
        const GroupSpec& group = action.group;
        const ThetaVector theta = point_theta(group);
        std::map<IrrepLabel, long> counts;
        for (const IrrepLabel& label : all_labels(group)) counts[label] = 1;
        const HilbertFunction h = HilbertFunction::from_counts(group, counts);
        for (const Staircase& s : enumerate_staircases(action, h))
            cases.push_back({"staircase " + to_string(action, s), action, theta,
                             staircase_module(action, s)});

        std::mt19937_64 rng(1212);
        for (int i = 0; i < 4; ++i) {
            const std::vector<Rational> point{random_nonzero_rational(rng),
                                              random_nonzero_rational(rng)};
            cases.push_back({"orbit module", action, theta, free_orbit_module(action, point)});
        }
    }

    const ActionSpec z3 = fixtures::z3_action();
    const ThetaVector z3_theta = point_theta(z3.group);
    cases.push_back({"x-invertible orbit", z3, z3_theta, fixtures::z3_free_orbit().module});
    cases.push_back({"nilpotent chain", z3, z3_theta, fixtures::z3_nilpotent().module});
    std::map<IrrepLabel, long> flat_dims;
    for (const IrrepLabel& label : all_labels(z3.group)) flat_dims[label] = 1;
    cases.push_back(
        {"arrowless module", z3, z3_theta, EquivariantModule::make(z3, flat_dims, {})});

    const ActionSpec z2z2 = fixtures::z2z2_action();
    cases.push_back({"orbit with a dead direction", z2z2, point_theta(z2z2.group),
                     free_orbit_module(z2z2, {Rational(2), Rational(0)})});

    bool saw_cyclic = false, saw_non_cyclic = false;
    for (const Case& c : cases) {
        const HilbertSchemeModeReport report = hilbert_scheme_mode_check(c.theta, c.module);
        require(report.verdict.exactness == Exactness::EXACT,
                c.name + ": the verdict must be exact");
        require(report.consistent.has_value() && *report.consistent,
                c.name + ": stability and cyclicity must be checked consistently");
        require((report.verdict.status == Status::STABLE) == report.cyclic,
                c.name + ": stability must coincide with cyclicity");
        (report.cyclic ? saw_cyclic : saw_non_cyclic) = true;
    }
    require(saw_cyclic && saw_non_cyclic, "the corpus must exercise both outcomes");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, void (*)()>> criteria = {
        {"stable monomial constellation counts match a brute-force oracle",
         criterion_monomial_counts},
        {"worked three-character example: ledger, one-step weights, verdicts",
         criterion_worked_example},
        {"graded and telescoped weights agree; balanced filtrations match one-step weights",
         criterion_filtration_weights},
        {"on saturated subspaces, dim A times the window approximation equals the weight",
         criterion_saturation_identity},
        {"derived characters are admissible; the approximation is exact on finite support",
         criterion_admissibility},
        {"window error reports match direct differences on the torus fixtures",
         criterion_error_formulas},
        {"the asymmetric window error follows its closed form and crosses 1/1000 at index 9",
         criterion_error_limit},
        {"stable modules are generated at the negative labels; scopes agree",
         criterion_generation},
        {"quotient verdicts match approximation verdicts; stable instances stay stable",
         criterion_quotient_equivalence},
        {"gauge moves preserve weights, verdicts, and support points",
         criterion_gauge_invariance},
        {"support points of orbit modules evaluate the invariant monomials at the point",
         criterion_support_points},
        {"one-dimensional negative component: stability coincides with cyclicity",
         criterion_cyclicity},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto& [name, check] = criteria[i];
        std::string failure;
        try {
            check();
        } catch (const CheckFailure& f) {
            failure = f.message;
        } catch (const std::exception& e) {
            failure = std::string("unexpected exception: ") + e.what();
        }
        if (failure.empty()) {
            std::cout << "PASS  " << (i + 1) << "  " << name << "\n";
        } else {
            std::cout << "FAIL  " << (i + 1) << "  " << name << "\n      " << failure << "\n";
            ++failures;
        }
    }
    std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed\n";
    return failures;
}
