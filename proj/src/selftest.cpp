#include "constellab/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "constellab/approx.hpp"
#include "constellab/fixtures.hpp"
#include "constellab/problem.hpp"
#include "constellab/quotient.hpp"
#include "constellab/staircase.hpp"

namespace constellab {
namespace {

/// Collects pass/fail outcomes for one suite.
struct Checker {
    SelftestResult result;

    explicit Checker(std::string suite) { result.suite = std::move(suite); }

    void check(bool ok, const std::string& what) {
        ++result.checks;
        if (!ok) result.failures.push_back(what);
    }

    template <typename A, typename B>
    void equal(const A& got, const B& want, const std::string& what) {
        check(got == want, what);
    }

    template <typename F>
    void rejects(F&& f, const std::string& what) {
        ++result.checks;
        try {
            f();
            result.failures.push_back(what + ": accepted invalid input");
        } catch (const InputError&) {
        }
    }
};

/// Hilbert function over exactly the module's component labels (explicit
/// zeros), matching the window produced by submodule enumeration.
HilbertFunction counts_over_module(const EquivariantModule& m, std::map<IrrepLabel, long> counts) {
    for (const auto& [label, dim] : m.components()) counts.emplace(label, 0);
    return HilbertFunction::from_counts(m.group(), counts);
}

Rational q(const std::string& text) { return parse_rational(text); }

SelftestResult rational_suite() {
    Checker c("rational");
    c.check(to_string(q("3/6")) == "1/2", "3/6 reduces to 1/2");
    c.check(to_string(q("-4/2")) == "-2", "-4/2 reduces to -2");
    c.check(to_string(q("0/5")) == "0", "0/5 reduces to 0");
    c.equal(pow(q("1/2"), 3), q("1/8"), "(1/2)^3 = 1/8");
    c.equal(pow(q("-2/3"), 2), q("4/9"), "(-2/3)^2 = 4/9");
    c.equal(abs(q("-7/4")), q("7/4"), "|-7/4| = 7/4");
    c.check(is_integer(q("6/3")) && !is_integer(q("5/3")), "integrality detection");
    const std::vector<Rational> values = {q("1/2"), q("1/3"), q("5")};
    c.check(common_denominator(values) == 6, "lcm of denominators of 1/2, 1/3, 5 is 6");
    c.rejects([] { parse_rational("1/0"); }, "zero denominator");
    c.rejects([] { parse_rational("two"); }, "non-numeric rational");
    return c.result;
}

SelftestResult group_suite() {
    Checker c("group");
    const GroupSpec z6 = GroupSpec::finite_abelian({6});
    c.equal(all_labels(z6).size(), std::size_t{6}, "Z/6 has 6 characters");
    const GroupSpec z2z2 = GroupSpec::finite_abelian({2, 2});
    c.equal(all_labels(z2z2).size(), std::size_t{4}, "Z/2 x Z/2 has 4 characters");
    c.equal(reduce_label(z6, IrrepLabel{8}), IrrepLabel{2}, "8 = 2 mod 6");
    c.equal(add_labels(z6, IrrepLabel{4}, IrrepLabel{5}), IrrepLabel{3}, "4 + 5 = 3 mod 6");
    c.equal(dual_label(z6, IrrepLabel{2}), IrrepLabel{4}, "dual of 2 is 4 mod 6");

    const GroupSpec sl2 = GroupSpec::sl2();
    c.equal(irrep_dim(sl2, IrrepLabel{3}), 4L, "SL2 irrep V3 has dimension 4");
    const RepDecomp square = tensor(sl2, IrrepLabel{1}, IrrepLabel{1});
    RepDecomp expected_square;
    expected_square[IrrepLabel{0}] = 1;
    expected_square[IrrepLabel{2}] = 1;
    c.equal(square, expected_square, "V1 (x) V1 = V0 + V2");
    RepDecomp v1;
    v1[IrrepLabel{1}] = 1;
    RepDecomp cube = decompose_sym_power(sl2, v1, 3);
    RepDecomp expected_cube;
    expected_cube[IrrepLabel{3}] = 1;
    c.equal(cube, expected_cube, "Sym^3 V1 = V3");
    RepDecomp doubled;
    doubled[IrrepLabel{1}] = 2;
    RepDecomp sym2 = decompose_sym_power(sl2, doubled, 2);
    RepDecomp expected_sym2;
    expected_sym2[IrrepLabel{0}] = 1;
    expected_sym2[IrrepLabel{2}] = 3;
    c.equal(sym2, expected_sym2, "Sym^2 (V1 + V1) = V0 + 3 V2");
    c.equal(total_dim(sl2, sym2), 10L, "Sym^2 of a 4-dim space has dimension 10");
    return c.result;
}

SelftestResult qmatrix_suite() {
    Checker c("qmatrix");
    const QMatrix a = QMatrix::from_rows({{q("1"), q("2")}, {q("3"), q("4")}});
    c.equal(a.rank(), std::size_t{2}, "[[1,2],[3,4]] has rank 2");
    const auto inv = a.inverse();
    c.check(inv.has_value(), "[[1,2],[3,4]] is invertible");
    if (inv) c.check((a * *inv) == QMatrix::identity(2), "inverse roundtrip");
    const QMatrix singular = QMatrix::from_rows({{q("1"), q("2")}, {q("2"), q("4")}});
    c.equal(singular.rank(), std::size_t{1}, "[[1,2],[2,4]] has rank 1");
    c.check(!singular.inverse().has_value(), "singular matrix has no inverse");

    // The same plane from two spanning sets must canonicalize identically.
    const Subspace s1 =
        Subspace::span(QMatrix::from_rows({{q("1"), q("1"), q("0")}, {q("0"), q("1"), q("1")}}), 3);
    const Subspace s2 =
        Subspace::span(QMatrix::from_rows({{q("2"), q("3"), q("1")}, {q("1"), q("2"), q("1")}}), 3);
    c.equal(s1, s2, "row-reduced form is basis independent");
    c.equal(s1.dim(), std::size_t{2}, "plane has dimension 2");
    c.check(s1.contains({q("1"), q("2"), q("1")}), "membership in the plane");
    c.check(!s1.contains({q("1"), q("0"), q("0")}), "non-membership");
    const Subspace line = Subspace::span(QMatrix::from_rows({{q("1"), q("0"), q("0")}}), 3);
    c.equal(s1.sum(line), Subspace::full(3), "plane + transverse line = everything");
    return c.result;
}

SelftestResult isotypic_suite() {
    Checker c("isotypic");
    c.equal(ray_sum(RayTail::geometric(q("1"), q("1/2")), 1), q("1"),
            "sum of (1/2)^n for n >= 1 is 1");
    c.equal(ray_sum(RayTail::geometric(q("1"), q("1/3")), 3), q("1/18"),
            "sum of (1/3)^n for n >= 3 is 1/18");
    c.rejects([] { ray_sum(RayTail::constant(q("1")), 0); }, "constant tails have no finite sum");

    const auto fx = fixtures::torus_asymmetric();
    c.equal(pairing(fx.theta, fx.h), q("0"), "asymmetric fixture pairs to zero");
    c.equal(pairing(fx.theta, fx.h_prime), q("1"), "theta of the positive-ray candidate is 1");
    const std::set<IrrepLabel> box = {IrrepLabel{-1}, IrrepLabel{0}, IrrepLabel{1}};
    const SplitPairing split = restrict_pairing(fx.theta, fx.h, box);
    c.equal(split.window_part + split.tail_part, q("0"), "split pairing adds up");
    c.equal(restrict_pairing(fx.theta.abs_window(), fx.h, box).tail_part, q("2/3"),
            "tail majorant outside [-1,1] is 2/3");

    const SignPartition signs = sign_partition(fx.theta);
    c.equal(signs.d_minus, std::vector<IrrepLabel>{IrrepLabel{0}}, "only label 0 is negative");
    c.check(signs.pos_tail_positive && signs.neg_tail_positive, "both tails are positive");

    const GroupSpec z3 = GroupSpec::finite_abelian({3});
    c.rejects(
        [&] {
            IsotypicFunction::make(z3, {{IrrepLabel{0}, q("1")}}, RayTail::constant(q("1")));
        },
        "tails need ray labels");
    return c.result;
}

SelftestResult equivariant_suite() {
    Checker c("equivariant");
    const auto nil = fixtures::z3_nilpotent();
    const IrrepLabel l0{0}, l1{1}, l2{2};

    // Full scope: the chain module has exactly 0, x^2-span, (x, x^2)-span, F.
    const auto full = enumerate_submodule_hilbert_functions(nil.module, SubmoduleScope::Full);
    c.equal(full.exactness, Exactness::EXACT, "multiplicity-free modules enumerate exactly");
    const std::vector<HilbertFunction> expected_full = {
        counts_over_module(nil.module, {}),
        counts_over_module(nil.module, {{l1, 1}}),
        counts_over_module(nil.module, {{l1, 1}, {l2, 1}}),
        counts_over_module(nil.module, {{l0, 1}, {l1, 1}, {l2, 1}}),
    };
    c.equal(full.functions, expected_full, "submodule Hilbert functions of the chain module");

    // Restricting to D_-generated submodules drops the middle one: no
    // subspace of the components at {0, 1} generates (x, x^2).
    const std::set<IrrepLabel> d_minus = {l0, l1};
    const auto gen =
        enumerate_submodule_hilbert_functions(nil.module, SubmoduleScope::DminusGenerated, d_minus);
    const std::vector<HilbertFunction> expected_gen = {
        counts_over_module(nil.module, {}),
        counts_over_module(nil.module, {{l1, 1}}),
        counts_over_module(nil.module, {{l0, 1}, {l1, 1}, {l2, 1}}),
    };
    c.equal(gen.functions, expected_gen, "D_- generated submodules of the chain module");

    c.check(generated_in_dminus(nil.module, {l0}), "chain module is cyclic at label 0");
    c.check(!generated_in_dminus(nil.module, {l1}), "chain module is not generated at label 1");

    // Non-commuting arrows must be rejected with a diagnostic.
    const auto z2z2 = fixtures::z2z2_action();
    std::map<IrrepLabel, long> dims = {{IrrepLabel{0, 0}, 1}, {IrrepLabel{1, 0}, 1},
                                       {IrrepLabel{0, 1}, 1}, {IrrepLabel{1, 1}, 1}};
    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    const QMatrix one = QMatrix::from_rows({{q("1")}});
    const QMatrix two = QMatrix::from_rows({{q("2")}});
    arrows[{0, IrrepLabel{0, 0}}] = one;  // x then y reaches (1,1) with scalar 1 ...
    arrows[{1, IrrepLabel{1, 0}}] = one;
    arrows[{1, IrrepLabel{0, 0}}] = one;  // ... but y then x reaches it with scalar 2.
    arrows[{0, IrrepLabel{0, 1}}] = two;
    c.check(!check_relations(z2z2, dims, arrows).empty(), "commutation failure is detected");
    c.rejects([&] { EquivariantModule::make(z2z2, dims, arrows); },
              "module constructor rejects non-commuting arrows");

    // Odometer over coordinate subspaces: dims (2, 1) give 2^2 * 2^1 subspaces.
    CoordinateSubspaceWalker walker({{l0, 2}, {l1, 1}});
    std::size_t emitted = 0;
    for (; !walker.done(); walker.advance()) ++emitted;
    c.equal(emitted, std::size_t{8}, "coordinate walker over dims (2,1) emits 8 subspaces");
    return c.result;
}

SelftestResult theta_suite() {
    Checker c("theta");
    const auto orbit = fixtures::z3_free_orbit();
    const auto nil = fixtures::z3_nilpotent();
    const IrrepLabel l0{0}, l1{1}, l2{2};

    const auto stable = theta_verdict_for_module(orbit.theta, orbit.module, SubmoduleScope::Full);
    c.equal(stable.status, Status::STABLE, "free orbit is stable");
    c.equal(stable.exactness, Exactness::EXACT, "free orbit verdict is exact");

    const auto unstable = theta_verdict_for_module(nil.theta, nil.module, SubmoduleScope::Full);
    c.equal(unstable.status, Status::UNSTABLE, "chain module is unstable for the same theta");
    c.check(unstable.witness.has_value() && unstable.witness_value.has_value(),
            "instability comes with a witness");
    if (unstable.witness)
        c.equal(*unstable.witness, counts_over_module(nil.module, {{l1, 1}}),
                "the x^2 line destabilizes");
    if (unstable.witness_value) c.equal(*unstable.witness_value, q("-1"), "witness value is -1");

    // theta with a zero on the destabilizer: strictly semistable.
    const ThetaVector flat = ThetaVector::make(
        nil.theta.group(), {{l0, q("-2")}, {l1, q("0")}, {l2, q("2")}});
    const auto semi = theta_verdict_for_module(flat, nil.module, SubmoduleScope::Full);
    c.equal(semi.status, Status::STRICTLY_SEMISTABLE, "zero witness value is strict semistability");
    if (semi.witness)
        c.equal(*semi.witness, counts_over_module(nil.module, {{l1, 1}}),
                "semistable witness is the x^2 line");

    // Verdicts are invariant under positive scaling of theta.
    const auto scaled = theta_verdict_for_module(nil.theta.scaled(q("7/3")), nil.module,
                                                 SubmoduleScope::Full);
    c.equal(scaled.status, Status::UNSTABLE, "scaling theta by 7/3 keeps the verdict");

    // Pairing precondition is enforced.
    const ThetaVector off = ThetaVector::make(nil.theta.group(), {{l0, q("1")}});
    c.rejects([&] { theta_verdict_for_module(off, nil.module, SubmoduleScope::Full); },
              "theta pairing nonzero against h");

    // Sampled paths: multiplicity (2, 1) forces sampling; the coordinate
    // seeds still certify instability when a bad line exists.
    const auto rank2 = fixtures::z2_rank2();
    const auto sampled = theta_verdict_for_module(rank2.theta, rank2.module, SubmoduleScope::Full);
    c.equal(sampled.exactness, Exactness::SAMPLED, "multiplicity 2 forces sampling");
    c.equal(sampled.status, Status::NO_WITNESS_FOUND, "no destabilizer found by sampling");
    const ThetaVector bad =
        ThetaVector::make(rank2.theta.group(), {{IrrepLabel{0}, q("2")}, {IrrepLabel{1}, q("-4")}});
    const auto caught = theta_verdict_for_module(bad, rank2.module, SubmoduleScope::Full);
    c.equal(caught.status, Status::UNSTABLE, "sampling still certifies instability");
    if (caught.witness_value) c.equal(*caught.witness_value, q("-4"), "sampled witness value");

    // Hilbert-scheme mode: multiplicity one at the unique negative label.
    const auto ghilb = fixtures::z3_ghilb_free();
    const auto mode = hilbert_scheme_mode_check(ghilb.theta, ghilb.module);
    c.check(mode.cyclic, "free orbit is generated at the trivial character");
    c.equal(mode.verdict.status, Status::STABLE, "free orbit is G-Hilbert stable");
    c.check(mode.consistent.value_or(false), "cyclic <=> stable in Hilbert-scheme mode");

    const EquivariantModule arrowless =
        EquivariantModule::make(fixtures::z3_action(), {{l0, 1}, {l1, 1}, {l2, 1}}, {});
    const auto mode2 = hilbert_scheme_mode_check(ghilb.theta, arrowless);
    c.check(!mode2.cyclic, "the arrowless module is not cyclic");
    c.equal(mode2.verdict.status, Status::UNSTABLE, "the arrowless module is unstable");
    c.check(mode2.consistent.value_or(false), "non-cyclic <=> unstable in Hilbert-scheme mode");
    return c.result;
}

SelftestResult git_suite() {
    Checker c("git");
    const auto orbit = fixtures::z3_free_orbit();
    const IrrepLabel l0{0}, l1{1}, l2{2};

    const GitParameters params =
        derive_parameters(orbit.theta, orbit.module.hilbert_function(), orbit.window,
                          orbit.kappa_minus);
    c.equal(params.kappa.at(l0), q("1"), "kappa at 0 is the free choice 1");
    c.equal(params.kappa.at(l1), q("1"), "kappa at 1 is the free choice 1");
    c.equal(params.kappa.at(l2), q("3"), "kappa at 2 follows theta (S_D = 0)");
    c.equal(params.kappa_F, q("5"), "kappa(F) = 5");
    c.equal(params.dim_A, 2L, "dim A = 2");
    c.equal(params.S_D, q("0"), "no tail outside the full window");
    c.equal(params.chi.at(l0), q("-1/2"), "chi at 0 is -1/2");
    c.equal(params.chi.at(l1), q("1/2"), "chi at 1 is 1/2");
    c.check(params.integrality_scale == 2, "halves need scale 2");
    Rational chi_h = 0;
    for (const auto& [label, value] : params.chi) chi_h += value * params.h_window.at(label);
    c.equal(chi_h, q("0"), "chi is admissible");

    // With S_D = 0 the window approximation reproduces theta on the nose.
    const ThetaVector tilde = theta_tilde_vector(params, orbit.theta.group());
    for (const IrrepLabel& label : {l0, l1, l2})
        c.equal(tilde.value_at(label), orbit.theta.value_at(label),
                "theta~ = theta at " + to_string(label));

    const auto p = QuotientPresentation::make(orbit.module, {l0, l1});
    GradedSubspace line0, line1;
    line0[l0] = Subspace::full(1);
    line1[l1] = Subspace::full(1);
    const OneStepWeight w0 = mu_one_step(p, params, line0);
    const OneStepWeight w1 = mu_one_step(p, params, line1);
    c.equal(w0.mu, q("4"), "mu of the generator line at 0 is 4");
    c.equal(w1.mu, q("6"), "mu of the generator line at 1 is 6");
    c.equal(w0.kappa_F_prime, q("5"), "either line generates everything");

    const auto nil = fixtures::z3_nilpotent();
    const GitParameters nil_params =
        derive_parameters(nil.theta, nil.module.hilbert_function(), nil.window, nil.kappa_minus);
    const auto np = QuotientPresentation::make(nil.module, {l0, l1});
    const OneStepWeight nw = mu_one_step(np, nil_params, line1);
    c.equal(nw.mu, q("-2"), "the x^2 generator line destabilizes with mu = -2");
    c.equal(nw.kappa_F_prime, q("1"), "its closure only holds the component at 1");

    // dim_A * theta~ = mu on saturated subspaces.
    const Saturation sat = saturate(np, line1);
    c.check(graded_equal(sat.saturated, line1), "the destabilizing line is saturated");
    c.equal(Rational(nil_params.dim_A) * theta_tilde(nil_params, nil.module.hilbert_function(),
                                                     nw.closure_dims),
            nw.mu, "dim_A * theta~ equals mu on the saturation");

    // Balanced two-weight filtration reproduces the one-step weight; adding
    // a constant to every weight shifts mu by exactly that multiple of
    // kappa(F).
    Filtration f;
    f.pieces[1] = line0;
    f.pieces[-1] = line1;
    const FiltrationWeight fw = mu_filtration(p, params, f);
    c.equal(fw.mu, w0.mu, "balanced filtration weight equals the one-step weight");
    Filtration shifted;
    shifted.pieces[2] = line0;
    shifted.pieces[0] = line1;
    c.equal(mu_filtration(p, params, shifted).mu, w0.mu + params.kappa_F,
            "weight shift adds kappa(F)");

    const GitVerdict stable = git_verdict(p, params);
    c.equal(stable.status, Status::STABLE, "free orbit is GIT stable");
    c.equal(stable.exactness, Exactness::EXACT, "GIT verdict on a free orbit is exact");
    const GitVerdict unstable = git_verdict(np, nil_params);
    c.equal(unstable.status, Status::UNSTABLE, "chain module is GIT unstable");
    if (unstable.witness_mu) c.equal(*unstable.witness_mu, q("-2"), "GIT witness weight");

    // Gauge moves the frames, not the verdict.
    GaugeElement gauge;
    gauge[l0] = QMatrix::from_rows({{q("2")}});
    gauge[l1] = QMatrix::from_rows({{q("-1/3")}});
    c.equal(git_verdict(apply_gauge(np, gauge), nil_params).status, Status::UNSTABLE,
            "gauge does not change the verdict");
    return c.result;
}

SelftestResult approx_suite() {
    Checker c("approx");
    const auto fx = fixtures::torus_asymmetric();

    c.equal(first_usable_window_index(fx.theta, fx.h), 1L, "the box [-1,1] is the first usable");
    for (long n = 1; n <= 6; ++n) {
        const auto window = growth_window(fx.theta, fx.h, n);
        c.equal(window.size(), std::size_t(2 * n + 1), "growth window is the full box");
        const ThetaErrorReport report = error_to_theta(fx.theta, fx.h, fx.h_prime, window);
        const Rational expected =
            pow(q("1/2"), static_cast<unsigned long>(n + 1)) -
            pow(q("1/3"), static_cast<unsigned long>(n)) / 4;
        c.equal(report.value, expected, "exact window error at index " + std::to_string(n));
        c.equal(report.formula_value, report.direct_difference,
                "tail formula agrees with the direct difference");
    }
    const auto d2 = growth_window(fx.theta, fx.h, 2);
    const GitParameters at2 = derive_parameters(fx.theta, fx.h, d2);
    c.equal(at2.S_D, q("11/36"), "tail sum outside [-2,2]");
    const WindowErrorReport between =
        error_between_windows(fx.theta, fx.h, fx.h_prime, d2, growth_window(fx.theta, fx.h, 5));
    c.equal(between.formula_value, between.direct_difference, "nested-window error identities");

    const LimitReport limit = verify_limit(fx.theta, fx.h, fx.h_prime, 10, q("1/1000"));
    c.check(limit.passed, "limit run passes at bound 1/1000");
    c.equal(limit.rows.front().index, 1L, "limit rows start at the first usable window");
    c.equal(limit.rows.back().error_abs, q("1/2048") - q("1/236196"), "final exact error");
    long first_below = 0;
    for (const LimitRow& row : limit.rows)
        if (row.error_abs < q("1/1000")) {
            first_below = row.index;
            break;
        }
    c.equal(first_below, 9L, "the error first drops below 1/1000 at index 9");
    c.rejects([&] { verify_limit(fx.theta, fx.h, fx.h_prime, 10, q("0")); },
              "limit bound must be positive");

    const WindowChoice choice = choose_window(fx.theta, fx.h, {fx.h_prime});
    c.equal(choice.index, 1L, "the box [-1,1] already certifies the candidate");
    c.equal(choice.theta_min, q("1"), "least candidate theta-value");
    c.equal(choice.majorant, q("2/3"), "majorant at the chosen window");
    c.equal(choice.certificate.size(), std::size_t{1}, "one certified candidate");
    if (!choice.certificate.empty())
        c.check(choice.certificate.front().second > 0, "certified theta~ is positive");

    const auto sym = fixtures::torus_symmetric();
    for (long n = 1; n <= 5; ++n) {
        const auto window = growth_window(sym.theta, sym.h, n);
        c.equal(error_to_theta(sym.theta, sym.h, sym.h_prime, window).value, q("0"),
                "symmetric tails cancel at index " + std::to_string(n));
    }
    return c.result;
}

SelftestResult quotient_suite() {
    Checker c("quotient");
    const auto z3 = fixtures::z3_action();
    const auto z2 = fixtures::z2_action();
    const auto torus = fixtures::torus_action();
    using Exponents = std::vector<std::vector<long>>;

    c.equal(default_degree_bound(z3), 6L, "Z/3 with two variables defaults to degree 6");
    const InvariantGenerators z3_gens = invariant_monomial_generators(z3, 6);
    c.equal(z3_gens.exponents, Exponents{{1, 1}, {0, 3}, {3, 0}},
            "Z/3 invariants are generated by xy, y^3, x^3");
    c.rejects([&] { invariant_monomial_generators(z3, 2); },
              "degree 2 misses the degree-3 generators");
    c.equal(invariant_monomial_generators(z2, 2).exponents, Exponents{{0, 2}, {1, 1}, {2, 0}},
            "Z/2 invariants are generated by y^2, xy, x^2");
    c.equal(invariant_monomial_generators(torus, 4).exponents, Exponents{{1, 1}},
            "torus weights +1/-1 are generated by xy");
    c.equal(monomial_to_string(z3, {3, 1}), std::string("x^3*y"), "monomial pretty form");
    c.equal(monomial_to_string(z3, {0, 0}), std::string("1"), "empty monomial prints as 1");

    const auto orbit = fixtures::z3_free_orbit();
    const QuotientPoint eta = hilbert_chow_point(orbit.module, z3_gens);
    c.equal(eta.coordinates.size(), std::size_t{3}, "one coordinate per generator");
    for (const auto& [exponents, value] : eta.coordinates) {
        if (exponents == std::vector<long>{3, 0})
            c.equal(value, q("1"), "x^3 acts by 1 on the orbit through (1,0)");
        else
            c.equal(value, q("0"), "generators involving y act by 0");
    }
    c.check(hilbert_chow_relations_hold(orbit.module, z3_gens),
            "action scalars are multiplicative on the orbit module");

    const auto nil = fixtures::z3_nilpotent();
    const QuotientPoint origin = hilbert_chow_point(nil.module, z3_gens);
    for (const auto& [exponents, value] : origin.coordinates)
        c.equal(value, q("0"), "the nilpotent module maps to the origin");
    c.check(hilbert_chow_relations_hold(nil.module, z3_gens),
            "action scalars are multiplicative on the chain module");

    const EquivariantModule general =
        free_orbit_module(z3, {q("2"), q("1/3")});
    c.check(general.multiplicity_free(), "orbit modules carry the regular representation");
    c.equal(general.total_dim(), 3L, "one basis vector per character");
    const QuotientPoint moved = hilbert_chow_point(general, z3_gens);
    for (const auto& [exponents, value] : moved.coordinates) {
        Rational expected = 1;
        for (std::size_t v = 0; v < z3.variable_count(); ++v)
            expected *= pow(v == 0 ? q("2") : q("1/3"),
                            static_cast<unsigned long>(exponents[v]));
        c.equal(value, expected, "evaluation at the orbit point for " +
                                     monomial_to_string(z3, exponents));
    }
    return c.result;
}

SelftestResult staircase_suite() {
    Checker c("staircase");
    const auto z2 = fixtures::z2_action();
    const auto z3 = fixtures::z3_action();
    const GroupSpec z2g = z2.group;
    const GroupSpec z3g = z3.group;

    const auto z2_all = enumerate_staircases(
        z2, HilbertFunction::from_counts(z2g, {{IrrepLabel{0}, 1}, {IrrepLabel{1}, 1}}));
    c.equal(z2_all.size(), std::size_t{2}, "Z/2 orbit staircases: {1,x} and {1,y}");

    const HilbertFunction z3_h = HilbertFunction::from_counts(
        z3g, {{IrrepLabel{0}, 1}, {IrrepLabel{1}, 1}, {IrrepLabel{2}, 1}});
    const auto z3_all = enumerate_staircases(z3, z3_h);
    using Cells = std::vector<std::vector<long>>;
    c.equal(z3_all.size(), std::size_t{3}, "Z/3 orbit staircases");
    if (z3_all.size() == 3) {
        c.equal(z3_all[0].cells, Cells{{0, 0}, {0, 1}, {0, 2}}, "staircase 1, y, y^2");
        c.equal(z3_all[1].cells, Cells{{0, 0}, {0, 1}, {1, 0}}, "staircase 1, y, x");
        c.equal(z3_all[2].cells, Cells{{0, 0}, {1, 0}, {2, 0}}, "staircase 1, x, x^2");
    }

    const ThetaVector ghilb =
        ThetaVector::make(z3g, {{IrrepLabel{0}, q("-2")}, {IrrepLabel{1}, q("1")},
                                {IrrepLabel{2}, q("1")}});
    const auto classified = enumerate_monomial_constellations(z3, ghilb, z3_h);
    c.equal(classified.size(), std::size_t{3}, "every staircase is classified");
    for (const auto& entry : classified) {
        c.equal(entry.verdict.status, Status::STABLE,
                "orbit staircases are stable for the Hilbert-scheme parameter");
        c.equal(entry.verdict.exactness, Exactness::EXACT, "staircase verdicts are exact");
    }

    const auto torus = fixtures::torus_action();
    const HilbertFunction chain_h = HilbertFunction::from_counts(
        torus.group, {{IrrepLabel{0}, 1}, {IrrepLabel{1}, 1}, {IrrepLabel{2}, 1}});
    const auto chains = enumerate_staircases(torus, chain_h);
    c.equal(chains.size(), std::size_t{1}, "only 1, x, x^2 matches the torus chain counts");
    if (!chains.empty())
        c.equal(chains[0].cells, Cells{{0, 0}, {1, 0}, {2, 0}}, "the chain staircase");

    c.check(enumerate_staircases(z2, HilbertFunction::from_counts(z2g, {})).empty(),
            "no cells, no constellations");
    c.check(graded_lex_less({1, 0}, {0, 2}) && graded_lex_less({0, 2}, {1, 1}),
            "degree before lexicographic order");

    // A staircase module is a valid module and reproduces its counts.
    const EquivariantModule chain = staircase_module(torus, chains.at(0));
    c.equal(chain.hilbert_function(), chain_h, "staircase module counts match");
    return c.result;
}

SelftestResult problem_suite() {
    Checker c("problem");
    const std::string text =
        "# demo problem\n"
        "[group]\n"
        "kind = finite_abelian\n"
        "orders = 3\n"
        "\n"
        "[action]\n"
        "var x = 2\n"
        "var y = 1\n"
        "\n"
        "[theta]\n"
        "0 = -2\n"
        "1 = -1\n"
        "2 = 3\n"
        "\n"
        "[hilbert]\n"
        "0 = 1\n"
        "1 = 1\n"
        "2 = 1\n"
        "\n"
        "[module]\n"
        "component 0 = 1\n"
        "component 1 = 1\n"
        "component 2 = 1\n"
        "arrow x 0 = [[1]]\n"
        "arrow x 2 = [[1]]\n"
        "\n"
        "[params]\n"
        "window = all\n"
        "kappa 0 = 1\n"
        "kappa 1 = 1\n"
        "\n"
        "[task]\n"
        "scope = full\n"
        "seed = 7\n";
    const ProblemFile parsed = parse_problem_text(text, "selftest");
    c.check(parsed.group.has_value() && parsed.module.has_value(), "sections parsed");
    c.equal(parsed.task.seed, std::uint64_t{7}, "task seed");
    c.equal(parsed.task.scope, SubmoduleScope::Full, "task scope");
    if (parsed.module)
        c.equal(*parsed.module, fixtures::z3_nilpotent().module,
                "parsed module matches the chain fixture");
    if (parsed.theta && parsed.params_window) {
        c.equal(parsed.params_window->size(), std::size_t{3}, "'all' expands to every character");
        c.equal(pairing(*parsed.theta, *parsed.hilbert), q("0"), "parsed theta pairs to zero");
    }

    const std::string printed = print_problem(parsed);
    c.equal(parse_problem_text(printed, "roundtrip"), parsed, "print/parse roundtrip");

    const auto message_of = [](auto&& f) -> std::string {
        try {
            f();
        } catch (const InputError& e) {
            return e.what();
        }
        return "";
    };
    const std::string bad_value =
        message_of([] { parse_problem_text("[group]\nkind = finite_abelian\norders = x\n", "t"); });
    c.check(bad_value.find("t:3:") == 0, "diagnostics carry origin and line");
    const std::string bad_section = message_of([] { parse_problem_text("[nonsense]\n", "t"); });
    c.check(bad_section.find("t:1:") == 0, "unknown sections are rejected at their line");
    c.check(message_of([] { ProblemFile{}.need_module(); }).find("[module]") != std::string::npos,
            "missing sections name the section to add");
    return c.result;
}

}  // namespace

std::vector<SelftestResult> run_selftests() {
    return {
        rational_suite(), group_suite(),   qmatrix_suite(),   isotypic_suite(),
        equivariant_suite(), theta_suite(), git_suite(),      approx_suite(),
        quotient_suite(), staircase_suite(), problem_suite(),
    };
}

}  // namespace constellab
