#include "doctest.h"

#include <filesystem>
#include <string>

#include "constellab/fixtures.hpp"
#include "constellab/problem.hpp"

using namespace constellab;

namespace {

Rational q(const char* text) { return parse_rational(text); }

std::string fixture_path(const std::string& name) {
    return (std::filesystem::path(CONSTELLAB_FIXTURE_DIR) / name).string();
}

const char* kMinimal = R"([group]
kind = finite_abelian
orders = 2

[theta]
0 = -2/1
1 = 2

[hilbert]
0 = 1
1 = 1
)";

}  // namespace

TEST_CASE("a minimal problem parses into library objects") {
    const ProblemFile problem = parse_problem_text(kMinimal, "minimal");
    REQUIRE(problem.group.has_value());
    CHECK(problem.group->is_finite());
    REQUIRE(problem.theta.has_value());
    CHECK(problem.theta->value_at(IrrepLabel{0}) == q("-2"));
    REQUIRE(problem.hilbert.has_value());
    CHECK(problem.hilbert->count_at(IrrepLabel{1}) == 1);
    CHECK(!problem.module.has_value());
    CHECK(!problem.action.has_value());
    CHECK(problem.task == TaskOptions{});

    // Missing sections are demanded with a uniform error naming them.
    CHECK_THROWS_WITH_AS(problem.need_module(), doctest::Contains("[module]"), InputError);
    CHECK_THROWS_WITH_AS(problem.need_action(), doctest::Contains("[action]"), InputError);
    CHECK_THROWS_WITH_AS(problem.need_subh("probe"), doctest::Contains("probe"), InputError);
    CHECK(problem.need_theta() == *problem.theta);
}

TEST_CASE("printing and reparsing is the identity on every fixture") {
    for (const auto& entry : std::filesystem::directory_iterator(CONSTELLAB_FIXTURE_DIR)) {
        if (entry.path().extension() != ".problem") continue;
        CAPTURE(entry.path().filename().string());
        const ProblemFile parsed = parse_problem_file(entry.path().string());
        const std::string printed = print_problem(parsed);
        const ProblemFile reparsed = parse_problem_text(printed, "roundtrip");
        CHECK(parsed == reparsed);
        // Printing is idempotent: the canonical form of a canonical form is
        // itself.
        CHECK(print_problem(reparsed) == printed);
    }
}

TEST_CASE("the fixture files assemble the fixture objects") {
    const ProblemFile orbit = parse_problem_file(fixture_path("z3_free_orbit.problem"));
    const auto expected = fixtures::z3_free_orbit();
    CHECK(orbit.need_module() == expected.module);
    CHECK(orbit.need_theta() == expected.theta);
    CHECK(orbit.need_action() == expected.action);
    CHECK(orbit.task.scope == SubmoduleScope::Full);
    REQUIRE(orbit.params_window.has_value());
    // 'all' expands to every character of the finite group.
    CHECK(orbit.params_window->size() == 3);
    CHECK(orbit.kappa_minus.at(IrrepLabel{0}) == q("1"));

    const ProblemFile approx = parse_problem_file(fixture_path("torus_asymmetric.problem"));
    const auto torus = fixtures::torus_asymmetric();
    CHECK(approx.need_theta() == torus.theta);
    CHECK(approx.need_hilbert() == torus.h);
    CHECK(approx.need_subh("hp") == torus.h_prime);
    CHECK(approx.task.hprime == std::string("hp"));
    CHECK(approx.task.max_index == 10);
    CHECK(approx.task.bound == q("1/1000"));
}

TEST_CASE("diagnostics carry the origin and line number") {
    const auto parse = [](const std::string& text) {
        return parse_problem_text(text, "t");
    };
    // Unknown section.
    CHECK_THROWS_WITH_AS(parse("[nonsense]\n"), doctest::Contains("t:1:"), InputError);
    // Bad key inside a section, reported at its line.
    CHECK_THROWS_WITH_AS(parse("[group]\nkind = finite_abelian\norders = 2\nvolume = 3\n"),
                         doctest::Contains("t:4:"), InputError);
    // Unparseable values are reported where they appear...
    CHECK_THROWS_WITH_AS(parse("[group]\nkind = finite_abelian\norders = goop\n"),
                         doctest::Contains("t:3:"), InputError);
    // ... while a rejected assembled value points at the section header.
    CHECK_THROWS_WITH_AS(parse("[group]\nkind = finite_abelian\norders = 1\n"),
                         doctest::Contains("t:1:"), InputError);
    CHECK_THROWS_AS(parse("[group]\nkind = tictactoe\n"), InputError);
    // Sections may not repeat.
    CHECK_THROWS_WITH_AS(parse("[group]\nkind = torus\nrank = 1\n[group]\nkind = torus\nrank = 1\n"),
                         doctest::Contains("t:4:"), InputError);
    // A section needing the group must follow one.
    CHECK_THROWS_AS(parse("[theta]\n0 = -1\n"), InputError);
}

TEST_CASE("window declarations respect the group kind") {
    // Interval windows are for ray-label groups only.
    const std::string finite_window = R"([group]
kind = finite_abelian
orders = 3

[theta]
window = -1..1
0 = -1
)";
    CHECK_THROWS_AS(parse_problem_text(finite_window, "t"), InputError);

    // 'all' cannot enumerate infinitely many torus characters.
    const std::string torus_all = R"([group]
kind = torus
rank = 1

[params]
window = all
)";
    CHECK_THROWS_AS(parse_problem_text(torus_all, "t"), InputError);

    // An interval [params] window on the torus works.
    const std::string torus_interval = R"([group]
kind = torus
rank = 1

[params]
window = -2..2
)";
    const ProblemFile parsed = parse_problem_text(torus_interval, "t");
    REQUIRE(parsed.params_window.has_value());
    CHECK(parsed.params_window->size() == 5);
    CHECK(parsed.params_window->count(IrrepLabel{-2}) == 1);
}

TEST_CASE("task options are validated") {
    const std::string prefix = "[group]\nkind = finite_abelian\norders = 2\n\n[task]\n";
    CHECK_THROWS_AS(parse_problem_text(prefix + "scope = everything\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "seed = abc\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "samples = many\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "bound = 1/0\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "degree_bound = -3\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "subh_complete = maybe\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "flavor = vanilla\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "candidates = ghost\n", "t"), InputError);
    CHECK_THROWS_AS(parse_problem_text(prefix + "point = 1 2\n", "t"), InputError);

    const ProblemFile parsed = parse_problem_text(
        prefix + "seed = 7\nsamples = 9\ncap = 100\nmax_index = 4\nscope = dminus\n", "t");
    CHECK(parsed.task.seed == 7);
    CHECK(parsed.task.samples == 9);
    CHECK(parsed.task.cap == 100);
    CHECK(parsed.task.max_index == 4);
    CHECK(parsed.task.scope == SubmoduleScope::DminusGenerated);
}

TEST_CASE("module frames are parsed and validated") {
    const std::string text = R"([group]
kind = finite_abelian
orders = 2

[action]
var x = 1

[module]
component 0 = 1
component 1 = 1
arrow x 0 = [[1]]
arrow x 1 = [[1]]
frame 0 = [[2]]
)";
    const ProblemFile parsed = parse_problem_text(text, "t");
    REQUIRE(parsed.frames.count(IrrepLabel{0}) == 1);
    CHECK(parsed.frames.at(IrrepLabel{0}) == QMatrix::from_rows({{q("2")}}));

    // Malformed matrix literals are caught at the frame line; shape checks
    // against the module happen when a presentation is built.
    const std::string bad = R"([group]
kind = finite_abelian
orders = 2

[action]
var x = 1

[module]
component 0 = 1
frame 0 = nonsense
)";
    CHECK_THROWS_WITH_AS(parse_problem_text(bad, "t"), doctest::Contains("t:10:"), InputError);
}
