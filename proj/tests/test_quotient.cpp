#include "doctest.h"

#include "constellab/fixtures.hpp"
#include "constellab/quotient.hpp"

using namespace constellab;

namespace {

Rational q(const char* text) { return parse_rational(text); }

bool has_exponent(const InvariantGenerators& gens, const std::vector<long>& exponents) {
    for (const auto& e : gens.exponents)
        if (e == exponents) return true;
    return false;
}

}  // namespace

TEST_CASE("invariant monomial generators of the fixture actions") {
    // Z/3 with weights (2, 1): invariants are generated by xy, y^3, x^3.
    const InvariantGenerators z3 = invariant_monomial_generators(fixtures::z3_action(), 6);
    REQUIRE(z3.exponents.size() == 3);
    CHECK(has_exponent(z3, {1, 1}));
    CHECK(has_exponent(z3, {0, 3}));
    CHECK(has_exponent(z3, {3, 0}));
    // Graded-lexicographic order: degree 2 before degree 3.
    CHECK(z3.exponents.front() == std::vector<long>{1, 1});

    // Z/2 x Z/2 with weights (1,0), (0,1): only the pure squares.
    const InvariantGenerators z2z2 = invariant_monomial_generators(fixtures::z2z2_action(), 4);
    REQUIRE(z2z2.exponents.size() == 2);
    CHECK(has_exponent(z2z2, {2, 0}));
    CHECK(has_exponent(z2z2, {0, 2}));

    // Rank-1 torus with weights +1, -1: the single product xy.
    const InvariantGenerators torus = invariant_monomial_generators(fixtures::torus_action(), 2);
    REQUIRE(torus.exponents.size() == 1);
    CHECK(torus.exponents.front() == std::vector<long>{1, 1});
}

TEST_CASE("degree bounds are validated and verified for completeness") {
    const ActionSpec z3 = fixtures::z3_action();
    CHECK_THROWS_AS(invariant_monomial_generators(z3, 0), InputError);
    CHECK_THROWS_AS(invariant_monomial_generators(z3, 41), InputError);
    // Bound 2 finds xy but misses the cubes; the completeness check fails
    // with a mention of the bound.
    CHECK_THROWS_WITH_AS(invariant_monomial_generators(z3, 2), doctest::Contains("bound"),
                         InputError);

    CHECK(default_degree_bound(z3) == 6);                        // lcm(3) * 2 variables
    CHECK(default_degree_bound(fixtures::z2z2_action()) == 4);   // lcm(2,2) * 2
    CHECK(default_degree_bound(fixtures::torus_action()) == 2);  // no cyclic part
}

TEST_CASE("monomial strings") {
    const ActionSpec z3 = fixtures::z3_action();
    CHECK(monomial_to_string(z3, {1, 1}) == "x*y");
    CHECK(monomial_to_string(z3, {3, 0}) == "x^3");
    CHECK(monomial_to_string(z3, {0, 1}) == "y");
    CHECK(monomial_to_string(z3, {0, 0}) == "1");
    CHECK_THROWS_AS(monomial_to_string(z3, {1, 2, 3}), InputError);
}

TEST_CASE("support points of orbit modules evaluate the invariants") {
    // The free orbit module through (1, 0) realizes evaluation at that
    // point: x acts invertibly with scalar 1, y by zero.
    const auto orbit = fixtures::z3_free_orbit();
    const InvariantGenerators gens = invariant_monomial_generators(orbit.action, 6);
    const QuotientPoint point = hilbert_chow_point(orbit.module, gens);
    REQUIRE(point.coordinates.size() == 3);
    for (const auto& [exponents, value] : point.coordinates) {
        if (exponents == std::vector<long>{3, 0}) {
            CHECK(value == q("1"));  // x^3 at the point (1, 0)
        } else {
            CHECK(value == q("0"));  // every monomial containing y vanishes
        }
    }
    CHECK(hilbert_chow_relations_hold(orbit.module, gens));

    // The nilpotent chain is supported at the origin.
    const auto chain = fixtures::z3_nilpotent();
    const QuotientPoint origin = hilbert_chow_point(chain.module, gens);
    for (const auto& [exponents, value] : origin.coordinates) CHECK(value == q("0"));
    CHECK(hilbert_chow_relations_hold(chain.module, gens));

    // The support map needs a one-dimensional trivial component.
    const EquivariantModule fat = EquivariantModule::make(
        fixtures::z2_action(), {{IrrepLabel{0}, 2}, {IrrepLabel{1}, 1}}, {});
    const InvariantGenerators z2_gens =
        invariant_monomial_generators(fixtures::z2_action(), 4);
    CHECK_THROWS_AS(hilbert_chow_point(fat, z2_gens), InputError);
    const EquivariantModule empty = EquivariantModule::make(
        fixtures::z2_action(), {{IrrepLabel{1}, 1}}, {});
    CHECK_THROWS_AS(hilbert_chow_point(empty, z2_gens), InputError);
}

TEST_CASE("orbit modules through explicit points") {
    const ActionSpec action = fixtures::z2z2_action();
    const EquivariantModule m = free_orbit_module(action, {q("1/2"), q("-3")});
    CHECK(m.multiplicity_free());
    CHECK(m.total_dim() == 4);  // one basis vector per character

    const InvariantGenerators gens = invariant_monomial_generators(action, 4);
    const QuotientPoint point = hilbert_chow_point(m, gens);
    for (const auto& [exponents, value] : point.coordinates) {
        if (exponents == std::vector<long>{2, 0}) CHECK(value == q("1/4"));
        if (exponents == std::vector<long>{0, 2}) CHECK(value == q("9"));
    }
    CHECK(hilbert_chow_relations_hold(m, gens));

    // The point's arity must match the action's variables.
    CHECK_THROWS_AS(free_orbit_module(action, {q("1")}), InputError);
    // Orbit modules need a finite group (the regular representation).
    CHECK_THROWS_AS(free_orbit_module(fixtures::torus_action(), {q("1"), q("1")}),
                    InputError);
}

TEST_CASE("action scalars compose along arrows") {
    const auto orbit = fixtures::z3_free_orbit();
    // x^3 walks 0 -> 2 -> 1 -> 0 with unit scalars.
    CHECK(monomial_action_scalar(orbit.module, {3, 0}) == q("1"));
    // x*y passes through y, which acts by zero.
    CHECK(monomial_action_scalar(orbit.module, {1, 1}) == q("0"));
    // The monomial must fix the trivial character.
    CHECK_THROWS_AS(monomial_action_scalar(orbit.module, {1, 0}), InputError);
}
