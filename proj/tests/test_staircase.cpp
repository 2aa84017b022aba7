#include "doctest.h"

#include <algorithm>

#include "constellab/fixtures.hpp"
#include "constellab/staircase.hpp"

using namespace constellab;

namespace {

Rational q(const char* text) { return parse_rational(text); }

Staircase stairs(std::vector<std::vector<long>> cells) {
    std::sort(cells.begin(), cells.end(), graded_lex_less);
    return Staircase{std::move(cells)};
}

}  // namespace

TEST_CASE("graded-lexicographic cell order") {
    CHECK(graded_lex_less({0, 0}, {1, 0}));
    CHECK(graded_lex_less({1, 0}, {0, 2}));   // lower total degree first
    CHECK(graded_lex_less({0, 2}, {1, 1}));   // same degree: lex on entries
    CHECK(!graded_lex_less({1, 1}, {1, 1}));
    CHECK(!graded_lex_less({2, 0}, {1, 1}));
}

TEST_CASE("staircases matching the regular representation") {
    // Z/2 acting by (1, 1): the two order ideals with one cell per
    // character are {1, x} and {1, y}.
    const auto z2 = fixtures::z2_action();
    const HilbertFunction reg2 = HilbertFunction::from_counts(
        z2.group, {{IrrepLabel{0}, 1}, {IrrepLabel{1}, 1}});
    const auto two = enumerate_staircases(z2, reg2);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == stairs({{0, 0}, {0, 1}}));
    CHECK(two[1] == stairs({{0, 0}, {1, 0}}));

    // Z/3 with weights (2, 1): the ideals with one cell per character are
    // {1, x, x^2}, {1, x, y} and {1, y, y^2}.
    const auto z3 = fixtures::z3_action();
    const HilbertFunction reg3 = HilbertFunction::from_counts(
        z3.group, {{IrrepLabel{0}, 1}, {IrrepLabel{1}, 1}, {IrrepLabel{2}, 1}});
    const auto three = enumerate_staircases(z3, reg3);
    REQUIRE(three.size() == 3);
    const std::vector<Staircase> expected{
        stairs({{0, 0}, {1, 0}, {0, 1}}),
        stairs({{0, 0}, {1, 0}, {2, 0}}),
        stairs({{0, 0}, {0, 1}, {0, 2}}),
    };
    for (const auto& s : expected)
        CHECK(std::find(three.begin(), three.end(), s) != three.end());
    CHECK(std::is_sorted(three.begin(), three.end()));
}

TEST_CASE("staircase enumeration needs finite support") {
    const auto z2 = fixtures::z2_action();
    const HilbertFunction empty = HilbertFunction::from_counts(
        z2.group, {{IrrepLabel{0}, 0}, {IrrepLabel{1}, 0}});
    CHECK(enumerate_staircases(z2, empty).empty());

    const HilbertFunction tailed = HilbertFunction::make(
        GroupSpec::torus(1), {{IrrepLabel{0}, q("1")}}, RayTail::constant(q("1")));
    const ActionSpec torus = fixtures::torus_action();
    CHECK_THROWS_AS(enumerate_staircases(torus, tailed), InputError);
}

TEST_CASE("five staircases share the doubled multiplicities") {
    const auto z2 = fixtures::z2_action();
    const HilbertFunction doubled = HilbertFunction::from_counts(
        z2.group, {{IrrepLabel{0}, 2}, {IrrepLabel{1}, 2}});
    const auto found = enumerate_staircases(z2, doubled);
    REQUIRE(found.size() == 5);
    const std::vector<Staircase> expected{
        stairs({{0, 0}, {1, 0}, {2, 0}, {3, 0}}),
        stairs({{0, 0}, {1, 0}, {2, 0}, {0, 1}}),
        stairs({{0, 0}, {1, 0}, {0, 1}, {1, 1}}),
        stairs({{0, 0}, {1, 0}, {0, 1}, {0, 2}}),
        stairs({{0, 0}, {0, 1}, {0, 2}, {0, 3}}),
    };
    for (const auto& s : expected)
        CHECK(std::find(found.begin(), found.end(), s) != found.end());
}

TEST_CASE("staircase modules are cyclic monomial modules") {
    const auto z3 = fixtures::z3_action();
    const Staircase chain = stairs({{0, 0}, {1, 0}, {2, 0}});
    const EquivariantModule m = staircase_module(z3, chain);
    CHECK(m.total_dim() == 3);
    CHECK(m.multiplicity_free());
    // Generated from the cell at the origin (character 0).
    CHECK(generated_in_dminus(m, {IrrepLabel{0}}));
    // x moves 1 -> x -> x^2 and kills x^2; y kills everything in the chain.
    CHECK(m.arrow(0, IrrepLabel{0}) != nullptr);
    CHECK(m.arrow(1, IrrepLabel{0}) == nullptr);

    CHECK(to_string(z3, chain) == "{1, x, x^2}");
}

TEST_CASE("classification of the doubled-multiplicity staircases") {
    // theta = (-1, 1) pairs to zero against h = (2, 2).  These modules
    // have two-dimensional components, so verdicts are sampled.  The two
    // pure chains have only their tails as submodules, the best scoring 0:
    // a sample cannot certify semistability, so it reports no witness.
    // The other three staircases contain a trailing even-character cell
    // whose coordinate line is a destabilizing submodule, and a witness is
    // a certificate even from a sampled run.
    const auto z2 = fixtures::z2_action();
    const ThetaVector theta = ThetaVector::make(
        z2.group, {{IrrepLabel{0}, q("-1")}, {IrrepLabel{1}, q("1")}});
    const HilbertFunction doubled = HilbertFunction::from_counts(
        z2.group, {{IrrepLabel{0}, 2}, {IrrepLabel{1}, 2}});

    const auto classified = enumerate_monomial_constellations(z2, theta, doubled);
    REQUIRE(classified.size() == 5);
    std::size_t open = 0, unstable = 0;
    for (const auto& entry : classified) {
        CHECK(entry.verdict.exactness == Exactness::SAMPLED);
        const bool pure_chain = entry.staircase == stairs({{0, 0}, {1, 0}, {2, 0}, {3, 0}}) ||
                                entry.staircase == stairs({{0, 0}, {0, 1}, {0, 2}, {0, 3}});
        if (pure_chain) {
            CHECK(entry.verdict.status == Status::NO_WITNESS_FOUND);
            CHECK(!entry.verdict.witness.has_value());
            ++open;
        } else {
            CHECK(entry.verdict.status == Status::UNSTABLE);
            REQUIRE(entry.verdict.witness_value.has_value());
            CHECK(*entry.verdict.witness_value == q("-1"));
            ++unstable;
        }
    }
    CHECK(open == 2);
    CHECK(unstable == 3);
}

TEST_CASE("classification of the regular-representation staircases") {
    // All three Z/3 staircases are stable for theta = (-2, 1, 1): every
    // proper nonzero submodule misses the origin cell and scores positive.
    const auto z3 = fixtures::z3_action();
    const ThetaVector theta = ThetaVector::make(
        z3.group,
        {{IrrepLabel{0}, q("-2")}, {IrrepLabel{1}, q("1")}, {IrrepLabel{2}, q("1")}});
    const HilbertFunction reg = HilbertFunction::from_counts(
        z3.group, {{IrrepLabel{0}, 1}, {IrrepLabel{1}, 1}, {IrrepLabel{2}, 1}});
    const auto classified = enumerate_monomial_constellations(z3, theta, reg);
    REQUIRE(classified.size() == 3);
    for (const auto& entry : classified) {
        CHECK(entry.verdict.status == Status::STABLE);
        CHECK(entry.verdict.exactness == Exactness::EXACT);
    }
}
