#pragma once

#include "constellab/theta.hpp"

namespace constellab {

/// A finite divisor-closed set of exponent vectors (an order ideal of
/// monomials), the combinatorial skeleton of a monomial constellation.
struct Staircase {
    std::vector<std::vector<long>> cells;  // graded-lexicographic order

    bool operator==(const Staircase&) const = default;
    bool operator<(const Staircase& other) const { return cells < other.cells; }
};

std::string to_string(const ActionSpec& action, const Staircase& s);

/// Total degree first, then lexicographic: the order in which staircase
/// cells are stored and enumerated.
bool graded_lex_less(const std::vector<long>& a, const std::vector<long>& b);

/// All staircases whose character counts match h exactly (h must have
/// finite support: zero tails).  Each staircase is produced exactly once;
/// the result is sorted.  `cap` bounds the search tree.
std::vector<Staircase> enumerate_staircases(const ActionSpec& action, const HilbertFunction& h,
                                            std::size_t cap = 1 << 20);

/// The monomial module on a staircase: basis = cells, and each variable
/// moves a cell one step in its direction with coefficient 1 (zero when the
/// step leaves the staircase).  Relations hold by construction.
EquivariantModule staircase_module(const ActionSpec& action, const Staircase& s);

/// Enumerate the monomial constellations for (action, h) and classify each
/// against theta.  Exact verdicts whenever the staircase module is
/// multiplicity-free.
struct ClassifiedStaircase {
    Staircase staircase;
    StabilityVerdict verdict;
};
std::vector<ClassifiedStaircase> enumerate_monomial_constellations(
    const ActionSpec& action, const ThetaVector& theta, const HilbertFunction& h,
    const EnumerationOptions& options = {});

}  // namespace constellab
