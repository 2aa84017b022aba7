#pragma once

#include "constellab/equivariant.hpp"

namespace constellab {

/// Minimal generating set of the monoid of trivial-character monomials in
/// the action's variables, up to the given total degree (a Hilbert basis of
/// the monoid, truncated at the bound).  Throws InputError when the bound
/// is too small: a trivial-character monomial of degree <= bound + 1 that is
/// not a product of the generators found proves the truncation lossy.
struct InvariantGenerators {
    std::vector<std::vector<long>> exponents;  // graded-lexicographic order
    long degree_bound = 0;
};
InvariantGenerators invariant_monomial_generators(const ActionSpec& action, long degree_bound);

/// Pretty form like "x^3*y" for an exponent vector.
std::string monomial_to_string(const ActionSpec& action, const std::vector<long>& exponents);

/// Scalar by which a trivial-character monomial acts on the invariant line
/// of a module with one-dimensional trivial component: compose the arrows
/// along the monomial (variables in order, each one exponent-many times).
Rational monomial_action_scalar(const EquivariantModule& m, const std::vector<long>& exponents);

/// The image of the module under the support map to the invariant quotient:
/// each invariant generator evaluated on the invariant line.  Requires a
/// one-dimensional trivial component.
struct QuotientPoint {
    std::vector<std::pair<std::vector<long>, Rational>> coordinates;
};
QuotientPoint hilbert_chow_point(const EquivariantModule& m, const InvariantGenerators& gens);

/// One-step multiplicativity of the action scalars: for every
/// trivial-character monomial t of degree <= bound and every generator g
/// dividing it with trivial quotient, scalar(t) = scalar(g) * scalar(t - g).
/// By induction this makes the scalar of any product of generators
/// independent of the factorization (all binomial relations hold).
bool hilbert_chow_relations_hold(const EquivariantModule& m, const InvariantGenerators& gens);

/// The module of functions on the orbit of a point of affine space under a
/// finite diagonalizable group: one basis vector b_chi per character, with
/// variable i acting by b_chi -> point[i] * b_{chi + weight(i)}.  Every
/// isotypic multiplicity is 1 (the regular representation); the support map
/// of this module evaluates each invariant monomial at the point.
EquivariantModule free_orbit_module(const ActionSpec& action, const std::vector<Rational>& point);

/// Default truncation degree for the invariant-monomial basis: the least
/// common multiple of the cyclic orders times the number of variables.  A
/// heuristic large enough for the pure powers and the small mixed products;
/// invariant_monomial_generators still verifies completeness and fails
/// loudly when the bound is too small.
long default_degree_bound(const ActionSpec& action);

}  // namespace constellab
