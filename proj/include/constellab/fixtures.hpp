#pragma once

#include <random>

#include "constellab/git.hpp"

namespace constellab::fixtures {

/// A fully specified instance: an action, a module, a stability parameter
/// pairing to zero against the module's Hilbert function, a derivation
/// window and the free kappa choices.  Used by the self-test suites, the
/// test binaries and the acceptance gate.
struct Instance {
    std::string name;
    ActionSpec action;
    EquivariantModule module;
    ThetaVector theta;
    std::set<IrrepLabel> window;
    std::map<IrrepLabel, Rational> kappa_minus;
};

ActionSpec z3_action();     // Z/3, weights x: 2, y: 1
ActionSpec z2_action();     // Z/2, weights x: 1, y: 1
ActionSpec z2z2_action();   // Z/2 x Z/2, weights x: (1,0), y: (0,1)
ActionSpec torus_action();  // rank-1 torus, weights x: +1, y: -1

Instance z3_free_orbit();   // x acts invertibly, y by zero; theta = (-2,-1,3)
Instance z3_nilpotent();    // x nilpotent of order 3, y zero; same theta
Instance z3_ghilb_free();   // free-orbit module with theta = (-2,1,1)
Instance z2_orbit();        // orbit through (1,0); theta = (-1,1)
Instance z2z2_orbit();      // orbit through (1,1); theta = (-3,1,1,1)
Instance z2_rank2();        // multiplicities (2,1): exercises sampled paths
Instance torus_chain();     // cells 1,x,x^2 on the torus; geometric theta tail

std::vector<Instance> corpus();

/// Window-approximation fixtures on the rank-1 torus (no module): theta
/// pairing to zero against h = 1 everywhere, h' = indicator of n >= 1.
struct TorusApprox {
    ThetaVector theta;
    HilbertFunction h;
    HilbertFunction h_prime;
};
/// theta(0) = -2, both tails geometric 1*(1/2)^|n|; every window error is 0.
TorusApprox torus_symmetric();
/// theta(0) = -3/2, tails (1/2)^n up, (1/3)^|n| down; the window [-N,N]
/// misses theta by exactly 2^(-N-1) - 3^(-N)/4.
TorusApprox torus_asymmetric();

/// A deterministic random admissible instance: a staircase module
/// conjugated by random graded basis changes, theta negative on the trivial
/// character (so the module is generated at the negative labels) and
/// adjusted on one positive label to pair to zero, derived parameters, and
/// a presentation with random invertible frames.
struct RandomInstance {
    Instance instance;
    QuotientPresentation presentation;
    GitParameters parameters;
};
RandomInstance random_admissible_instance(std::mt19937_64& rng);
/// Same, retried until every isotypic multiplicity is <= 1 (exact verdicts).
RandomInstance random_multfree_instance(std::mt19937_64& rng);

/// A random weight decomposition of the presentation's generating space
/// with >= 2 distinct weights (columns of random invertible graded
/// matrices, grouped by random weights in {-1, 0, 1}).
Filtration random_filtration(std::mt19937_64& rng, const QuotientPresentation& p);

/// A random proper nonzero graded subspace of the generating space together
/// with a complement (a column split of random invertible graded matrices).
struct SplitSubspace {
    GradedSubspace part;
    GradedSubspace complement;
};
SplitSubspace random_split(std::mt19937_64& rng, const QuotientPresentation& p);

}  // namespace constellab::fixtures
