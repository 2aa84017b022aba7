#pragma once

#include <map>
#include <set>

#include "constellab/theta.hpp"

namespace constellab {

/// The linearization data derived from (theta, h) on a finite window D:
/// Grassmannian twists kappa on D and character chi on D_-.  Produced by
/// derive_parameters; all downstream weights are computed from these.
struct GitParameters {
    std::set<IrrepLabel> window;            // D, finite, D_- <= D <= D_- u D_+
    std::vector<IrrepLabel> d_minus;        // sorted; every label with theta < 0
    std::map<IrrepLabel, Rational> kappa;   // on D (positive)
    std::map<IrrepLabel, Rational> chi;     // on D_- (admissible: sum chi*h = 0)
    long dim_A = 0;                         // sum of h over D_-
    Rational kappa_F;                       // sum of kappa*h over D
    Rational S_D;                           // sum of theta*h outside D
    long d = 0;                             // |D \ D_-|
    std::map<IrrepLabel, Rational> h_window;  // h restricted to D (consistency checks)
    /// Minimal positive integer t with t*kappa and t*chi all integral; the
    /// integral linearization is the t-th power, reported, never applied.
    mpz_class integrality_scale;

    Rational kappa_over_dim() const;  // kappa_F / dim_A

    bool operator==(const GitParameters&) const = default;
};

/// Derive kappa and chi from (theta, h) on the window D.  kappa on D_- is
/// a free positive choice (default 1 at every label); kappa on D \ D_- and
/// chi on D_- are determined by theta, h and the tail sum S_D.
/// Preconditions: <theta, h> = 0; D finite with D_- <= D <= D_- u D_+;
/// h(sigma) >= 1 and theta(sigma) > 0 for sigma in D \ D_-; d >= 1;
/// dim_A >= 1.
GitParameters derive_parameters(const ThetaVector& theta, const HilbertFunction& h,
                                const std::set<IrrepLabel>& window,
                                const std::map<IrrepLabel, Rational>& kappa_minus = {});

/// The window approximation of theta defined by the parameters:
/// theta~(h') = sum over D_- of (kappa + chi - kappa_F/dim_A) h'
///            + sum over D \ D_- of kappa h'.
/// Requires h' <= h pointwise (h is implicit in the parameters' derivation;
/// the caller passes it for the check).
Rational theta_tilde(const GitParameters& params, const HilbertFunction& h,
                     const HilbertFunction& h_prime);

/// theta~ materialized as a zero-tail theta vector supported on D; its
/// pairing against any h' equals theta_tilde, and its negative part is
/// exactly d_minus.
ThetaVector theta_tilde_vector(const GitParameters& params, const GroupSpec& group);

/// One-parameter-subgroup weight of the single-step filtration by a proper
/// nonzero graded subspace A' of A:
///   mu(A') = dim_A * (kappa(F') + chi(A')) - dim(A') * kappa_F,
/// where F' is the submodule generated by the frames' image of A'.
struct OneStepWeight {
    Rational mu;
    Rational kappa_F_prime;             // kappa(F') over D
    Rational chi_A_prime;               // chi(A')
    long dim_A_prime = 0;
    HilbertFunction closure_dims;       // Hilbert function of F'
};
OneStepWeight mu_one_step(const QuotientPresentation& p, const GitParameters& params,
                          const GradedSubspace& a_prime);

/// A weight decomposition A = (+) A^n of the generating space (a
/// one-parameter subgroup of the gauge group up to conjugation).  Pieces
/// must be independent, span every component, and use >= 2 distinct weights.
struct Filtration {
    std::map<long, GradedSubspace> pieces;  // weight -> A^n
};

/// Mumford weight of a filtration, computed two ways and cross-checked:
/// graded:     sum_n n * (kappa(F^[n]) + chi(A^n))
/// telescoped: sum_{n=min+1}^{max} (kappa(F^{>=n}) + chi(A^{>=n})) + min * kappa_F
/// (equal whenever chi is admissible, which derive_parameters guarantees).
struct FiltrationWeight {
    Rational mu;
    std::map<long, Rational> graded_terms;      // n -> n*(kappa(F^[n]) + chi(A^n))
    std::map<long, Rational> telescoped_terms;  // n -> kappa(F^{>=n}) + chi(A^{>=n})
};
FiltrationWeight mu_filtration(const QuotientPresentation& p, const GitParameters& params,
                               const Filtration& f);

/// Saturation of a graded subspace A' of A: A~'_rho is the frame preimage
/// of the rho-piece of the submodule generated by A'.  A' <= A~' and both
/// generate the same submodule.
struct Saturation {
    GradedSubspace saturated;      // A~'
    GradedSubspace closure;        // F' = submodule generated by phi(A')
    HilbertFunction closure_dims;  // Hilbert function of F'
};
Saturation saturate(const QuotientPresentation& p, const GradedSubspace& a_prime);

/// GIT (semi)stability via the one-step criterion over graded subspaces of
/// A.  EXACT when A is multiplicity-free over the generator labels (all
/// graded subspaces are coordinate subspaces); SAMPLED otherwise.
struct GitVerdict {
    Status status = Status::NO_WITNESS_FOUND;
    Exactness exactness = Exactness::SAMPLED;
    std::optional<GradedSubspace> witness;        // minimizing A'
    std::optional<Rational> witness_mu;
    std::optional<HilbertFunction> witness_closure;
    std::size_t candidates_checked = 0;
};
GitVerdict git_verdict(const QuotientPresentation& p, const GitParameters& params,
                       const EnumerationOptions& options = {});

/// Deterministic total order on graded subspaces for witness tie-breaking.
bool graded_less(const GradedSubspace& a, const GradedSubspace& b);

}  // namespace constellab
