#pragma once

#include "constellab/git.hpp"

namespace constellab {

/// theta~_{D~}(h') - theta~_D(h') for nested windows D <= D~, computed two
/// independent ways: by the closed formula over D~ \ D, and as the direct
/// difference of the two derived approximations.  The two must agree
/// exactly; the common value is returned.
struct WindowErrorReport {
    Rational value;
    Rational formula_value;
    Rational direct_difference;
};
WindowErrorReport error_between_windows(const ThetaVector& theta, const HilbertFunction& h,
                                        const HilbertFunction& h_prime,
                                        const std::set<IrrepLabel>& window,
                                        const std::set<IrrepLabel>& window_tilde);

/// theta(h') - theta~_D(h'): the full stability value minus its window
/// approximation, again via the closed tail formula and directly.
struct ThetaErrorReport {
    Rational value;
    Rational formula_value;
    Rational direct_difference;
};
ThetaErrorReport error_to_theta(const ThetaVector& theta, const HilbertFunction& h,
                                const HilbertFunction& h_prime,
                                const std::set<IrrepLabel>& window);

/// Canonical window growth: the N-th window is the box of labels with every
/// torus entry in [-N, N] (cyclic entries range over all residues; SL2 uses
/// {0..N}), keeping the labels where theta is negative, or theta is positive
/// and h is nonzero.  Labels with theta = 0 or with no multiplicity never
/// help the approximation and are excluded.
std::set<IrrepLabel> growth_window(const ThetaVector& theta, const HilbertFunction& h, long index);

/// Smallest index whose growth window contains every negative label and at
/// least one positive one (the first window usable for derivation).
long first_usable_window_index(const ThetaVector& theta, const HilbertFunction& h);

/// Error-vs-majorant table along the growth sequence.  For each window the
/// exact error |theta(h') - theta~(h')| is checked against the tail
/// majorant sum_{tau outside D} |theta(tau)| h(tau); the run passes when the
/// majorants never increase and the final error is below the bound.
struct LimitRow {
    long index = 0;
    std::size_t window_size = 0;
    Rational error_abs;
    Rational majorant;
};
struct LimitReport {
    std::vector<LimitRow> rows;
    bool majorant_nonincreasing = false;
    bool final_error_below_bound = false;
    bool passed = false;
};
LimitReport verify_limit(const ThetaVector& theta, const HilbertFunction& h,
                         const HilbertFunction& h_prime, long max_index, const Rational& bound);

/// Walk the growth sequence until the tail majorant drops below the least
/// theta-value among the candidate sub-Hilbert functions (all must be
/// positive).  On that window every candidate's approximation is positive
/// too — certified exactly and returned with the derived parameters.
struct WindowChoice {
    long index = 0;
    std::set<IrrepLabel> window;
    Rational theta_min;
    Rational majorant;
    GitParameters parameters;
    std::vector<std::pair<HilbertFunction, Rational>> certificate;  // candidate -> theta~
};
WindowChoice choose_window(const ThetaVector& theta, const HilbertFunction& h,
                           const std::vector<HilbertFunction>& candidates,
                           const std::map<IrrepLabel, Rational>& kappa_minus = {});

}  // namespace constellab
