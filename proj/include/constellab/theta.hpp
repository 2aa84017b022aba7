#pragma once

#include <optional>

#include "constellab/equivariant.hpp"
#include "constellab/isotypic.hpp"

namespace constellab {

/// Outcome of a stability check.  NO_WITNESS_FOUND is reserved for sampled
/// enumerations that found no destabilizer: a sample can certify UNSTABLE
/// (the witness is a certificate) but can never certify the universally
/// quantified STABLE or STRICTLY_SEMISTABLE.
enum class Status { STABLE, STRICTLY_SEMISTABLE, UNSTABLE, NO_WITNESS_FOUND };

const char* to_string(Status status);
const char* to_string(Exactness exactness);

struct StabilityVerdict {
    Status status = Status::NO_WITNESS_FOUND;
    Exactness exactness = Exactness::SAMPLED;
    /// Minimizing proper nonzero sub-Hilbert function (absent when no
    /// witness is reported); ties broken by the canonical order on
    /// Hilbert functions, so verdicts are deterministic.
    std::optional<HilbertFunction> witness;
    std::optional<Rational> witness_value;  // <theta, witness>
    std::size_t candidates_checked = 0;
};

/// Verdict of theta-(semi)stability for a module with Hilbert function h,
/// quantified over the given sub-Hilbert functions (0 and h itself are
/// skipped: only proper nonzero submodules count).  Precondition:
/// <theta, h> = 0; violating it is an input error reporting the exact value.
StabilityVerdict theta_verdict(const ThetaVector& theta, const HilbertFunction& h,
                               const SubmoduleHilbertSet& subs);

/// Convenience: enumerate the module's submodules, then run theta_verdict.
/// `scope` selects the search space; by the generation theorem, submodules
/// generated in D_- suffice once <theta, h> = 0.
StabilityVerdict theta_verdict_for_module(const ThetaVector& theta, const EquivariantModule& m,
                                          SubmoduleScope scope,
                                          const EnumerationOptions& options = {});

/// Specialization check for the Hilbert-scheme situation: h(rho0) = 1 at the
/// unique negative label rho0.  Stability is then equivalent to the module
/// being generated by its (one-dimensional) component at rho0.
struct HilbertSchemeModeReport {
    StabilityVerdict verdict;  // from full submodule enumeration
    bool cyclic = false;       // generated by the component at rho0
    /// Agreement of the two characterizations when the verdict is decisive;
    /// empty when a sampled run found no witness.
    std::optional<bool> consistent;
};

HilbertSchemeModeReport hilbert_scheme_mode_check(const ThetaVector& theta,
                                                  const EquivariantModule& m,
                                                  const EnumerationOptions& options = {});

}  // namespace constellab
