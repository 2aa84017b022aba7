#include "constellab/theta.hpp"

namespace constellab {

const char* to_string(Status status) {
    switch (status) {
        case Status::STABLE: return "STABLE";
        case Status::STRICTLY_SEMISTABLE: return "STRICTLY_SEMISTABLE";
        case Status::UNSTABLE: return "UNSTABLE";
        case Status::NO_WITNESS_FOUND: return "NO_WITNESS_FOUND";
    }
    throw InternalError("unknown status");
}

const char* to_string(Exactness exactness) {
    return exactness == Exactness::EXACT ? "EXACT" : "SAMPLED";
}

namespace {

bool equal_pointwise(const HilbertFunction& a, const HilbertFunction& b) {
    return leq_pointwise(a, b) && leq_pointwise(b, a);
}

}  // namespace

StabilityVerdict theta_verdict(const ThetaVector& theta, const HilbertFunction& h,
                               const SubmoduleHilbertSet& subs) {
    const Rational total = pairing(theta, h);
    if (total != 0)
        throw InputError("theta-stability needs <theta, h> = 0, got " + to_string(total));

    StabilityVerdict verdict;
    verdict.exactness = subs.exactness;

    std::optional<Rational> min_value;
    std::optional<HilbertFunction> min_witness;
    std::size_t proper = 0;
    for (const HilbertFunction& sub : subs.functions) {
        if (sub.is_zero() || equal_pointwise(sub, h)) continue;
        if (!leq_pointwise(sub, h))
            throw InputError("sub-Hilbert function exceeds h at some label");
        ++proper;
        const Rational value = pairing(theta, sub);
        if (!min_value || value < *min_value ||
            (value == *min_value && sub < *min_witness)) {
            min_value = value;
            min_witness = sub;
        }
    }
    verdict.candidates_checked = proper;

    if (subs.exactness == Exactness::EXACT) {
        if (!min_value || *min_value > 0) {
            verdict.status = Status::STABLE;
        } else {
            verdict.status =
                (*min_value == 0) ? Status::STRICTLY_SEMISTABLE : Status::UNSTABLE;
            verdict.witness = min_witness;
            verdict.witness_value = min_value;
        }
        return verdict;
    }
    if (min_value && *min_value < 0) {
        verdict.status = Status::UNSTABLE;
        verdict.witness = min_witness;
        verdict.witness_value = min_value;
    } else {
        verdict.status = Status::NO_WITNESS_FOUND;
    }
    return verdict;
}

StabilityVerdict theta_verdict_for_module(const ThetaVector& theta, const EquivariantModule& m,
                                          SubmoduleScope scope,
                                          const EnumerationOptions& options) {
    std::set<IrrepLabel> d_minus;
    for (const IrrepLabel& label : sign_partition(theta).d_minus) d_minus.insert(label);
    const SubmoduleHilbertSet subs =
        enumerate_submodule_hilbert_functions(m, scope, d_minus, options);
    return theta_verdict(theta, m.hilbert_function(), subs);
}

HilbertSchemeModeReport hilbert_scheme_mode_check(const ThetaVector& theta,
                                                  const EquivariantModule& m,
                                                  const EnumerationOptions& options) {
    const SignPartition signs = sign_partition(theta);
    if (signs.d_minus.size() != 1)
        throw InputError("Hilbert-scheme mode needs exactly one label with negative theta, got " +
                         std::to_string(signs.d_minus.size()));
    const IrrepLabel rho0 = signs.d_minus.front();
    if (m.dim_at(rho0) != 1)
        throw InputError("Hilbert-scheme mode needs multiplicity 1 at the negative label '" +
                         to_string(rho0) + "', got " + std::to_string(m.dim_at(rho0)));

    HilbertSchemeModeReport report;
    report.verdict = theta_verdict_for_module(theta, m, SubmoduleScope::Full, options);
    report.cyclic = generated_in_dminus(m, {rho0});
    switch (report.verdict.status) {
        case Status::STABLE:
        case Status::STRICTLY_SEMISTABLE:
        case Status::UNSTABLE:
            report.consistent = ((report.verdict.status == Status::STABLE) == report.cyclic);
            break;
        case Status::NO_WITNESS_FOUND:
            // A sampled run without a witness decides nothing.
            report.consistent = std::nullopt;
            break;
    }
    return report;
}

}  // namespace constellab
