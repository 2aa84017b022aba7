#include "constellab/git.hpp"

#include <algorithm>

namespace constellab {

Rational GitParameters::kappa_over_dim() const {
    if (dim_A == 0) throw InternalError("kappa_over_dim with dim_A = 0");
    return kappa_F / Rational(dim_A);
}

GitParameters derive_parameters(const ThetaVector& theta, const HilbertFunction& h,
                                const std::set<IrrepLabel>& window,
                                const std::map<IrrepLabel, Rational>& kappa_minus) {
    const Rational total = pairing(theta, h);
    if (total != 0)
        throw InputError("parameter derivation needs <theta, h> = 0, got " + to_string(total));

    GitParameters params;
    params.window = window;
    for (const IrrepLabel& label : sign_partition(theta).d_minus) {
        if (!window.count(label))
            throw InputError("window must contain every negative label; missing '" +
                             to_string(label) + "'");
        params.d_minus.push_back(label);
    }
    const std::set<IrrepLabel> d_minus_set(params.d_minus.begin(), params.d_minus.end());

    for (const auto& [label, value] : kappa_minus) {
        if (!d_minus_set.count(label))
            throw InputError("kappa may only be chosen at negative labels, got '" +
                             to_string(label) + "'");
        if (value <= 0)
            throw InputError("kappa at '" + to_string(label) + "' must be positive, got " +
                             to_string(value));
    }

    params.S_D = restrict_pairing(theta, h, window).tail_part;
    if (params.S_D < 0)
        throw InternalError("tail sum S_D is negative although all negative labels lie in D");

    for (const IrrepLabel& sigma : window) {
        if (d_minus_set.count(sigma)) continue;
        const Rational theta_sigma = theta.value_at(sigma);
        if (theta_sigma <= 0)
            throw InputError("window label '" + to_string(sigma) +
                             "' has theta = " + to_string(theta_sigma) +
                             "; D may only contain negative and positive labels");
        if (h.value_at(sigma) < 1)
            throw InputError("window label '" + to_string(sigma) +
                             "' has multiplicity 0; positive window labels need h >= 1");
        params.d += 1;
    }
    if (params.d < 1)
        throw InputError("the window must contain at least one positive label (d >= 1)");

    for (const IrrepLabel& sigma : window) {
        if (d_minus_set.count(sigma)) continue;
        params.kappa[sigma] =
            theta.value_at(sigma) + params.S_D / (Rational(params.d) * h.value_at(sigma));
        if (params.kappa[sigma] <= 0)
            throw InternalError("derived kappa is not positive at '" + to_string(sigma) + "'");
    }
    for (const IrrepLabel& rho : params.d_minus) {
        const auto it = kappa_minus.find(rho);
        params.kappa[rho] = it == kappa_minus.end() ? Rational(1) : it->second;
        params.dim_A += to_long(h.value_at(rho));
    }
    if (params.dim_A < 1)
        throw InputError("no multiplicity at any negative label; the generating space is zero");

    params.kappa_F = 0;
    for (const auto& [label, value] : params.kappa) params.kappa_F += value * h.value_at(label);

    const Rational ratio = params.kappa_over_dim();
    Rational admissibility = 0;
    for (const IrrepLabel& rho : params.d_minus) {
        params.chi[rho] = theta.value_at(rho) - params.kappa[rho] + ratio;
        if (params.chi[rho] >= ratio)
            throw InternalError("derived chi is not below kappa_F/dim_A at '" + to_string(rho) +
                                "'");
        admissibility += params.chi[rho] * h.value_at(rho);
    }
    if (admissibility != 0)
        throw InternalError("derived chi is not admissible: sum chi*h = " +
                            to_string(admissibility));

    for (const IrrepLabel& label : window) params.h_window[label] = h.value_at(label);

    std::vector<Rational> values;
    for (const auto& [label, value] : params.kappa) values.push_back(value);
    for (const auto& [label, value] : params.chi) values.push_back(value);
    params.integrality_scale = common_denominator(values);
    return params;
}

Rational theta_tilde(const GitParameters& params, const HilbertFunction& h,
                     const HilbertFunction& h_prime) {
    if (!leq_pointwise(h_prime, h))
        throw InputError("theta~ is evaluated on sub-Hilbert functions (h' <= h pointwise)");
    const Rational ratio = params.kappa_over_dim();
    Rational value = 0;
    for (const IrrepLabel& rho : params.d_minus)
        value += (params.kappa.at(rho) + params.chi.at(rho) - ratio) * h_prime.value_at(rho);
    for (const IrrepLabel& sigma : params.window) {
        if (params.chi.count(sigma)) continue;
        value += params.kappa.at(sigma) * h_prime.value_at(sigma);
    }
    return value;
}

ThetaVector theta_tilde_vector(const GitParameters& params, const GroupSpec& group) {
    const Rational ratio = params.kappa_over_dim();
    std::map<IrrepLabel, Rational> window;
    for (const IrrepLabel& sigma : params.window) window[sigma] = params.kappa.at(sigma);
    for (const IrrepLabel& rho : params.d_minus)
        window[rho] = params.kappa.at(rho) + params.chi.at(rho) - ratio;
    return ThetaVector::make(group, std::move(window));
}

namespace {

void check_compatibility(const QuotientPresentation& p, const GitParameters& params) {
    const std::set<IrrepLabel> from_params(params.d_minus.begin(), params.d_minus.end());
    if (p.d_minus() != from_params)
        throw InputError("presentation and parameters disagree on the negative labels");
    if (p.dim_A() != params.dim_A)
        throw InputError("presentation and parameters disagree on dim A (" +
                         std::to_string(p.dim_A()) + " vs " + std::to_string(params.dim_A) +
                         ")");
    for (const auto& [label, value] : params.h_window)
        if (Rational(p.module().dim_at(label)) != value)
            throw InputError("parameters were derived for a different Hilbert function: at '" +
                             to_string(label) + "' the module has dimension " +
                             std::to_string(p.module().dim_at(label)) + ", the parameters used " +
                             to_string(value));
}

void check_graded_subspace_of_A(const QuotientPresentation& p, const GradedSubspace& a) {
    for (const auto& [label, space] : a) {
        if (!p.d_minus().count(label) || p.module().dim_at(label) == 0)
            throw InputError("graded subspace has a piece at '" + to_string(label) +
                             "', which is not a generator label");
        if (space.ambient_dim() != static_cast<std::size_t>(p.module().dim_at(label)))
            throw InputError("graded subspace piece at '" + to_string(label) +
                             "' has the wrong ambient dimension");
    }
}

Rational kappa_of_dims(const GitParameters& params, const HilbertFunction& dims) {
    Rational value = 0;
    for (const auto& [label, kappa] : params.kappa) value += kappa * dims.value_at(label);
    return value;
}

Rational chi_of(const GitParameters& params, const GradedSubspace& a) {
    Rational value = 0;
    for (const auto& [label, space] : a) {
        const auto it = params.chi.find(label);
        if (it != params.chi.end()) value += it->second * Rational(space.dim());
    }
    return value;
}

}  // namespace

OneStepWeight mu_one_step(const QuotientPresentation& p, const GitParameters& params,
                          const GradedSubspace& a_prime) {
    check_compatibility(p, params);
    check_graded_subspace_of_A(p, a_prime);
    const long dim_sub = graded_total_dim(a_prime);
    if (dim_sub == 0) throw InputError("mu needs a nonzero graded subspace");
    if (dim_sub >= params.dim_A) throw InputError("mu needs a proper graded subspace");

    OneStepWeight w;
    w.dim_A_prime = dim_sub;
    const GradedSubspace closure = submodule_generated(p.module(), p.embed(a_prime));
    w.closure_dims = graded_dims(p.module(), closure);
    w.kappa_F_prime = kappa_of_dims(params, w.closure_dims);
    w.chi_A_prime = chi_of(params, a_prime);
    w.mu = Rational(params.dim_A) * (w.kappa_F_prime + w.chi_A_prime) -
           Rational(dim_sub) * params.kappa_F;
    return w;
}

FiltrationWeight mu_filtration(const QuotientPresentation& p, const GitParameters& params,
                               const Filtration& f) {
    check_compatibility(p, params);
    if (!p.generated_in_dminus_flag())
        throw InputError(
            "the telescoped weight normalizes by kappa(F); the module must be generated at "
            "the negative labels");
    if (f.pieces.size() < 2)
        throw InputError("a filtration must use at least two distinct weights");
    if (f.pieces.rbegin()->first - f.pieces.begin()->first > 10000)
        throw InputError("filtration weight range is too wide");

    // Validate: the pieces decompose every generator component.
    for (const auto& [weight, piece] : f.pieces) check_graded_subspace_of_A(p, piece);
    for (const IrrepLabel& label : p.generator_labels()) {
        const auto ambient = static_cast<std::size_t>(p.module().dim_at(label));
        std::size_t dim_total = 0;
        Subspace sum = Subspace::zero(ambient);
        for (const auto& [weight, piece] : f.pieces) {
            const auto it = piece.find(label);
            if (it == piece.end()) continue;
            dim_total += it->second.dim();
            sum = sum.sum(it->second);
        }
        if (dim_total != ambient || sum.dim() != ambient)
            throw InputError("filtration pieces at '" + to_string(label) +
                             "' do not decompose the component (dimensions " +
                             std::to_string(dim_total) + " summing to rank " +
                             std::to_string(sum.dim()) + " of " + std::to_string(ambient) + ")");
    }

    // Cumulative subspaces A^{>=n} from the top weight down, with the
    // submodules F^{>=n} they generate.
    const long w_min = f.pieces.begin()->first;
    const long w_max = f.pieces.rbegin()->first;
    std::map<long, Rational> kappa_ge;  // weight -> kappa(F^{>=w}) at present weights
    std::map<long, Rational> chi_ge;    // weight -> chi(A^{>=w})
    {
        GradedSubspace cumulative;
        Rational chi_running = 0;
        for (auto it = f.pieces.rbegin(); it != f.pieces.rend(); ++it) {
            for (const auto& [label, space] : it->second) {
                auto [slot, inserted] = cumulative.emplace(label, space);
                if (!inserted) slot->second = slot->second.sum(space);
            }
            chi_running += chi_of(params, it->second);
            const GradedSubspace closure = submodule_generated(p.module(), p.embed(cumulative));
            kappa_ge[it->first] = kappa_of_dims(params, graded_dims(p.module(), closure));
            chi_ge[it->first] = chi_running;
        }
    }
    // Value at an arbitrary integer n: the data of the smallest present
    // weight >= n (empty above the top weight).
    const auto at_or_above = [&](const std::map<long, Rational>& table, long n) -> Rational {
        const auto it = table.lower_bound(n);
        return it == table.end() ? Rational(0) : it->second;
    };

    FiltrationWeight result;
    Rational graded = 0;
    for (const auto& [weight, piece] : f.pieces) {
        const Rational kappa_level =
            at_or_above(kappa_ge, weight) - at_or_above(kappa_ge, weight + 1);
        const Rational term = Rational(weight) * (kappa_level + chi_of(params, piece));
        result.graded_terms[weight] = term;
        graded += term;
    }
    Rational telescoped = Rational(w_min) * params.kappa_F;
    for (long n = w_min + 1; n <= w_max; ++n) {
        const Rational term = at_or_above(kappa_ge, n) + at_or_above(chi_ge, n);
        result.telescoped_terms[n] = term;
        telescoped += term;
    }
    if (graded != telescoped)
        throw InternalError("graded and telescoped weights disagree: " + to_string(graded) +
                            " vs " + to_string(telescoped));
    result.mu = graded;
    return result;
}

Saturation saturate(const QuotientPresentation& p, const GradedSubspace& a_prime) {
    check_graded_subspace_of_A(p, a_prime);
    Saturation s;
    s.closure = submodule_generated(p.module(), p.embed(a_prime));
    s.closure_dims = graded_dims(p.module(), s.closure);
    s.saturated = p.pull_back(s.closure);
    if (!graded_contains(s.saturated, a_prime))
        throw InternalError("saturation does not contain the original subspace");
    const GradedSubspace regenerated = submodule_generated(p.module(), p.embed(s.saturated));
    if (!graded_equal(regenerated, s.closure))
        throw InternalError("saturation generates a different submodule");
    return s;
}

bool graded_less(const GradedSubspace& a, const GradedSubspace& b) {
    auto ai = a.begin();
    auto bi = b.begin();
    for (; ai != a.end() && bi != b.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (!(ai->second == bi->second)) return ai->second < bi->second;
    }
    return a.size() < b.size();
}

GitVerdict git_verdict(const QuotientPresentation& p, const GitParameters& params,
                       const EnumerationOptions& options) {
    check_compatibility(p, params);

    GitVerdict verdict;
    std::optional<Rational> min_mu;
    std::optional<GradedSubspace> min_witness;
    std::optional<HilbertFunction> min_closure;
    std::size_t count = 0;

    const auto consider = [&](const GradedSubspace& candidate) {
        const long dim_sub = graded_total_dim(candidate);
        if (dim_sub == 0 || dim_sub >= params.dim_A) return;
        const OneStepWeight w = mu_one_step(p, params, candidate);
        ++count;
        if (!min_mu || w.mu < *min_mu ||
            (w.mu == *min_mu && graded_less(candidate, *min_witness))) {
            min_mu = w.mu;
            min_witness = candidate;
            min_closure = w.closure_dims;
        }
    };

    std::vector<std::pair<IrrepLabel, long>> dims;
    std::map<IrrepLabel, long> sample_dims;
    bool multiplicity_free = true;
    for (const IrrepLabel& label : p.generator_labels()) {
        const long dim = p.module().dim_at(label);
        dims.emplace_back(label, dim);
        sample_dims.emplace(label, dim);
        if (dim > 1) multiplicity_free = false;
    }

    if (multiplicity_free) {
        // Each piece is 0- or 1-dimensional, so coordinate subspaces are all
        // graded subspaces and the enumeration is exhaustive.
        verdict.exactness = Exactness::EXACT;
        if (dims.size() >= 63 || (1ULL << dims.size()) > options.cap)
            throw InputError("graded subspace enumeration needs 2^" +
                             std::to_string(dims.size()) + " candidates, exceeding the cap of " +
                             std::to_string(options.cap) + "; raise --cap if this is intended");
        for (std::uint64_t mask = 0; mask < (1ULL << dims.size()); ++mask) {
            GradedSubspace candidate;
            for (std::size_t i = 0; i < dims.size(); ++i)
                if (mask & (1ULL << i)) candidate.emplace(dims[i].first, Subspace::full(1));
            consider(candidate);
        }
    } else {
        verdict.exactness = Exactness::SAMPLED;
        std::size_t walked = 0;
        for (CoordinateSubspaceWalker walker(dims); !walker.done() && walked < options.cap;
             walker.advance(), ++walked)
            consider(walker.current());
        std::mt19937_64 rng(options.seed);
        for (std::size_t i = 0; i < options.random_samples; ++i)
            consider(random_graded_subspace(rng, sample_dims));
    }
    verdict.candidates_checked = count;

    if (verdict.exactness == Exactness::EXACT) {
        if (!min_mu || *min_mu > 0) {
            verdict.status = Status::STABLE;
        } else {
            verdict.status = (*min_mu == 0) ? Status::STRICTLY_SEMISTABLE : Status::UNSTABLE;
            verdict.witness = min_witness;
            verdict.witness_mu = min_mu;
            verdict.witness_closure = min_closure;
        }
        return verdict;
    }
    if (min_mu && *min_mu < 0) {
        verdict.status = Status::UNSTABLE;
        verdict.witness = min_witness;
        verdict.witness_mu = min_mu;
        verdict.witness_closure = min_closure;
    } else {
        verdict.status = Status::NO_WITNESS_FOUND;
    }
    return verdict;
}

}  // namespace constellab
