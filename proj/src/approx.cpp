#include "constellab/approx.hpp"

#include <algorithm>

namespace constellab {

namespace {

// Mean of h'(sigma)/h(sigma) over the positive part of the window.
Rational window_average(const GitParameters& params, const HilbertFunction& h,
                        const HilbertFunction& h_prime) {
    Rational sum = 0;
    for (const IrrepLabel& sigma : params.window) {
        if (params.chi.count(sigma)) continue;  // negative label
        sum += h_prime.value_at(sigma) / h.value_at(sigma);
    }
    return sum / Rational(params.d);
}

}  // namespace

WindowErrorReport error_between_windows(const ThetaVector& theta, const HilbertFunction& h,
                                        const HilbertFunction& h_prime,
                                        const std::set<IrrepLabel>& window,
                                        const std::set<IrrepLabel>& window_tilde) {
    if (!std::includes(window_tilde.begin(), window_tilde.end(), window.begin(), window.end()))
        throw InputError("the comparison windows must be nested (D inside D~)");
    const GitParameters inner = derive_parameters(theta, h, window);
    const GitParameters outer = derive_parameters(theta, h, window_tilde);

    const Rational average = window_average(inner, h, h_prime);
    Rational formula = 0;
    for (const IrrepLabel& tau : window_tilde) {
        if (window.count(tau)) continue;
        // tau is a positive label (D contains all negative ones), so the
        // derivation above guaranteed h(tau) >= 1.
        const Rational ratio = h_prime.value_at(tau) / h.value_at(tau);
        formula += (theta.value_at(tau) * h.value_at(tau) + outer.S_D / Rational(outer.d)) *
                   (ratio - average);
    }
    const Rational direct =
        theta_tilde(outer, h, h_prime) - theta_tilde(inner, h, h_prime);
    if (formula != direct)
        throw InternalError("window error formula disagrees with the direct difference: " +
                            to_string(formula) + " vs " + to_string(direct));
    return {direct, formula, direct};
}

ThetaErrorReport error_to_theta(const ThetaVector& theta, const HilbertFunction& h,
                                const HilbertFunction& h_prime,
                                const std::set<IrrepLabel>& window) {
    const GitParameters params = derive_parameters(theta, h, window);
    const Rational average = window_average(params, h, h_prime);
    // sum over tau outside D of theta(tau) h(tau) (h'(tau)/h(tau) - average)
    //   = sum theta h' outside D  -  average * S_D.
    const Rational tail_h_prime = restrict_pairing(theta, h_prime, window).tail_part;
    const Rational formula = tail_h_prime - average * params.S_D;
    const Rational direct = pairing(theta, h_prime) - theta_tilde(params, h, h_prime);
    if (formula != direct)
        throw InternalError("tail error formula disagrees with the direct difference: " +
                            to_string(formula) + " vs " + to_string(direct));
    return {direct, formula, direct};
}

std::set<IrrepLabel> growth_window(const ThetaVector& theta, const HilbertFunction& h,
                                   long index) {
    if (index < 0) throw InputError("window index must be >= 0");
    const GroupSpec& group = theta.group();
    std::set<IrrepLabel> window;
    const auto keep = [&](const IrrepLabel& label) {
        const Rational value = theta.value_at(label);
        if (value < 0)
            window.insert(label);
        else if (value > 0 && h.value_at(label) >= 1)
            window.insert(label);
    };

    if (group.is_sl2()) {
        for (long n = 0; n <= index; ++n) keep(IrrepLabel{n});
        return window;
    }
    // Per-entry ranges: all residues for cyclic factors, [-N, N] for torus
    // factors; walk the product.
    constexpr unsigned long long kWindowCap = 1'000'000;
    std::vector<std::pair<long, long>> ranges;
    unsigned long long size = 1;
    const auto extend = [&](long lo, long hi) {
        ranges.emplace_back(lo, hi);
        const auto span = static_cast<unsigned long long>(hi - lo + 1);
        size = (size > kWindowCap / span) ? kWindowCap + 1 : size * span;
    };
    for (long order : group.cyclic_orders) extend(0, order - 1);
    for (int i = 0; i < group.torus_rank; ++i) extend(-index, index);
    if (size > kWindowCap) throw InputError("growth window too large to enumerate");
    std::vector<long> entry(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) entry[i] = ranges[i].first;
    while (true) {
        keep(IrrepLabel(entry));
        std::size_t k = 0;
        for (; k < ranges.size(); ++k) {
            if (++entry[k] <= ranges[k].second) break;
            entry[k] = ranges[k].first;
        }
        if (k == ranges.size()) break;
    }
    return window;
}

long first_usable_window_index(const ThetaVector& theta, const HilbertFunction& h) {
    const SignPartition signs = sign_partition(theta);
    for (long index = 0; index <= 10000; ++index) {
        const std::set<IrrepLabel> window = growth_window(theta, h, index);
        const bool has_negatives = std::all_of(signs.d_minus.begin(), signs.d_minus.end(),
                                               [&](const IrrepLabel& l) { return window.count(l); });
        if (!has_negatives) continue;
        const bool has_positive =
            std::any_of(window.begin(), window.end(),
                        [&](const IrrepLabel& l) { return theta.value_at(l) > 0; });
        if (has_positive) return index;
    }
    throw InputError("no usable window found: theta has no positive label with multiplicity");
}

LimitReport verify_limit(const ThetaVector& theta, const HilbertFunction& h,
                         const HilbertFunction& h_prime, long max_index, const Rational& bound) {
    if (bound <= 0) throw InputError("the limit bound must be positive");
    const ThetaVector theta_abs = theta.abs_window();
    LimitReport report;
    const long first = first_usable_window_index(theta, h);
    if (max_index < first)
        throw InputError("the growth sequence only becomes usable at index " +
                         std::to_string(first));
    for (long index = first; index <= max_index; ++index) {
        const std::set<IrrepLabel> window = growth_window(theta, h, index);
        LimitRow row;
        row.index = index;
        row.window_size = window.size();
        row.error_abs = abs(error_to_theta(theta, h, h_prime, window).value);
        row.majorant = restrict_pairing(theta_abs, h, window).tail_part;
        if (row.error_abs > row.majorant)
            throw InternalError("exact error exceeds its tail majorant at window index " +
                                std::to_string(index));
        report.rows.push_back(std::move(row));
    }
    report.majorant_nonincreasing = true;
    for (std::size_t i = 1; i < report.rows.size(); ++i)
        if (report.rows[i].majorant > report.rows[i - 1].majorant)
            report.majorant_nonincreasing = false;
    report.final_error_below_bound = report.rows.back().error_abs < bound;
    report.passed = report.majorant_nonincreasing && report.final_error_below_bound;
    return report;
}

WindowChoice choose_window(const ThetaVector& theta, const HilbertFunction& h,
                           const std::vector<HilbertFunction>& candidates,
                           const std::map<IrrepLabel, Rational>& kappa_minus) {
    if (candidates.empty())
        throw InputError("window choice needs at least one candidate sub-Hilbert function");
    std::optional<Rational> theta_min;
    for (const HilbertFunction& candidate : candidates) {
        const Rational value = pairing(theta, candidate);
        if (value <= 0)
            throw InputError("window choice expects every candidate to have theta > 0, got " +
                             to_string(value));
        if (!theta_min || value < *theta_min) theta_min = value;
    }

    const ThetaVector theta_abs = theta.abs_window();
    const long first = first_usable_window_index(theta, h);
    for (long index = first; index <= 10000; ++index) {
        const std::set<IrrepLabel> window = growth_window(theta, h, index);
        const Rational majorant = restrict_pairing(theta_abs, h, window).tail_part;
        if (majorant >= *theta_min) continue;
        WindowChoice choice;
        choice.index = index;
        choice.window = window;
        choice.theta_min = *theta_min;
        choice.majorant = majorant;
        choice.parameters = derive_parameters(theta, h, window, kappa_minus);
        for (const HilbertFunction& candidate : candidates) {
            const Rational value = theta_tilde(choice.parameters, h, candidate);
            if (value <= 0)
                throw InternalError(
                    "window certificate failed: theta~ is not positive on a candidate "
                    "although the majorant is below the least theta-value");
            choice.certificate.emplace_back(candidate, value);
        }
        return choice;
    }
    throw InternalError("window growth guard exceeded while the majorant stayed too large");
}

}  // namespace constellab
