#include "constellab/quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace constellab {

namespace {

// Graded-lexicographic order on exponent vectors.
bool graded_lex_less(const std::vector<long>& a, const std::vector<long>& b) {
    const long da = std::accumulate(a.begin(), a.end(), 0L);
    const long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da < db;
    return a < b;
}

IrrepLabel monomial_character(const ActionSpec& action, const std::vector<long>& exponents) {
    IrrepLabel character = trivial_label(action.group);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t k = 0; k < character.entries.size(); ++k)
            character.entries[k] += exponents[i] * action.variable_weights[i].entries[k];
    return reduce_label(action.group, std::move(character));
}

bool divides(const std::vector<long>& a, const std::vector<long>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

std::vector<long> subtract(const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

// All trivial-character exponent vectors with 1 <= total degree <= bound,
// in graded-lexicographic order.
std::vector<std::vector<long>> trivial_monomials(const ActionSpec& action, long bound) {
    const std::size_t n = action.variable_count();
    std::vector<std::vector<long>> found;
    std::vector<long> exponents(n, 0);
    const std::function<void(std::size_t, long)> walk = [&](std::size_t i, long remaining) {
        if (i == n) {
            if (std::accumulate(exponents.begin(), exponents.end(), 0L) == 0) return;
            if (monomial_character(action, exponents) == trivial_label(action.group))
                found.push_back(exponents);
            return;
        }
        for (long e = 0; e <= remaining; ++e) {
            exponents[i] = e;
            walk(i + 1, remaining - e);
        }
        exponents[i] = 0;
    };
    walk(0, bound);
    std::sort(found.begin(), found.end(), graded_lex_less);
    return found;
}

}  // namespace

InvariantGenerators invariant_monomial_generators(const ActionSpec& action, long degree_bound) {
    if (degree_bound < 1) throw InputError("the generator degree bound must be >= 1");
    if (degree_bound > 40) throw InputError("the generator degree bound is too large");

    // Monoid elements one degree past the bound, for the completeness check.
    const std::vector<std::vector<long>> monoid = trivial_monomials(action, degree_bound + 1);

    InvariantGenerators gens;
    gens.degree_bound = degree_bound;
    for (const std::vector<long>& candidate : monoid) {
        if (std::accumulate(candidate.begin(), candidate.end(), 0L) > degree_bound) continue;
        // Irreducible iff no other nonzero monoid element divides it (the
        // quotient is automatically back in the monoid).
        const bool reducible = std::any_of(monoid.begin(), monoid.end(), [&](const auto& f) {
            return f != candidate && divides(f, candidate);
        });
        if (!reducible) gens.exponents.push_back(candidate);
    }

    // Completeness: everything in the monoid up to bound + 1 must decompose
    // into the generators found; a failure means the bound truncated the
    // Hilbert basis.
    std::set<std::vector<long>> generated;
    bool grew = true;
    while (grew) {
        grew = false;
        for (const std::vector<long>& element : monoid) {
            if (generated.count(element)) continue;
            for (const std::vector<long>& g : gens.exponents) {
                if (!divides(g, element)) continue;
                const std::vector<long> rest = subtract(element, g);
                const bool rest_done =
                    std::accumulate(rest.begin(), rest.end(), 0L) == 0 || generated.count(rest);
                if (rest_done) {
                    generated.insert(element);
                    grew = true;
                    break;
                }
            }
        }
    }
    for (const std::vector<long>& element : monoid)
        if (!generated.count(element))
            throw InputError("degree bound " + std::to_string(degree_bound) +
                             " is too small: the invariant monomial " +
                             monomial_to_string(action, element) +
                             " is not a product of the generators found; raise the bound");
    return gens;
}

std::string monomial_to_string(const ActionSpec& action, const std::vector<long>& exponents) {
    if (exponents.size() != action.variable_count())
        throw InputError("monomial has the wrong number of exponents");
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        if (!first) out << '*';
        out << action.variable_names[i];
        if (exponents[i] > 1) out << '^' << exponents[i];
        first = false;
    }
    if (first) out << '1';
    return out.str();
}

Rational monomial_action_scalar(const EquivariantModule& m, const std::vector<long>& exponents) {
    const ActionSpec& action = m.action();
    if (exponents.size() != action.variable_count())
        throw InputError("monomial has the wrong number of exponents");
    const IrrepLabel rho0 = trivial_label(action.group);
    if (m.dim_at(rho0) != 1)
        throw InputError("the support map needs a one-dimensional trivial component, got " +
                         std::to_string(m.dim_at(rho0)));
    if (monomial_character(action, exponents) != rho0)
        throw InputError("monomial " + monomial_to_string(action, exponents) +
                         " does not have trivial character");

    IrrepLabel position = rho0;
    std::vector<Rational> vector{Rational(1)};
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        for (long step = 0; step < exponents[i]; ++step) {
            const QMatrix* arrow = m.arrow(i, position);
            position = m.target_of(i, position);
            if (!arrow || m.dim_at(position) == 0) {
                // The vector dies: the scalar is zero.
                return 0;
            }
            vector = arrow->apply(vector);
            if (std::all_of(vector.begin(), vector.end(),
                            [](const Rational& x) { return x == 0; }))
                return 0;
        }
    }
    if (position != rho0) throw InternalError("trivial monomial did not return to the origin");
    if (vector.size() != 1) throw InternalError("invariant line has unexpected dimension");
    return vector[0];
}

QuotientPoint hilbert_chow_point(const EquivariantModule& m, const InvariantGenerators& gens) {
    QuotientPoint point;
    for (const std::vector<long>& g : gens.exponents)
        point.coordinates.emplace_back(g, monomial_action_scalar(m, g));
    return point;
}

EquivariantModule free_orbit_module(const ActionSpec& action, const std::vector<Rational>& point) {
    if (!action.group.is_finite())
        throw InputError("orbit modules need a finite group (finitely many characters)");
    if (point.size() != action.variable_count())
        throw InputError("the orbit point needs one coordinate per variable, got " +
                         std::to_string(point.size()) + " for " +
                         std::to_string(action.variable_count()));

    const std::vector<IrrepLabel> characters = all_labels(action.group);
    std::map<IrrepLabel, long> dims;
    for (const IrrepLabel& chi : characters) dims[chi] = 1;

    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    for (std::size_t i = 0; i < action.variable_count(); ++i) {
        if (point[i] == 0) continue;
        for (const IrrepLabel& chi : characters) {
            QMatrix scalar(1, 1);
            scalar.at(0, 0) = point[i];
            arrows[{i, chi}] = scalar;
        }
    }
    return EquivariantModule::make(action, std::move(dims), std::move(arrows));
}

long default_degree_bound(const ActionSpec& action) {
    long result = 1;
    for (long order : action.group.cyclic_orders) result = std::lcm(result, order);
    return result * static_cast<long>(action.variable_count());
}

bool hilbert_chow_relations_hold(const EquivariantModule& m, const InvariantGenerators& gens) {
    const std::vector<std::vector<long>> monoid = trivial_monomials(m.action(), gens.degree_bound);
    for (const std::vector<long>& element : monoid) {
        const Rational direct = monomial_action_scalar(m, element);
        for (const std::vector<long>& g : gens.exponents) {
            if (g == element || !divides(g, element)) continue;
            const std::vector<long> rest = subtract(element, g);
            const Rational split =
                monomial_action_scalar(m, g) * monomial_action_scalar(m, rest);
            if (split != direct) return false;
        }
    }
    return true;
}

}  // namespace constellab
