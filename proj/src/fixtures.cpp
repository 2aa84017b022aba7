#include "constellab/fixtures.hpp"

#include <algorithm>

#include "constellab/quotient.hpp"
#include "constellab/staircase.hpp"

namespace constellab::fixtures {

namespace {

ThetaVector theta_of(const GroupSpec& group, std::map<IrrepLabel, Rational> window,
                     RayTail pos = RayTail::zero(), RayTail neg = RayTail::zero()) {
    return ThetaVector::make(group, std::move(window), pos, neg);
}

std::set<IrrepLabel> full_window(const GroupSpec& group) {
    const std::vector<IrrepLabel> labels = all_labels(group);
    return {labels.begin(), labels.end()};
}

QMatrix scalar_matrix(const Rational& value) {
    QMatrix m(1, 1);
    m.at(0, 0) = value;
    return m;
}

}  // namespace

ActionSpec z3_action() {
    return ActionSpec::make(GroupSpec::finite_abelian({3}), {"x", "y"}, {{2}, {1}});
}

ActionSpec z2_action() {
    return ActionSpec::make(GroupSpec::finite_abelian({2}), {"x", "y"}, {{1}, {1}});
}

ActionSpec z2z2_action() {
    return ActionSpec::make(GroupSpec::finite_abelian({2, 2}), {"x", "y"}, {{1, 0}, {0, 1}});
}

ActionSpec torus_action() {
    return ActionSpec::make(GroupSpec::torus(1), {"x", "y"}, {{1}, {-1}});
}

Instance z3_free_orbit() {
    const ActionSpec action = z3_action();
    return {"z3_free_orbit",
            action,
            free_orbit_module(action, {1, 0}),
            theta_of(action.group, {{{0}, -2}, {{1}, -1}, {{2}, 3}}),
            full_window(action.group),
            {{{0}, 1}, {{1}, 1}}};
}

Instance z3_nilpotent() {
    const ActionSpec action = z3_action();
    // Basis 1, x, x^2 with x^3 = 0 and y = 0; characters 0, 2, 1.
    std::map<IrrepLabel, long> dims{{{0}, 1}, {{1}, 1}, {{2}, 1}};
    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    arrows[{0, {0}}] = scalar_matrix(1);  // 1   -> x
    arrows[{0, {2}}] = scalar_matrix(1);  // x   -> x^2
    return {"z3_nilpotent",
            action,
            EquivariantModule::make(action, std::move(dims), std::move(arrows)),
            theta_of(action.group, {{{0}, -2}, {{1}, -1}, {{2}, 3}}),
            full_window(action.group),
            {{{0}, 1}, {{1}, 1}}};
}

Instance z3_ghilb_free() {
    const ActionSpec action = z3_action();
    return {"z3_ghilb_free",
            action,
            free_orbit_module(action, {1, 0}),
            theta_of(action.group, {{{0}, -2}, {{1}, 1}, {{2}, 1}}),
            full_window(action.group),
            {}};
}

Instance z2_orbit() {
    const ActionSpec action = z2_action();
    return {"z2_orbit",
            action,
            free_orbit_module(action, {1, 0}),
            theta_of(action.group, {{{0}, -1}, {{1}, 1}}),
            full_window(action.group),
            {}};
}

Instance z2z2_orbit() {
    const ActionSpec action = z2z2_action();
    return {"z2z2_orbit",
            action,
            free_orbit_module(action, {1, 1}),
            theta_of(action.group,
                     {{{0, 0}, -3}, {{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 1}}),
            full_window(action.group),
            {}};
}

Instance z2_rank2() {
    const ActionSpec action = z2_action();
    std::map<IrrepLabel, long> dims{{{0}, 2}, {{1}, 1}};
    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    arrows[{0, {0}}] = QMatrix::from_rows({{1, 0}});  // x picks the first coordinate
    arrows[{1, {0}}] = QMatrix::from_rows({{0, 1}});  // y picks the second
    return {"z2_rank2",
            action,
            EquivariantModule::make(action, std::move(dims), std::move(arrows)),
            theta_of(action.group, {{{0}, -1}, {{1}, 2}}),
            full_window(action.group),
            {}};
}

Instance torus_chain() {
    const ActionSpec action = torus_action();
    std::map<IrrepLabel, long> dims{{{0}, 1}, {{1}, 1}, {{2}, 1}};
    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    arrows[{0, {0}}] = scalar_matrix(1);  // 1 -> x
    arrows[{0, {1}}] = scalar_matrix(1);  // x -> x^2
    return {"torus_chain",
            action,
            EquivariantModule::make(action, std::move(dims), std::move(arrows)),
            theta_of(action.group, {{{0}, -2}, {{1}, 1}, {{2}, 1}},
                     RayTail::geometric(1, Rational(1, 2))),
            {{0}, {1}},
            {}};
}

std::vector<Instance> corpus() {
    return {z3_free_orbit(), z3_nilpotent(), z3_ghilb_free(), z2_orbit(),
            z2z2_orbit(),    z2_rank2(),     torus_chain()};
}

TorusApprox torus_symmetric() {
    const GroupSpec group = GroupSpec::torus(1);
    return {theta_of(group, {{{0}, -2}}, RayTail::geometric(1, Rational(1, 2)),
                     RayTail::geometric(1, Rational(1, 2))),
            HilbertFunction::make(group, {{{0}, 1}}, RayTail::constant(1), RayTail::constant(1)),
            HilbertFunction::make(group, {{{0}, 0}}, RayTail::constant(1), RayTail::zero())};
}

TorusApprox torus_asymmetric() {
    const GroupSpec group = GroupSpec::torus(1);
    return {theta_of(group, {{{0}, Rational(-3, 2)}}, RayTail::geometric(1, Rational(1, 2)),
                     RayTail::geometric(1, Rational(1, 3))),
            HilbertFunction::make(group, {{{0}, 1}}, RayTail::constant(1), RayTail::constant(1)),
            HilbertFunction::make(group, {{{0}, 0}}, RayTail::constant(1), RayTail::zero())};
}

namespace {

// A random order ideal of the given size, grown one admissible neighbour at
// a time; cells come back in graded-lexicographic order.
std::vector<std::vector<long>> random_cells(std::mt19937_64& rng, std::size_t variables,
                                            std::size_t size) {
    std::set<std::vector<long>> present;
    present.insert(std::vector<long>(variables, 0));
    while (present.size() < size) {
        std::vector<std::vector<long>> candidates;
        for (const std::vector<long>& cell : present) {
            for (std::size_t i = 0; i < variables; ++i) {
                std::vector<long> next = cell;
                ++next[i];
                if (present.count(next)) continue;
                bool closed = true;
                for (std::size_t j = 0; j < variables && closed; ++j) {
                    if (next[j] == 0) continue;
                    --next[j];
                    closed = present.count(next) > 0;
                    ++next[j];
                }
                if (closed) candidates.push_back(std::move(next));
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        present.insert(candidates[rng() % candidates.size()]);
    }
    std::vector<std::vector<long>> cells(present.begin(), present.end());
    std::sort(cells.begin(), cells.end(), graded_lex_less);
    return cells;
}

EquivariantModule random_conjugate(std::mt19937_64& rng, const EquivariantModule& m) {
    std::map<IrrepLabel, QMatrix> change, inverse;
    for (const auto& [label, dim] : m.components()) {
        QMatrix g = random_invertible(rng, static_cast<std::size_t>(dim));
        inverse[label] = *g.inverse();
        change[label] = std::move(g);
    }
    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    for (const auto& [key, matrix] : m.arrows()) {
        const IrrepLabel target = m.target_of(key.first, key.second);
        arrows[key] = change.at(target) * matrix * inverse.at(key.second);
    }
    return EquivariantModule::make(m.action(), m.components(), std::move(arrows));
}

}  // namespace

RandomInstance random_admissible_instance(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        GroupSpec group;
        switch (rng() % 4) {
            case 0: group = GroupSpec::finite_abelian({2}); break;
            case 1: group = GroupSpec::finite_abelian({3}); break;
            case 2: group = GroupSpec::finite_abelian({4}); break;
            default: group = GroupSpec::finite_abelian({2, 2}); break;
        }
        std::vector<IrrepLabel> weights;
        for (int v = 0; v < 2; ++v) {
            std::vector<long> entries(group.cyclic_orders.size());
            for (std::size_t j = 0; j < entries.size(); ++j)
                entries[j] = static_cast<long>(rng() % group.cyclic_orders[j]);
            weights.push_back(IrrepLabel{std::move(entries)});
        }
        const ActionSpec action = ActionSpec::make(group, {"x", "y"}, std::move(weights));

        const Staircase cells{random_cells(rng, 2, 2 + rng() % 4)};
        const EquivariantModule module = random_conjugate(rng, staircase_module(action, cells));
        const HilbertFunction h = module.hilbert_function();

        const IrrepLabel trivial = trivial_label(group);
        std::vector<IrrepLabel> others;
        for (const auto& [label, dim] : module.components())
            if (label != trivial && dim > 0) others.push_back(label);
        if (others.empty()) continue;  // needs a positive label besides the trivial one

        std::map<IrrepLabel, Rational> window_values;
        bool admissible = false;
        for (int trial = 0; trial < 100 && !admissible; ++trial) {
            window_values.clear();
            window_values[trivial] = -Rational(1 + static_cast<long>(rng() % 3));
            const IrrepLabel balance = others[rng() % others.size()];
            Rational sum = window_values[trivial] * h.value_at(trivial);
            for (const IrrepLabel& label : others) {
                if (label == balance) continue;
                const long value = static_cast<long>(rng() % 5) - 2;
                if (value != 0) window_values[label] = value;
                sum += Rational(value) * h.value_at(label);
            }
            const Rational needed = -sum / h.value_at(balance);
            if (needed > 0) {
                window_values[balance] = needed;
                admissible = true;
            }
        }
        if (!admissible) continue;

        const ThetaVector theta = ThetaVector::make(group, window_values);
        std::set<IrrepLabel> window;
        for (const auto& [label, value] : window_values) window.insert(label);

        std::map<IrrepLabel, Rational> kappa_minus;
        for (const auto& [label, value] : window_values)
            if (value < 0) kappa_minus[label] = Rational(1 + static_cast<long>(rng() % 2));

        GitParameters parameters = derive_parameters(theta, h, window, kappa_minus);
        const std::set<IrrepLabel> d_minus(parameters.d_minus.begin(), parameters.d_minus.end());
        std::map<IrrepLabel, QMatrix> frames;
        for (const IrrepLabel& label : d_minus)
            if (module.dim_at(label) > 0)
                frames[label] =
                    random_invertible(rng, static_cast<std::size_t>(module.dim_at(label)));
        QuotientPresentation presentation =
            QuotientPresentation::make(module, d_minus, std::move(frames));

        Instance instance{"random", action, module, theta, std::move(window),
                          std::move(kappa_minus)};
        return {std::move(instance), std::move(presentation), std::move(parameters)};
    }
    throw InternalError("random instance generation failed to converge");
}

RandomInstance random_multfree_instance(std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        RandomInstance candidate = random_admissible_instance(rng);
        if (candidate.instance.module.multiplicity_free()) return candidate;
    }
    throw InternalError("no multiplicity-free random instance found");
}

namespace {

Subspace column_span(const QMatrix& m, const std::vector<std::size_t>& columns) {
    QMatrix rows(columns.size(), m.rows());
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (std::size_t r = 0; r < m.rows(); ++r) rows.at(i, r) = m.at(r, columns[i]);
    return Subspace::span(rows, m.rows());
}

}  // namespace

Filtration random_filtration(std::mt19937_64& rng, const QuotientPresentation& p) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        Filtration filtration;
        for (const IrrepLabel& label : p.generator_labels()) {
            const std::size_t dim = static_cast<std::size_t>(p.module().dim_at(label));
            const QMatrix basis = random_invertible(rng, dim);
            std::map<long, std::vector<std::size_t>> by_weight;
            for (std::size_t column = 0; column < dim; ++column)
                by_weight[static_cast<long>(rng() % 3) - 1].push_back(column);
            for (const auto& [weight, columns] : by_weight)
                filtration.pieces[weight][label] = column_span(basis, columns);
        }
        if (filtration.pieces.size() >= 2) return filtration;
    }
    throw InternalError("random filtration generation failed to converge");
}

SplitSubspace random_split(std::mt19937_64& rng, const QuotientPresentation& p) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        SplitSubspace split;
        std::size_t kept = 0, dropped = 0;
        for (const IrrepLabel& label : p.generator_labels()) {
            const std::size_t dim = static_cast<std::size_t>(p.module().dim_at(label));
            const QMatrix basis = random_invertible(rng, dim);
            std::vector<std::size_t> in, out;
            for (std::size_t column = 0; column < dim; ++column)
                (rng() % 2 ? in : out).push_back(column);
            if (!in.empty()) split.part[label] = column_span(basis, in);
            if (!out.empty()) split.complement[label] = column_span(basis, out);
            kept += in.size();
            dropped += out.size();
        }
        if (kept > 0 && dropped > 0) return split;
    }
    throw InternalError("random subspace split generation failed to converge");
}

}  // namespace constellab::fixtures
