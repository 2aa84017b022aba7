#include "constellab/staircase.hpp"

#include <algorithm>
#include <set>

#include "constellab/quotient.hpp"

namespace constellab {

bool graded_lex_less(const std::vector<long>& a, const std::vector<long>& b) {
    long da = 0, db = 0;
    for (long e : a) da += e;
    for (long e : b) db += e;
    if (da != db) return da < db;
    return a < b;
}

namespace {

IrrepLabel cell_character(const ActionSpec& action, const std::vector<long>& cell) {
    std::vector<long> entries(action.group.label_length(), 0);
    for (std::size_t i = 0; i < cell.size(); ++i)
        for (std::size_t j = 0; j < entries.size(); ++j)
            entries[j] += cell[i] * action.variable_weights[i].entries[j];
    return reduce_label(action.group, IrrepLabel{entries});
}

struct StaircaseSearch {
    const ActionSpec& action;
    const HilbertFunction& h;
    std::size_t target;
    std::size_t cap;

    std::vector<std::vector<long>> cells;      // graded-lex increasing
    std::set<std::vector<long>> present;
    std::map<IrrepLabel, long> counts;         // character -> cells used so far
    std::size_t nodes = 0;
    std::vector<Staircase> results;

    bool room_for(const std::vector<long>& cell) {
        IrrepLabel chi = cell_character(action, cell);
        auto it = counts.find(chi);
        long used = it == counts.end() ? 0 : it->second;
        return Rational(used) < h.value_at(chi);
    }

    bool divisors_present(const std::vector<long>& cell) {
        std::vector<long> divisor = cell;
        for (std::size_t i = 0; i < cell.size(); ++i) {
            if (cell[i] == 0) continue;
            --divisor[i];
            bool found = present.count(divisor) > 0;
            ++divisor[i];
            if (!found) return false;
        }
        return true;
    }

    void push(const std::vector<long>& cell) {
        cells.push_back(cell);
        present.insert(cell);
        ++counts[cell_character(action, cell)];
    }

    void pop() {
        --counts[cell_character(action, cells.back())];
        present.erase(cells.back());
        cells.pop_back();
    }

    void run() {
        if (++nodes > cap)
            throw InputError("staircase search exceeded the candidate cap (" +
                             std::to_string(cap) + "); raise --cap");
        if (cells.size() == target) {
            results.push_back(Staircase{cells});
            return;
        }
        // Every admissible next cell is a neighbour c + e_i of a present
        // cell, added in strictly increasing graded-lex order; this visits
        // each divisor-closed set along exactly one path.
        std::vector<std::vector<long>> candidates;
        for (const auto& c : cells) {
            for (std::size_t i = 0; i < action.variable_count(); ++i) {
                std::vector<long> m = c;
                ++m[i];
                if (!graded_lex_less(cells.back(), m)) continue;
                if (present.count(m)) continue;
                if (!divisors_present(m) || !room_for(m)) continue;
                candidates.push_back(std::move(m));
            }
        }
        std::sort(candidates.begin(), candidates.end(), graded_lex_less);
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& m : candidates) {
            push(m);
            run();
            pop();
        }
    }
};

}  // namespace

std::string to_string(const ActionSpec& action, const Staircase& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.cells.size(); ++i) {
        if (i) out += ", ";
        out += monomial_to_string(action, s.cells[i]);
    }
    return out + "}";
}

std::vector<Staircase> enumerate_staircases(const ActionSpec& action, const HilbertFunction& h,
                                            std::size_t cap) {
    if (!h.function().pos_tail().is_zero() || !h.function().neg_tail().is_zero())
        throw InputError(
            "staircase enumeration needs finitely many cells: h must have zero tails");
    if (h.group() != action.group)
        throw InputError("the multiplicity function and the action use different groups");

    long target = h.window_total();
    if (target == 0) return {};  // no cells, no constellations

    StaircaseSearch search{action, h, static_cast<std::size_t>(target), cap, {}, {}, {}, 0, {}};
    std::vector<long> origin(action.variable_count(), 0);
    if (!search.room_for(origin)) return {};  // every nonempty cell set contains 1
    search.push(origin);
    search.run();
    std::sort(search.results.begin(), search.results.end());
    return search.results;
}

EquivariantModule staircase_module(const ActionSpec& action, const Staircase& s) {
    // Basis of the component at chi = the staircase cells of character chi,
    // in the staircase's own (graded-lex) order.
    std::map<IrrepLabel, std::vector<std::vector<long>>> basis;
    for (const auto& cell : s.cells) basis[cell_character(action, cell)].push_back(cell);

    std::map<IrrepLabel, long> dims;
    std::map<std::vector<long>, std::pair<IrrepLabel, std::size_t>> slot;
    for (const auto& [chi, cells] : basis) {
        dims[chi] = static_cast<long>(cells.size());
        for (std::size_t k = 0; k < cells.size(); ++k) slot[cells[k]] = {chi, k};
    }

    std::map<EquivariantModule::ArrowKey, QMatrix> arrows;
    for (std::size_t i = 0; i < action.variable_count(); ++i) {
        for (const auto& [chi, cells] : basis) {
            IrrepLabel target = add_labels(action.group, chi, action.variable_weights[i]);
            auto target_basis = basis.find(target);
            if (target_basis == basis.end()) continue;
            QMatrix m(target_basis->second.size(), cells.size());
            bool nonzero = false;
            for (std::size_t col = 0; col < cells.size(); ++col) {
                std::vector<long> image = cells[col];
                ++image[i];
                auto hit = slot.find(image);
                if (hit == slot.end()) continue;
                m.at(hit->second.second, col) = 1;
                nonzero = true;
            }
            if (nonzero) arrows[{i, chi}] = std::move(m);
        }
    }
    return EquivariantModule::make(action, std::move(dims), std::move(arrows));
}

std::vector<ClassifiedStaircase> enumerate_monomial_constellations(
    const ActionSpec& action, const ThetaVector& theta, const HilbertFunction& h,
    const EnumerationOptions& options) {
    std::vector<ClassifiedStaircase> out;
    for (const auto& s : enumerate_staircases(action, h, options.cap)) {
        EquivariantModule m = staircase_module(action, s);
        out.push_back({s, theta_verdict_for_module(theta, m, SubmoduleScope::Full, options)});
    }
    return out;
}

}  // namespace constellab
