#include "constellab/group.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace constellab {

GroupSpec GroupSpec::finite_abelian(std::vector<long> orders) {
    return product(std::move(orders), 0);
}

GroupSpec GroupSpec::torus(int rank) { return product({}, rank); }

GroupSpec GroupSpec::product(std::vector<long> orders, int rank) {
    for (long n : orders)
        if (n < 2) throw InputError("cyclic factor orders must be >= 2");
    if (rank < 0) throw InputError("torus rank must be >= 0");
    if (orders.empty() && rank == 0)
        throw InputError("the trivial group is not supported; give at least one factor");
    GroupSpec g;
    g.kind = GroupKind::Diagonalizable;
    g.cyclic_orders = std::move(orders);
    g.torus_rank = rank;
    return g;
}

GroupSpec GroupSpec::sl2() {
    GroupSpec g;
    g.kind = GroupKind::SL2;
    return g;
}

int GroupSpec::label_length() const {
    if (is_sl2()) return 1;
    return static_cast<int>(cyclic_orders.size()) + torus_rank;
}

bool GroupSpec::has_ray_labels() const {
    if (is_sl2()) return true;
    return cyclic_orders.empty() && torus_rank == 1;
}

long GroupSpec::irreducible_count() const {
    if (!is_finite()) throw InternalError("irreducible_count: group has infinitely many irreducibles");
    long n = 1;
    for (long order : cyclic_orders) n *= order;
    return n;
}

std::string to_string(const IrrepLabel& label) {
    std::ostringstream out;
    for (std::size_t i = 0; i < label.entries.size(); ++i) {
        if (i) out << ',';
        out << label.entries[i];
    }
    return out.str();
}

IrrepLabel trivial_label(const GroupSpec& group) {
    return IrrepLabel(std::vector<long>(group.label_length(), 0));
}

IrrepLabel reduce_label(const GroupSpec& group, IrrepLabel raw) {
    if (static_cast<int>(raw.entries.size()) != group.label_length())
        throw InputError("label '" + to_string(raw) + "' has " +
                         std::to_string(raw.entries.size()) + " entries, expected " +
                         std::to_string(group.label_length()));
    if (group.is_sl2()) {
        if (raw.entries[0] < 0)
            throw InputError("SL2 labels are highest weights n >= 0, got " + to_string(raw));
        return raw;
    }
    for (std::size_t i = 0; i < group.cyclic_orders.size(); ++i) {
        const long n = group.cyclic_orders[i];
        long r = raw.entries[i] % n;
        if (r < 0) r += n;
        raw.entries[i] = r;
    }
    return raw;
}

bool valid_label(const GroupSpec& group, const IrrepLabel& label) {
    if (static_cast<int>(label.entries.size()) != group.label_length()) return false;
    if (group.is_sl2()) return label.entries[0] >= 0;
    for (std::size_t i = 0; i < group.cyclic_orders.size(); ++i)
        if (label.entries[i] < 0 || label.entries[i] >= group.cyclic_orders[i]) return false;
    return true;
}

IrrepLabel add_labels(const GroupSpec& group, const IrrepLabel& a, const IrrepLabel& b) {
    if (!group.is_diagonalizable())
        throw InternalError("add_labels: only characters of a diagonalizable group add");
    IrrepLabel sum = a;
    for (std::size_t i = 0; i < sum.entries.size(); ++i) sum.entries[i] += b.entries[i];
    return reduce_label(group, std::move(sum));
}

IrrepLabel dual_label(const GroupSpec& group, const IrrepLabel& label) {
    if (group.is_sl2()) return label;  // V_n is self-dual
    IrrepLabel neg = label;
    for (long& e : neg.entries) e = -e;
    return reduce_label(group, std::move(neg));
}

std::vector<IrrepLabel> all_labels(const GroupSpec& group) {
    if (!group.is_finite())
        throw InputError("the group has infinitely many irreducibles; list labels explicitly");
    std::vector<IrrepLabel> labels;
    IrrepLabel label = trivial_label(group);
    while (true) {
        labels.push_back(label);
        std::size_t i = 0;
        while (i < label.entries.size() && ++label.entries[i] == group.cyclic_orders[i]) {
            label.entries[i] = 0;
            ++i;
        }
        if (i == label.entries.size()) break;
    }
    std::sort(labels.begin(), labels.end());
    return labels;
}

long irrep_dim(const GroupSpec& group, const IrrepLabel& label) {
    if (!valid_label(group, label))
        throw InputError("invalid irreducible label '" + to_string(label) + "'");
    return group.is_sl2() ? label.entries[0] + 1 : 1;
}

long total_dim(const GroupSpec& group, const RepDecomp& rep) {
    long dim = 0;
    for (const auto& [label, mult] : rep) dim += mult * irrep_dim(group, label);
    return dim;
}

RepDecomp tensor(const GroupSpec& group, const IrrepLabel& a, const IrrepLabel& b) {
    if (!valid_label(group, a) || !valid_label(group, b))
        throw InputError("tensor: invalid irreducible label");
    RepDecomp result;
    if (group.is_diagonalizable()) {
        result[add_labels(group, a, b)] = 1;
        return result;
    }
    const long m = a.entries[0], n = b.entries[0];
    for (long k = std::abs(m - n); k <= m + n; k += 2) result[IrrepLabel{k}] = 1;
    return result;
}

namespace {

// Enumerate degree-d monomials in `vars` variables (combinations with
// repetition, non-decreasing index sequences) and hand each exponent pattern
// to `emit` as the chosen variable indices.
void for_each_monomial(long vars, long d, std::vector<long>& chosen,
                       const std::function<void(const std::vector<long>&)>& emit) {
    if (static_cast<long>(chosen.size()) == d) {
        emit(chosen);
        return;
    }
    const long start = chosen.empty() ? 0 : chosen.back();
    for (long v = start; v < vars; ++v) {
        chosen.push_back(v);
        for_each_monomial(vars, d, chosen, emit);
        chosen.pop_back();
    }
}

// Number of degree-d monomials in m variables: C(m + d - 1, d); used to
// guard the enumeration before it starts.
mpz_class monomial_count(long m, long d) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(m + d - 1),
                 static_cast<unsigned long>(d));
    return c;
}

constexpr long kSymPowerEnumerationCap = 2'000'000;

}  // namespace

RepDecomp decompose_sym_power(const GroupSpec& group, const RepDecomp& rep, long d,
                              long degree_bound) {
    if (d < 0) throw InputError("symmetric power degree must be >= 0");
    if (d > degree_bound)
        throw InputError("symmetric power degree " + std::to_string(d) +
                         " exceeds the configured bound " + std::to_string(degree_bound));
    for (const auto& [label, mult] : rep) {
        if (!valid_label(group, label))
            throw InputError("decompose_sym_power: invalid label '" + to_string(label) + "'");
        if (mult <= 0) throw InputError("decompose_sym_power: multiplicities must be positive");
    }
    RepDecomp result;
    if (d == 0) {
        result[trivial_label(group)] = 1;
        return result;
    }

    if (group.is_diagonalizable()) {
        // Basis = the characters with multiplicity; a degree-d monomial has
        // character equal to the sum of its factors' characters.
        std::vector<IrrepLabel> basis;
        for (const auto& [label, mult] : rep)
            for (long i = 0; i < mult; ++i) basis.push_back(label);
        const long m = static_cast<long>(basis.size());
        if (m == 0) throw InputError("decompose_sym_power of the zero representation");
        if (monomial_count(m, d) > kSymPowerEnumerationCap)
            throw InputError("symmetric power enumeration too large (over " +
                             std::to_string(kSymPowerEnumerationCap) + " monomials)");
        std::vector<long> chosen;
        for_each_monomial(m, d, chosen, [&](const std::vector<long>& idx) {
            IrrepLabel sum = trivial_label(group);
            for (long v : idx)
                for (std::size_t i = 0; i < sum.entries.size(); ++i)
                    sum.entries[i] += basis[v].entries[i];
            result[reduce_label(group, std::move(sum))] += 1;
        });
        return result;
    }

    // SL2 by weight counting: collect the weights of a basis of the
    // representation, enumerate degree-d monomials, histogram their total
    // weights w, then mult(V_n) = count(n) - count(n + 2).
    std::vector<long> weights;
    for (const auto& [label, mult] : rep) {
        const long n = label.entries[0];
        for (long i = 0; i < mult; ++i)
            for (long w = n; w >= -n; w -= 2) weights.push_back(w);
    }
    const long m = static_cast<long>(weights.size());
    if (m == 0) throw InputError("decompose_sym_power of the zero representation");
    if (monomial_count(m, d) > kSymPowerEnumerationCap)
        throw InputError("symmetric power enumeration too large (over " +
                         std::to_string(kSymPowerEnumerationCap) + " monomials)");
    std::map<long, long> weight_count;
    std::vector<long> chosen;
    for_each_monomial(m, d, chosen, [&](const std::vector<long>& idx) {
        long w = 0;
        for (long v : idx) w += weights[v];
        weight_count[w] += 1;
    });
    for (const auto& [w, count] : weight_count) {
        if (w < 0) continue;
        const auto above = weight_count.find(w + 2);
        const long mult = count - (above == weight_count.end() ? 0 : above->second);
        if (mult < 0) throw InternalError("negative multiplicity in SL2 weight counting");
        if (mult > 0) result[IrrepLabel{w}] = mult;
    }
    return result;
}

}  // namespace constellab
