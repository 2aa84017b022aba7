#include "constellab/equivariant.hpp"

#include <algorithm>
#include <sstream>

namespace constellab {

ActionSpec ActionSpec::make(GroupSpec group, std::vector<std::string> names,
                            std::vector<IrrepLabel> weights) {
    if (!group.is_diagonalizable())
        throw InputError(
            "module-level computations need a diagonalizable group; SL2 problems work at the "
            "level of Hilbert functions only");
    if (names.size() != weights.size())
        throw InputError("action: one weight per variable is required");
    if (names.empty()) throw InputError("action: at least one variable is required");
    ActionSpec a;
    a.group = std::move(group);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw InputError("action: variable names must be nonempty");
        if (std::find(a.variable_names.begin(), a.variable_names.end(), names[i]) !=
            a.variable_names.end())
            throw InputError("action: duplicate variable name '" + names[i] + "'");
        a.variable_names.push_back(std::move(names[i]));
        a.variable_weights.push_back(reduce_label(a.group, std::move(weights[i])));
    }
    return a;
}

std::size_t ActionSpec::variable_index(const std::string& name) const {
    for (std::size_t i = 0; i < variable_names.size(); ++i)
        if (variable_names[i] == name) return i;
    throw InputError("unknown variable '" + name + "'");
}

namespace {

QMatrix arrow_or_zero(const std::map<EquivariantModule::ArrowKey, QMatrix>& arrows,
                      const std::map<IrrepLabel, long>& dims, const ActionSpec& action,
                      std::size_t var, const IrrepLabel& source) {
    const IrrepLabel target = add_labels(action.group, source, action.variable_weights[var]);
    const auto dim_of = [&](const IrrepLabel& l) {
        const auto it = dims.find(l);
        return it == dims.end() ? 0L : it->second;
    };
    const auto it = arrows.find({var, source});
    if (it != arrows.end()) return it->second;
    return QMatrix(static_cast<std::size_t>(dim_of(target)),
                   static_cast<std::size_t>(dim_of(source)));
}

}  // namespace

std::vector<std::string> check_relations(
    const ActionSpec& action, const std::map<IrrepLabel, long>& dims,
    const std::map<EquivariantModule::ArrowKey, QMatrix>& arrows) {
    std::vector<std::string> problems;
    const auto dim_of = [&](const IrrepLabel& l) {
        const auto it = dims.find(l);
        return it == dims.end() ? 0L : it->second;
    };
    for (const auto& [label, dim] : dims) {
        if (!valid_label(action.group, label))
            problems.push_back("component label '" + to_string(label) + "' is not canonical");
        if (dim < 1)
            problems.push_back("component '" + to_string(label) + "' has dimension " +
                               std::to_string(dim) + "; list only dimensions >= 1");
    }
    for (const auto& [key, matrix] : arrows) {
        const auto& [var, source] = key;
        if (var >= action.variable_count()) {
            problems.push_back("arrow references variable index " + std::to_string(var) +
                               " out of range");
            continue;
        }
        if (!valid_label(action.group, source)) {
            problems.push_back("arrow source label '" + to_string(source) + "' is not canonical");
            continue;
        }
        const IrrepLabel target = add_labels(action.group, source, action.variable_weights[var]);
        if (matrix.cols() != static_cast<std::size_t>(dim_of(source)) ||
            matrix.rows() != static_cast<std::size_t>(dim_of(target)))
            problems.push_back("arrow " + action.variable_names[var] + " at '" +
                               to_string(source) + "' has shape " +
                               std::to_string(matrix.rows()) + "x" +
                               std::to_string(matrix.cols()) + ", expected " +
                               std::to_string(dim_of(target)) + "x" +
                               std::to_string(dim_of(source)));
    }
    if (!problems.empty()) return problems;  // shapes first; products need them right
    for (std::size_t v = 0; v < action.variable_count(); ++v)
        for (std::size_t w = v + 1; w < action.variable_count(); ++w)
            for (const auto& [source, dim] : dims) {
                const IrrepLabel via_v = add_labels(action.group, source, action.variable_weights[v]);
                const IrrepLabel via_w = add_labels(action.group, source, action.variable_weights[w]);
                const QMatrix wv = arrow_or_zero(arrows, dims, action, w, via_v) *
                                   arrow_or_zero(arrows, dims, action, v, source);
                const QMatrix vw = arrow_or_zero(arrows, dims, action, v, via_w) *
                                   arrow_or_zero(arrows, dims, action, w, source);
                if (!(wv == vw))
                    problems.push_back("arrows " + action.variable_names[v] + " and " +
                                       action.variable_names[w] + " do not commute at '" +
                                       to_string(source) + "'");
            }
    return problems;
}

EquivariantModule EquivariantModule::make(ActionSpec action, std::map<IrrepLabel, long> dims,
                                          std::map<ArrowKey, QMatrix> arrows) {
    const std::vector<std::string> problems = check_relations(action, dims, arrows);
    if (!problems.empty()) {
        std::ostringstream out;
        out << "invalid module presentation:";
        for (const std::string& p : problems) out << "\n  - " << p;
        throw InputError(out.str());
    }
    EquivariantModule m;
    m.action_ = std::move(action);
    m.dims_ = std::move(dims);
    for (auto& [key, matrix] : arrows)
        if (!matrix.is_zero()) m.arrows_.emplace(key, std::move(matrix));
    return m;
}

long EquivariantModule::dim_at(const IrrepLabel& label) const {
    const auto it = dims_.find(label);
    return it == dims_.end() ? 0 : it->second;
}

long EquivariantModule::total_dim() const {
    long total = 0;
    for (const auto& [label, dim] : dims_) total += dim;
    return total;
}

const QMatrix* EquivariantModule::arrow(std::size_t var, const IrrepLabel& source) const {
    const auto it = arrows_.find({var, source});
    return it == arrows_.end() ? nullptr : &it->second;
}

IrrepLabel EquivariantModule::target_of(std::size_t var, const IrrepLabel& source) const {
    return add_labels(group(), source, action_.variable_weights[var]);
}

bool EquivariantModule::multiplicity_free() const {
    return std::all_of(dims_.begin(), dims_.end(), [](const auto& kv) { return kv.second <= 1; });
}

HilbertFunction EquivariantModule::hilbert_function() const {
    return HilbertFunction::from_counts(group(), dims_);
}

HilbertFunction graded_dims(const EquivariantModule& m, const GradedSubspace& s) {
    std::map<IrrepLabel, long> counts;
    for (const auto& [label, dim] : m.components()) counts[label] = 0;
    for (const auto& [label, space] : s) {
        if (!counts.count(label))
            throw InternalError("graded subspace has a piece outside the module's components");
        counts[label] = static_cast<long>(space.dim());
    }
    return HilbertFunction::from_counts(m.group(), counts);
}

long graded_total_dim(const GradedSubspace& s) {
    long total = 0;
    for (const auto& [label, space] : s) total += static_cast<long>(space.dim());
    return total;
}

bool graded_equal(const GradedSubspace& a, const GradedSubspace& b) {
    auto nonzero = [](const GradedSubspace& g) {
        GradedSubspace out;
        for (const auto& [label, space] : g)
            if (!space.is_zero()) out.emplace(label, space);
        return out;
    };
    return nonzero(a) == nonzero(b);
}

bool graded_contains(const GradedSubspace& outer, const GradedSubspace& inner) {
    for (const auto& [label, space] : inner) {
        if (space.is_zero()) continue;
        const auto it = outer.find(label);
        if (it == outer.end() || !it->second.contains(space)) return false;
    }
    return true;
}

GradedSubspace submodule_generated(const EquivariantModule& m, const GradedSubspace& seed) {
    GradedSubspace current;
    for (const auto& [label, space] : seed) {
        const long dim = m.dim_at(label);
        if (space.ambient_dim() != static_cast<std::size_t>(dim))
            throw InputError("seed piece at '" + to_string(label) +
                             "' has ambient dimension " + std::to_string(space.ambient_dim()) +
                             ", the component has dimension " + std::to_string(dim));
        if (!space.is_zero()) current.emplace(label, space);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // Snapshot the labels first: the loop inserts new pieces.
        std::vector<IrrepLabel> labels;
        labels.reserve(current.size());
        for (const auto& [label, space] : current) labels.push_back(label);
        for (const IrrepLabel& label : labels) {
            for (std::size_t v = 0; v < m.action().variable_count(); ++v) {
                const QMatrix* matrix = m.arrow(v, label);
                if (!matrix) continue;
                const Subspace image = current.at(label).image_under(*matrix);
                if (image.is_zero()) continue;
                const IrrepLabel target = m.target_of(v, label);
                auto [it, inserted] = current.emplace(target, image);
                if (!inserted) {
                    Subspace merged = it->second.sum(image);
                    if (merged.dim() != it->second.dim()) {
                        it->second = std::move(merged);
                        changed = true;
                    }
                } else {
                    changed = true;
                }
            }
        }
    }
    return current;
}

bool generated_in_dminus(const EquivariantModule& m, const std::set<IrrepLabel>& d_minus) {
    GradedSubspace seed;
    for (const IrrepLabel& label : d_minus) {
        const long dim = m.dim_at(label);
        if (dim > 0) seed.emplace(label, Subspace::full(static_cast<std::size_t>(dim)));
    }
    const GradedSubspace closure = submodule_generated(m, seed);
    return graded_total_dim(closure) == m.total_dim();
}

CoordinateSubspaceWalker::CoordinateSubspaceWalker(
    std::vector<std::pair<IrrepLabel, long>> dims)
    : dims_(std::move(dims)), masks_(dims_.size(), 0), done_(dims_.empty()) {
    for (const auto& [label, dim] : dims_)
        if (dim < 0 || dim > 16)
            throw InputError("coordinate enumeration over a component of dimension " +
                             std::to_string(dim) + " at '" + to_string(label) +
                             "' is not feasible");
}

GradedSubspace CoordinateSubspaceWalker::current() const {
    GradedSubspace s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (masks_[i] == 0) continue;
        std::vector<std::size_t> indices;
        for (long b = 0; b < dims_[i].second; ++b)
            if (masks_[i] & (1ULL << b)) indices.push_back(static_cast<std::size_t>(b));
        s.emplace(dims_[i].first,
                  Subspace::coordinate(static_cast<std::size_t>(dims_[i].second), indices));
    }
    return s;
}

void CoordinateSubspaceWalker::advance() {
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (++masks_[i] < (1ULL << dims_[i].second)) return;
        masks_[i] = 0;
    }
    done_ = true;
}

SubmoduleHilbertSet enumerate_submodule_hilbert_functions(const EquivariantModule& m,
                                                          SubmoduleScope scope,
                                                          const std::set<IrrepLabel>& d_minus,
                                                          const EnumerationOptions& options) {
    SubmoduleHilbertSet result;
    std::set<HilbertFunction> found;
    std::size_t count = 0;

    const auto collect_closure = [&](const GradedSubspace& seed) {
        found.insert(graded_dims(m, submodule_generated(m, seed)));
        ++count;
    };

    if (m.multiplicity_free()) {
        result.exactness = Exactness::EXACT;
        std::vector<IrrepLabel> labels;
        for (const auto& [label, dim] : m.components())
            if (scope == SubmoduleScope::Full || d_minus.count(label)) labels.push_back(label);
        if (labels.size() >= 63 || (1ULL << labels.size()) > options.cap)
            throw InputError("submodule enumeration needs 2^" + std::to_string(labels.size()) +
                             " candidates, exceeding the cap of " + std::to_string(options.cap) +
                             "; raise --cap if this is intended");
        for (std::uint64_t mask = 0; mask < (1ULL << labels.size()); ++mask) {
            if (scope == SubmoduleScope::Full) {
                // Multiplicity-free: submodules = arrow-closed label subsets.
                bool closed = true;
                for (std::size_t i = 0; i < labels.size() && closed; ++i) {
                    if (!(mask & (1ULL << i))) continue;
                    for (std::size_t v = 0; v < m.action().variable_count() && closed; ++v) {
                        if (!m.arrow(v, labels[i])) continue;
                        const IrrepLabel target = m.target_of(v, labels[i]);
                        const auto pos = std::lower_bound(labels.begin(), labels.end(), target);
                        closed = pos != labels.end() && *pos == target &&
                                 (mask & (1ULL << (pos - labels.begin())));
                    }
                }
                ++count;
                if (!closed) continue;
                std::map<IrrepLabel, long> counts;
                for (const auto& [label, dim] : m.components()) counts[label] = 0;
                for (std::size_t i = 0; i < labels.size(); ++i)
                    if (mask & (1ULL << i)) counts[labels[i]] = 1;
                found.insert(HilbertFunction::from_counts(m.group(), counts));
            } else {
                GradedSubspace seed;
                for (std::size_t i = 0; i < labels.size(); ++i)
                    if (mask & (1ULL << i)) seed.emplace(labels[i], Subspace::full(1));
                collect_closure(seed);
            }
        }
    } else {
        result.exactness = Exactness::SAMPLED;
        std::vector<std::pair<IrrepLabel, long>> dims;
        std::map<IrrepLabel, long> sample_dims;
        for (const auto& [label, dim] : m.components()) {
            if (scope == SubmoduleScope::DminusGenerated && !d_minus.count(label)) continue;
            dims.emplace_back(label, dim);
            sample_dims.emplace(label, dim);
        }
        for (CoordinateSubspaceWalker walker(dims); !walker.done() && count < options.cap;
             walker.advance())
            collect_closure(walker.current());
        std::mt19937_64 rng(options.seed);
        for (std::size_t i = 0; i < options.random_samples; ++i)
            collect_closure(random_graded_subspace(rng, sample_dims));
    }

    result.functions.assign(found.begin(), found.end());
    result.candidates_enumerated = count;
    return result;
}

QuotientPresentation QuotientPresentation::make(EquivariantModule module,
                                                std::set<IrrepLabel> d_minus,
                                                std::map<IrrepLabel, QMatrix> frames) {
    QuotientPresentation p;
    for (const IrrepLabel& label : d_minus)
        if (!valid_label(module.group(), label))
            throw InputError("D_- label '" + to_string(label) + "' is not canonical");
    for (const auto& [label, dim] : module.components())
        if (d_minus.count(label)) p.generator_labels_.push_back(label);
    for (const auto& [label, frame] : frames) {
        if (!d_minus.count(label) || module.dim_at(label) == 0)
            throw InputError("frame given at '" + to_string(label) +
                             "', which carries no generator component");
        const auto dim = static_cast<std::size_t>(module.dim_at(label));
        if (frame.rows() != dim || frame.cols() != dim)
            throw InputError("frame at '" + to_string(label) + "' must be " +
                             std::to_string(dim) + "x" + std::to_string(dim));
        if (!frame.inverse())
            throw InputError("frame at '" + to_string(label) + "' is singular");
    }
    for (const IrrepLabel& label : p.generator_labels_)
        if (!frames.count(label))
            frames.emplace(label,
                           QMatrix::identity(static_cast<std::size_t>(module.dim_at(label))));
    p.generated_ = generated_in_dminus(module, d_minus);
    p.module_ = std::move(module);
    p.d_minus_ = std::move(d_minus);
    p.frames_ = std::move(frames);
    return p;
}

long QuotientPresentation::dim_A() const {
    long total = 0;
    for (const IrrepLabel& label : generator_labels_) total += module_.dim_at(label);
    return total;
}

GradedSubspace QuotientPresentation::embed(const GradedSubspace& sub_of_A) const {
    GradedSubspace out;
    for (const auto& [label, space] : sub_of_A) {
        const auto it = frames_.find(label);
        if (it == frames_.end())
            throw InputError("subspace piece at '" + to_string(label) +
                             "', which is not a generator label");
        const Subspace image = space.image_under(it->second);
        if (!image.is_zero()) out.emplace(label, image);
    }
    return out;
}

GradedSubspace QuotientPresentation::pull_back(const GradedSubspace& sub_of_F) const {
    GradedSubspace out;
    for (const IrrepLabel& label : generator_labels_) {
        const auto it = sub_of_F.find(label);
        if (it == sub_of_F.end() || it->second.is_zero()) continue;
        const auto inv = frames_.at(label).inverse();
        if (!inv) throw InternalError("stored frame became singular");
        const Subspace pulled = it->second.image_under(*inv);
        if (!pulled.is_zero()) out.emplace(label, pulled);
    }
    return out;
}

QuotientPresentation apply_gauge(const QuotientPresentation& p, const GaugeElement& gauge) {
    std::map<IrrepLabel, QMatrix> frames;
    for (const IrrepLabel& label : p.generator_labels()) {
        const auto it = gauge.find(label);
        if (it == gauge.end())
            throw InputError("gauge element is missing the block at '" + to_string(label) + "'");
        if (!it->second.inverse())
            throw InputError("gauge block at '" + to_string(label) + "' is singular");
        frames.emplace(label, p.frames().at(label) * it->second);
    }
    return QuotientPresentation::make(p.module(), p.d_minus(), std::move(frames));
}

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> entry(-3, 3);
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        QMatrix m = random_matrix(rng, n, n);
        if (m.inverse()) return m;
    }
    throw InternalError("failed to draw an invertible matrix");
}

GradedSubspace random_graded_subspace(std::mt19937_64& rng,
                                      const std::map<IrrepLabel, long>& dims) {
    GradedSubspace s;
    for (const auto& [label, dim] : dims) {
        std::uniform_int_distribution<long> pick(0, dim);
        const long k = pick(rng);
        if (k == 0) continue;
        const Subspace space = Subspace::span(
            random_matrix(rng, static_cast<std::size_t>(k), static_cast<std::size_t>(dim)),
            static_cast<std::size_t>(dim));
        if (!space.is_zero()) s.emplace(label, space);
    }
    return s;
}

}  // namespace constellab
