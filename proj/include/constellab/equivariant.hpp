#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "constellab/group.hpp"
#include "constellab/isotypic.hpp"
#include "constellab/qmatrix.hpp"

namespace constellab {

/// A diagonalizable group together with weighted variables: variable v acts
/// by mapping the isotypic piece at rho into the piece at rho + weight(v).
struct ActionSpec {
    GroupSpec group;
    std::vector<std::string> variable_names;
    std::vector<IrrepLabel> variable_weights;

    static ActionSpec make(GroupSpec group, std::vector<std::string> names,
                           std::vector<IrrepLabel> weights);
    std::size_t variable_count() const { return variable_names.size(); }
    std::size_t variable_index(const std::string& name) const;  // throws InputError

    bool operator==(const ActionSpec&) const = default;
};

/// A finite-dimensional equivariant module presented by its isotypic
/// components (one rational vector space per label) and one arrow matrix per
/// (variable, source label); absent arrows are zero.  Arrows of distinct
/// variables must commute.
class EquivariantModule {
public:
    using ArrowKey = std::pair<std::size_t, IrrepLabel>;

    /// Validates shapes and the commutation relations (throws InputError
    /// listing every violation); zero matrices are dropped.
    static EquivariantModule make(ActionSpec action, std::map<IrrepLabel, long> dims,
                                  std::map<ArrowKey, QMatrix> arrows);

    const ActionSpec& action() const { return action_; }
    const GroupSpec& group() const { return action_.group; }
    const std::map<IrrepLabel, long>& components() const { return dims_; }
    const std::map<ArrowKey, QMatrix>& arrows() const { return arrows_; }

    long dim_at(const IrrepLabel& label) const;
    long total_dim() const;
    /// Arrow matrix for (variable, source), or nullptr when it is zero.
    const QMatrix* arrow(std::size_t var, const IrrepLabel& source) const;
    IrrepLabel target_of(std::size_t var, const IrrepLabel& source) const;
    bool multiplicity_free() const;  // every component has dimension <= 1

    HilbertFunction hilbert_function() const;

    bool operator==(const EquivariantModule&) const = default;

private:
    ActionSpec action_;
    std::map<IrrepLabel, long> dims_;
    std::map<ArrowKey, QMatrix> arrows_;
};

/// Shape and commutation diagnostics for a module presentation; empty means
/// the presentation is a valid module.
std::vector<std::string> check_relations(const ActionSpec& action,
                                         const std::map<IrrepLabel, long>& dims,
                                         const std::map<EquivariantModule::ArrowKey, QMatrix>& arrows);

/// A graded subspace: one subspace per isotypic component (zero pieces are
/// not stored).  Used both for subspaces of a module and for subspaces of
/// the generating space A in the quotient presentation.
using GradedSubspace = std::map<IrrepLabel, Subspace>;

/// Dimension per component as a Hilbert function on the module's component
/// window (labels of the module with value 0 where the subspace vanishes).
HilbertFunction graded_dims(const EquivariantModule& m, const GradedSubspace& s);

long graded_total_dim(const GradedSubspace& s);
bool graded_equal(const GradedSubspace& a, const GradedSubspace& b);
bool graded_contains(const GradedSubspace& outer, const GradedSubspace& inner);

/// Smallest arrow-closed graded subspace containing the seed: repeatedly
/// pushes each piece through every arrow until stable.  Deterministic.
GradedSubspace submodule_generated(const EquivariantModule& m, const GradedSubspace& seed);

/// How an enumeration covered the search space.
enum class Exactness { EXACT, SAMPLED };

enum class SubmoduleScope {
    Full,             // all graded submodules
    DminusGenerated,  // submodules generated by their pieces in D_-
};

struct EnumerationOptions {
    std::uint64_t seed = 0;      // RNG seed for sampled subspaces
    std::size_t random_samples = 64;
    std::size_t cap = 1 << 20;   // hard bound on enumerated candidates
};

/// The set of Hilbert functions of submodules found.  EXACT when the module
/// is multiplicity-free (coordinate subspaces exhaust all graded subspaces);
/// SAMPLED otherwise (coordinate seeds plus seeded random subspaces, each
/// taken to its closure).  Contains 0; contains the full Hilbert function
/// whenever the scope can reach it.
struct SubmoduleHilbertSet {
    std::vector<HilbertFunction> functions;  // sorted, deduplicated
    Exactness exactness = Exactness::EXACT;
    std::size_t candidates_enumerated = 0;
};

SubmoduleHilbertSet enumerate_submodule_hilbert_functions(
    const EquivariantModule& m, SubmoduleScope scope, const std::set<IrrepLabel>& d_minus = {},
    const EnumerationOptions& options = {});

/// True if the module is generated by its components at the given labels.
bool generated_in_dminus(const EquivariantModule& m, const std::set<IrrepLabel>& d_minus);

/// A point of the GIT parameter space: the module together with invertible
/// frames phi_rho: A_rho -> F_rho over the labels of D_- (A_rho has
/// dimension h(rho); labels of dimension 0 carry no frame).
class QuotientPresentation {
public:
    /// Frames default to the identity.  Validates invertibility and shapes.
    static QuotientPresentation make(EquivariantModule module, std::set<IrrepLabel> d_minus,
                                     std::map<IrrepLabel, QMatrix> frames = {});

    const EquivariantModule& module() const { return module_; }
    const std::set<IrrepLabel>& d_minus() const { return d_minus_; }
    const std::map<IrrepLabel, QMatrix>& frames() const { return frames_; }
    /// Labels of D_- carrying a nonzero component, in sorted order.
    const std::vector<IrrepLabel>& generator_labels() const { return generator_labels_; }
    long dim_A() const;  // sum of h(rho) over D_-
    bool generated_in_dminus_flag() const { return generated_; }

    /// Push a graded subspace of A through the frames into the module.
    GradedSubspace embed(const GradedSubspace& sub_of_A) const;
    /// Pull a graded subspace of the module back to A (frames are invertible).
    GradedSubspace pull_back(const GradedSubspace& sub_of_F) const;

    bool operator==(const QuotientPresentation&) const = default;

private:
    EquivariantModule module_;
    std::set<IrrepLabel> d_minus_;
    std::map<IrrepLabel, QMatrix> frames_;
    std::vector<IrrepLabel> generator_labels_;
    bool generated_ = false;
};

/// An element of the gauge group: one invertible matrix per generator label.
using GaugeElement = std::map<IrrepLabel, QMatrix>;

/// The presentation with frames phi_rho * gamma_rho (the module itself is
/// untouched).  Throws InputError when a gauge block is missing or singular.
QuotientPresentation apply_gauge(const QuotientPresentation& p, const GaugeElement& gauge);

/// Deterministic pseudo-random objects for sampled enumeration and tests.
QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols);
QMatrix random_invertible(std::mt19937_64& rng, std::size_t n);
GradedSubspace random_graded_subspace(std::mt19937_64& rng,
                                      const std::map<IrrepLabel, long>& dims);

/// Odometer over all coordinate graded subspaces (every subset of the
/// standard basis in every component); emits each exactly once, in a fixed
/// deterministic order, beginning with the zero subspace.
class CoordinateSubspaceWalker {
public:
    explicit CoordinateSubspaceWalker(std::vector<std::pair<IrrepLabel, long>> dims);

    bool done() const { return done_; }
    GradedSubspace current() const;
    void advance();

private:
    std::vector<std::pair<IrrepLabel, long>> dims_;
    std::vector<std::uint64_t> masks_;
    bool done_;
};

}  // namespace constellab
