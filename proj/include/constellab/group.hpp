#pragma once

#include <map>
#include <string>
#include <vector>

#include "constellab/rational.hpp"

namespace constellab {

/// The reductive groups the library knows how to work with.  Diagonalizable
/// groups are products of cyclic factors and a torus; their irreducibles are
/// the characters, indexed by tuples (residues for the cyclic factors,
/// integers for the torus factors).  SL2's irreducibles are V_n (highest
/// weight n, dimension n + 1), indexed by a single natural number.
enum class GroupKind { Diagonalizable, SL2 };

struct GroupSpec {
    GroupKind kind = GroupKind::Diagonalizable;
    std::vector<long> cyclic_orders;  // each >= 2; empty for a pure torus
    int torus_rank = 0;               // >= 0

    static GroupSpec finite_abelian(std::vector<long> orders);
    static GroupSpec torus(int rank);
    static GroupSpec product(std::vector<long> orders, int rank);
    static GroupSpec sl2();

    bool is_diagonalizable() const { return kind == GroupKind::Diagonalizable; }
    bool is_sl2() const { return kind == GroupKind::SL2; }
    /// Finitely many irreducibles (finite abelian, no torus factor).
    bool is_finite() const { return is_diagonalizable() && torus_rank == 0; }
    /// Number of entries of an irreducible label for this group.
    int label_length() const;
    /// True when the label space is a line (pure rank-1 torus) or a ray
    /// (SL2); only these support nonzero tail models.
    bool has_ray_labels() const;
    /// Number of irreducibles when finite; throws otherwise.
    long irreducible_count() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Index of an irreducible representation.  Diagonalizable: one entry per
/// cyclic factor (canonical residue in [0, order)) followed by one integer
/// per torus factor.  SL2: a single entry n >= 0.
struct IrrepLabel {
    std::vector<long> entries;

    IrrepLabel() = default;
    explicit IrrepLabel(std::vector<long> e) : entries(std::move(e)) {}
    IrrepLabel(std::initializer_list<long> e) : entries(e) {}

    auto operator<=>(const IrrepLabel&) const = default;
};

std::string to_string(const IrrepLabel& label);

/// The trivial representation's label (all zeros).
IrrepLabel trivial_label(const GroupSpec& group);

/// Reduce raw entries to canonical form (residues into [0, order)); length
/// and SL2 non-negativity are validated.  Throws InputError on bad shape.
IrrepLabel reduce_label(const GroupSpec& group, IrrepLabel raw);

/// True if the label is already canonical for the group.
bool valid_label(const GroupSpec& group, const IrrepLabel& label);

/// Character sum a + b (diagonalizable only; reduced).
IrrepLabel add_labels(const GroupSpec& group, const IrrepLabel& a, const IrrepLabel& b);

/// Label of the dual representation: -a for characters, identity for SL2
/// (every V_n is self-dual).
IrrepLabel dual_label(const GroupSpec& group, const IrrepLabel& label);

/// Dimension of the irreducible: 1 for characters, n + 1 for SL2's V_n.
long irrep_dim(const GroupSpec& group, const IrrepLabel& label);

/// Every irreducible label of a finite group, in sorted order.  Throws
/// InputError when the group has infinitely many irreducibles.
std::vector<IrrepLabel> all_labels(const GroupSpec& group);

/// Multiset of irreducibles with multiplicities; zero multiplicities are
/// never stored.
using RepDecomp = std::map<IrrepLabel, long>;

long total_dim(const GroupSpec& group, const RepDecomp& rep);

/// Isotypic decomposition of the tensor product of two irreducibles.
/// Characters add; SL2 follows the Clebsch-Gordan rule
/// V_a (x) V_b = V_{a+b} + V_{a+b-2} + ... + V_{|a-b|}.
RepDecomp tensor(const GroupSpec& group, const IrrepLabel& a, const IrrepLabel& b);

/// Isotypic decomposition of Sym^d of the given representation, computed by
/// weight counting.  `degree_bound` guards the combinatorial blow-up; d
/// beyond it is an input error.
RepDecomp decompose_sym_power(const GroupSpec& group, const RepDecomp& rep, long d,
                              long degree_bound = 12);

}  // namespace constellab
