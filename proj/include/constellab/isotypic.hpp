#pragma once

#include <map>
#include <set>
#include <vector>

#include "constellab/group.hpp"
#include "constellab/rational.hpp"

namespace constellab {

/// Behaviour of a function Irr G -> Q outside its stored window, along one
/// ray of the label line.  Values are anchored at the origin: a label at
/// distance t from 0 on the ray has value coeff * base^t, whatever the
/// stored window's width is.
enum class TailKind { Zero, Geometric, Constant };

struct RayTail {
    TailKind kind = TailKind::Zero;
    Rational coeff = 0;  // >= 0 (negative values may only live in the window)
    Rational base = 0;   // Geometric: 0 <= base < 1; Constant: exactly 1

    static RayTail zero() { return {}; }
    static RayTail geometric(Rational coeff, Rational base);
    static RayTail constant(Rational coeff);

    bool is_zero() const { return kind == TailKind::Zero || coeff == 0; }
    /// Value at distance t from the origin (0 for a Zero tail).
    Rational value(long distance) const;

    bool operator==(const RayTail&) const = default;
};

/// Exact sum of coeff * base^t over t = from, from+1, ...; throws InputError
/// when the series diverges (nonzero constant tail summed on its own).
Rational ray_sum(const RayTail& tail, long from);

/// A function Irr G -> Q given exactly: explicit values on a finite window
/// plus tail models on the rays beyond it.  Nonzero tails are only allowed
/// when the label space is a line (rank-1 torus) or a ray (SL2); the window
/// must then be a contiguous interval of labels containing 0.
class IsotypicFunction {
public:
    IsotypicFunction() = default;

    static IsotypicFunction make(GroupSpec group, std::map<IrrepLabel, Rational> window,
                                 RayTail pos = RayTail::zero(), RayTail neg = RayTail::zero());

    const GroupSpec& group() const { return group_; }
    const std::map<IrrepLabel, Rational>& window() const { return window_; }
    const RayTail& pos_tail() const { return pos_; }
    const RayTail& neg_tail() const { return neg_; }
    bool has_tail() const { return !pos_.is_zero() || !neg_.is_zero(); }

    Rational value_at(const IrrepLabel& label) const;

    /// Interval bounds of the window for ray-label groups (0 when empty).
    long window_lo() const;
    long window_hi() const;

    bool operator==(const IsotypicFunction&) const = default;

private:
    GroupSpec group_;
    std::map<IrrepLabel, Rational> window_;
    RayTail pos_, neg_;
};

/// Isotypic multiplicities h: Irr G -> N.  Window values are non-negative
/// integers; tails are Zero or Constant.
class HilbertFunction {
public:
    HilbertFunction() = default;

    static HilbertFunction make(GroupSpec group, std::map<IrrepLabel, Rational> window,
                                RayTail pos = RayTail::zero(), RayTail neg = RayTail::zero());
    static HilbertFunction from_counts(const GroupSpec& group,
                                       const std::map<IrrepLabel, long>& counts);

    const IsotypicFunction& function() const { return f_; }
    const GroupSpec& group() const { return f_.group(); }
    Rational value_at(const IrrepLabel& label) const { return f_.value_at(label); }
    long count_at(const IrrepLabel& label) const { return to_long(f_.value_at(label)); }
    bool is_zero() const;
    /// Sum of all window values (the dimension contribution of the window).
    long window_total() const;

    bool operator==(const HilbertFunction&) const = default;
    bool operator<(const HilbertFunction&) const;

private:
    IsotypicFunction f_;
};

/// Stability parameter theta: Irr G -> Q.  Negative values are confined to
/// the window: tails are Zero or Geometric with non-negative coefficient
/// and base strictly inside (0, 1), so every tail sum converges.
class ThetaVector {
public:
    ThetaVector() = default;

    static ThetaVector make(GroupSpec group, std::map<IrrepLabel, Rational> window,
                            RayTail pos = RayTail::zero(), RayTail neg = RayTail::zero());

    const IsotypicFunction& function() const { return f_; }
    const GroupSpec& group() const { return f_.group(); }
    Rational value_at(const IrrepLabel& label) const { return f_.value_at(label); }

    /// Same vector with window values replaced by their absolute values
    /// (tails are already non-negative); used for tail majorants.
    ThetaVector abs_window() const;
    /// c * theta for c > 0 (verdicts are invariant under this).
    ThetaVector scaled(const Rational& c) const;

    bool operator==(const ThetaVector&) const = default;

private:
    IsotypicFunction f_;
};

/// <theta, h> = sum over all of Irr G of theta * h, exactly.  Throws
/// InputError if the tail series diverges.
Rational pairing(const ThetaVector& theta, const HilbertFunction& h);

/// The same sum split into the part over a finite label set D and the part
/// over its complement; window_part + tail_part == pairing.
struct SplitPairing {
    Rational window_part;
    Rational tail_part;
};
SplitPairing restrict_pairing(const ThetaVector& theta, const HilbertFunction& h,
                              const std::set<IrrepLabel>& D);

/// Sign data of a theta vector.  d_minus lists every label with a negative
/// value (finite by construction); zeros and positives are reported within
/// the stored window, with flags for infinitely many tail positives.
struct SignPartition {
    std::vector<IrrepLabel> d_minus;
    std::vector<IrrepLabel> window_zero;
    std::vector<IrrepLabel> window_positive;
    bool pos_tail_positive = false;
    bool neg_tail_positive = false;
};
SignPartition sign_partition(const ThetaVector& theta);

/// True if sub(label) <= whole(label) for every label (windows and tails).
bool leq_pointwise(const HilbertFunction& sub, const HilbertFunction& whole);

}  // namespace constellab
