#include "constellab/isotypic.hpp"

#include <algorithm>

namespace constellab {

RayTail RayTail::geometric(Rational coeff, Rational base) {
    if (coeff < 0) throw InputError("geometric tail coefficient must be >= 0");
    if (base <= 0 || base >= 1)
        throw InputError("geometric tail base must satisfy 0 < base < 1, got " + to_string(base));
    RayTail t;
    t.kind = TailKind::Geometric;
    t.coeff = std::move(coeff);
    t.base = std::move(base);
    return t;
}

RayTail RayTail::constant(Rational coeff) {
    if (coeff < 0) throw InputError("constant tail value must be >= 0");
    RayTail t;
    t.kind = TailKind::Constant;
    t.coeff = std::move(coeff);
    t.base = 1;
    return t;
}

Rational RayTail::value(long distance) const {
    if (is_zero()) return 0;
    if (distance < 0) throw InternalError("tail evaluated at negative distance");
    if (kind == TailKind::Constant) return coeff;
    return coeff * pow(base, static_cast<unsigned long>(distance));
}

Rational ray_sum(const RayTail& tail, long from) {
    if (tail.is_zero()) return 0;
    if (from < 0) throw InternalError("ray_sum from negative distance");
    if (tail.base >= 1)
        throw InputError("divergent tail sum: a nonzero constant tail cannot be summed alone");
    // sum_{t >= from} c b^t = c b^from / (1 - b)
    return tail.coeff * pow(tail.base, static_cast<unsigned long>(from)) / (1 - tail.base);
}

namespace {

// The pointwise product of two tails is again a tail on the same ray.
RayTail product_tail(const RayTail& a, const RayTail& b) {
    if (a.is_zero() || b.is_zero()) return RayTail::zero();
    RayTail p;
    p.kind = (a.kind == TailKind::Constant && b.kind == TailKind::Constant)
                 ? TailKind::Constant
                 : TailKind::Geometric;
    p.coeff = a.coeff * b.coeff;
    p.base = a.base * b.base;
    return p;
}

}  // namespace

IsotypicFunction IsotypicFunction::make(GroupSpec group, std::map<IrrepLabel, Rational> window,
                                        RayTail pos, RayTail neg) {
    for (const auto& [label, value] : window)
        if (!valid_label(group, label))
            throw InputError("window label '" + to_string(label) + "' is not a canonical label");
    const bool tailed = !pos.is_zero() || !neg.is_zero();
    if (tailed) {
        if (!group.has_ray_labels())
            throw InputError(
                "nonzero tails are only supported when the label space is a line (rank-1 "
                "torus) or a ray (SL2); use an explicit zero tail otherwise");
        if (group.is_sl2() && !neg.is_zero())
            throw InputError("SL2 labels have no negative ray; the negative tail must be zero");
        if (window.empty())
            throw InputError("a function with a nonzero tail needs a window containing label 0");
        const long lo = window.begin()->first.entries[0];
        const long hi = window.rbegin()->first.entries[0];
        if (lo > 0 || hi < 0)
            throw InputError("a window with nonzero tails must contain label 0");
        if (static_cast<long>(window.size()) != hi - lo + 1)
            throw InputError(
                "a window with nonzero tails must be a contiguous interval of labels; list "
                "every label (or use an interval declaration) so no value is left implicit");
    }
    IsotypicFunction f;
    f.group_ = std::move(group);
    f.window_ = std::move(window);
    f.pos_ = std::move(pos);
    f.neg_ = std::move(neg);
    return f;
}

Rational IsotypicFunction::value_at(const IrrepLabel& label) const {
    if (!valid_label(group_, label))
        throw InputError("value_at: invalid label '" + to_string(label) + "'");
    const auto it = window_.find(label);
    if (it != window_.end()) return it->second;
    if (!has_tail()) return 0;
    const long n = label.entries[0];
    if (n > window_hi()) return pos_.value(n);
    if (n < window_lo()) return neg_.value(-n);
    return 0;  // inside the interval, contiguity guarantees this is unreachable
}

long IsotypicFunction::window_lo() const {
    if (window_.empty()) return 0;
    return window_.begin()->first.entries[0];
}

long IsotypicFunction::window_hi() const {
    if (window_.empty()) return 0;
    return window_.rbegin()->first.entries[0];
}

HilbertFunction HilbertFunction::make(GroupSpec group, std::map<IrrepLabel, Rational> window,
                                      RayTail pos, RayTail neg) {
    for (const auto& [label, value] : window) {
        if (!is_integer(value) || value < 0)
            throw InputError("multiplicity at label '" + to_string(label) +
                             "' must be a non-negative integer, got " + to_string(value));
    }
    for (const RayTail* tail : {&pos, &neg}) {
        if (tail->is_zero()) continue;
        if (tail->kind != TailKind::Constant)
            throw InputError("multiplicity tails must be constant (or zero)");
        if (!is_integer(tail->coeff))
            throw InputError("constant multiplicity tail must be a non-negative integer");
    }
    HilbertFunction h;
    h.f_ = IsotypicFunction::make(std::move(group), std::move(window), std::move(pos),
                                  std::move(neg));
    return h;
}

HilbertFunction HilbertFunction::from_counts(const GroupSpec& group,
                                             const std::map<IrrepLabel, long>& counts) {
    std::map<IrrepLabel, Rational> window;
    for (const auto& [label, count] : counts) window.emplace(label, Rational(count));
    return make(group, std::move(window));
}

bool HilbertFunction::is_zero() const {
    if (f_.has_tail()) return false;
    return std::all_of(f_.window().begin(), f_.window().end(),
                       [](const auto& kv) { return kv.second == 0; });
}

long HilbertFunction::window_total() const {
    Rational sum = 0;
    for (const auto& [label, value] : f_.window()) sum += value;
    return to_long(sum);
}

bool HilbertFunction::operator<(const HilbertFunction& other) const {
    // Lexicographic on the (label, value) sequence, then on the tails; a
    // deterministic total order used for canonical witness tie-breaking.
    const auto& a = f_.window();
    const auto& b = other.f_.window();
    auto ai = a.begin();
    auto bi = b.begin();
    for (; ai != a.end() && bi != b.end(); ++ai, ++bi) {
        if (ai->first != bi->first) return ai->first < bi->first;
        if (ai->second != bi->second) return ai->second < bi->second;
    }
    if (a.size() != b.size()) return a.size() < b.size();
    auto tail_key = [](const RayTail& t) {
        return std::tuple<int, Rational, Rational>(static_cast<int>(t.kind), t.coeff, t.base);
    };
    const auto lhs = std::make_pair(tail_key(f_.pos_tail()), tail_key(f_.neg_tail()));
    const auto rhs =
        std::make_pair(tail_key(other.f_.pos_tail()), tail_key(other.f_.neg_tail()));
    return lhs < rhs;
}

ThetaVector ThetaVector::make(GroupSpec group, std::map<IrrepLabel, Rational> window,
                              RayTail pos, RayTail neg) {
    for (const RayTail* tail : {&pos, &neg}) {
        if (tail->is_zero()) continue;
        if (tail->kind != TailKind::Geometric)
            throw InputError(
                "theta tails must be geometric (or zero), so that every tail sum converges");
    }
    ThetaVector t;
    t.f_ = IsotypicFunction::make(std::move(group), std::move(window), std::move(pos),
                                  std::move(neg));
    return t;
}

ThetaVector ThetaVector::abs_window() const {
    std::map<IrrepLabel, Rational> window;
    for (const auto& [label, value] : f_.window()) window.emplace(label, abs(value));
    ThetaVector t;
    t.f_ = IsotypicFunction::make(f_.group(), std::move(window), f_.pos_tail(), f_.neg_tail());
    return t;
}

ThetaVector ThetaVector::scaled(const Rational& c) const {
    if (c <= 0) throw InputError("theta may only be scaled by a positive rational");
    std::map<IrrepLabel, Rational> window;
    for (const auto& [label, value] : f_.window()) window.emplace(label, c * value);
    RayTail pos = f_.pos_tail(), neg = f_.neg_tail();
    pos.coeff *= c;
    neg.coeff *= c;
    ThetaVector t;
    t.f_ = IsotypicFunction::make(f_.group(), std::move(window), std::move(pos), std::move(neg));
    return t;
}

namespace {

// Shared engine for pairing and restrict_pairing: accumulate theta * h over
// all labels, splitting the total between D and its complement.
SplitPairing split_sum(const ThetaVector& theta, const HilbertFunction& h,
                       const std::set<IrrepLabel>& D) {
    const IsotypicFunction& tf = theta.function();
    const IsotypicFunction& hf = h.function();
    if (tf.group() != hf.group())
        throw InputError("pairing: theta and h live over different groups");
    const GroupSpec& group = tf.group();
    for (const IrrepLabel& label : D)
        if (!valid_label(group, label))
            throw InputError("pairing: window label '" + to_string(label) + "' is invalid");

    SplitPairing out{Rational(0), Rational(0)};
    auto account = [&](const IrrepLabel& label) {
        const Rational term = tf.value_at(label) * hf.value_at(label);
        if (term == 0 && !D.count(label)) return;
        (D.count(label) ? out.window_part : out.tail_part) += term;
    };

    if (group.has_ray_labels()) {
        long lo = 0, hi = 0;
        for (const IsotypicFunction* f : {&tf, &hf}) {
            if (f->window().empty()) continue;
            lo = std::min(lo, f->window_lo());
            hi = std::max(hi, f->window_hi());
        }
        if (!D.empty()) {
            lo = std::min(lo, D.begin()->entries[0]);
            hi = std::max(hi, D.rbegin()->entries[0]);
        }
        if (group.is_sl2()) lo = std::max(lo, 0L);
        for (long n = lo; n <= hi; ++n) account(IrrepLabel{n});
        // Beyond [lo, hi] both factors follow their tail models exactly.
        out.tail_part += ray_sum(product_tail(tf.pos_tail(), hf.pos_tail()), hi + 1);
        if (!group.is_sl2())
            out.tail_part += ray_sum(product_tail(tf.neg_tail(), hf.neg_tail()), -lo + 1);
        return out;
    }

    std::set<IrrepLabel> labels = D;
    for (const auto& [label, value] : tf.window()) labels.insert(label);
    for (const auto& [label, value] : hf.window()) labels.insert(label);
    for (const IrrepLabel& label : labels) account(label);
    return out;
}

}  // namespace

Rational pairing(const ThetaVector& theta, const HilbertFunction& h) {
    const SplitPairing split = split_sum(theta, h, {});
    return split.window_part + split.tail_part;
}

SplitPairing restrict_pairing(const ThetaVector& theta, const HilbertFunction& h,
                              const std::set<IrrepLabel>& D) {
    return split_sum(theta, h, D);
}

SignPartition sign_partition(const ThetaVector& theta) {
    SignPartition part;
    for (const auto& [label, value] : theta.function().window()) {
        if (value < 0)
            part.d_minus.push_back(label);
        else if (value == 0)
            part.window_zero.push_back(label);
        else
            part.window_positive.push_back(label);
    }
    part.pos_tail_positive = !theta.function().pos_tail().is_zero();
    part.neg_tail_positive = !theta.function().neg_tail().is_zero();
    return part;
}

bool leq_pointwise(const HilbertFunction& sub, const HilbertFunction& whole) {
    const IsotypicFunction& sf = sub.function();
    const IsotypicFunction& wf = whole.function();
    if (sf.group() != wf.group()) throw InputError("leq_pointwise: group mismatch");
    const GroupSpec& group = sf.group();
    if (group.has_ray_labels()) {
        long lo = 0, hi = 0;
        for (const IsotypicFunction* f : {&sf, &wf}) {
            if (f->window().empty()) continue;
            lo = std::min(lo, f->window_lo());
            hi = std::max(hi, f->window_hi());
        }
        if (group.is_sl2()) lo = std::max(lo, 0L);
        for (long n = lo; n <= hi; ++n)
            if (sf.value_at(IrrepLabel{n}) > wf.value_at(IrrepLabel{n})) return false;
        // Tails are constant-or-zero for multiplicity functions, so the
        // coefficient comparison settles the infinite part.
        for (auto [s, w] : {std::pair{&sf.pos_tail(), &wf.pos_tail()},
                            std::pair{&sf.neg_tail(), &wf.neg_tail()}}) {
            if (s->is_zero()) continue;
            if (w->is_zero() || s->coeff > w->coeff) return false;
        }
        return true;
    }
    std::set<IrrepLabel> labels;
    for (const auto& [label, value] : sf.window()) labels.insert(label);
    for (const auto& [label, value] : wf.window()) labels.insert(label);
    for (const IrrepLabel& label : labels)
        if (sf.value_at(label) > wf.value_at(label)) return false;
    return true;
}

}  // namespace constellab
