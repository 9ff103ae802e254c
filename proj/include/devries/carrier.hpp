#pragma once

#include <concepts>
#include <string>

#include "devries/finite_boolean.hpp"
#include "devries/interval.hpp"
#include "devries/rng.hpp"

namespace devries {

/// What a Specker algebra needs from its idempotent carrier: a Boolean
/// algebra with a validated proximity and constructive DV6/DV7 witnesses.
template <typename C>
concept ProximityCarrier = requires(const C& c, const typename C::Element& a,
                                    const typename C::Element& b, Rng& rng) {
    { c.bottom() } -> std::convertible_to<typename C::Element>;
    { c.top() } -> std::convertible_to<typename C::Element>;
    { c.meet(a, b) } -> std::convertible_to<typename C::Element>;
    { c.join(a, b) } -> std::convertible_to<typename C::Element>;
    { c.complement(a) } -> std::convertible_to<typename C::Element>;
    { c.leq(a, b) } -> std::convertible_to<bool>;
    { c.equal(a, b) } -> std::convertible_to<bool>;
    { c.is_zero(a) } -> std::convertible_to<bool>;
    { c.prox(a, b) } -> std::convertible_to<bool>;
    { c.interpolate(a, b) } -> std::convertible_to<typename C::Element>;
    { c.below(a) } -> std::convertible_to<typename C::Element>;
    { c.shrink(a) } -> std::convertible_to<typename C::Element>;
    { c.sample(rng) } -> std::convertible_to<typename C::Element>;
    { c.print(a) } -> std::convertible_to<std::string>;
};

/// Finite powerset carrier. The proximity must have passed the DV checker
/// before Specker-level use; by finite rigidity that means it is the order.
class FiniteCarrier {
public:
    using Element = Mask;
    static constexpr bool is_finite = true;

    explicit FiniteCarrier(int atoms,
                           FiniteProximity prox = FiniteProximity::boolean_order())
        : ba_(atoms), prox_(std::move(prox)) {}

    const FiniteBooleanAlgebra& algebra() const { return ba_; }
    const FiniteProximity& proximity() const { return prox_; }

    Mask bottom() const { return ba_.bottom(); }
    Mask top() const { return ba_.top(); }
    Mask meet(Mask a, Mask b) const { return ba_.meet(a, b); }
    Mask join(Mask a, Mask b) const { return ba_.join(a, b); }
    Mask complement(Mask a) const { return ba_.complement(a); }
    bool leq(Mask a, Mask b) const { return ba_.leq(a, b); }
    bool equal(Mask a, Mask b) const { return a == b; }
    bool is_zero(Mask a) const { return a == 0; }
    bool prox(Mask a, Mask b) const { return prox_.rel(ba_, a, b); }

    Mask interpolate(Mask a, Mask b) const {
        for (Mask c : ba_.elements())
            if (prox(a, c) && prox(c, b)) return c;
        throw std::invalid_argument("no interpolant: the relation violates DV6");
    }

    Mask below(Mask a) const {
        if (a == 0) throw std::invalid_argument("below requires a nonzero element");
        for (Mask b : ba_.elements())
            if (b != 0 && prox(b, a)) return b;
        throw std::invalid_argument("no witness: the relation violates DV7");
    }

    Mask shrink(Mask a) const { return a; }

    Mask sample(Rng& rng) const { return static_cast<Mask>(rng.below(ba_.size())); }

    std::string print(Mask a) const { return ba_.element_to_string(a); }
    Mask parse(std::string_view text) const { return ba_.parse_element(text); }

private:
    FiniteBooleanAlgebra ba_;
    FiniteProximity prox_;
};

/// The dense rational-interval subalgebra of the regular opens of [0,1],
/// with the genuine (non-Boolean) closure proximity.
class IntervalCarrier {
public:
    using Element = RegularOpenSet;
    static constexpr bool is_finite = false;

    RegularOpenSet bottom() const { return RegularOpenSet::empty(); }
    RegularOpenSet top() const { return RegularOpenSet::full(); }
    RegularOpenSet meet(const RegularOpenSet& a, const RegularOpenSet& b) const {
        return ro_meet(a, b);
    }
    RegularOpenSet join(const RegularOpenSet& a, const RegularOpenSet& b) const {
        return ro_join(a, b);
    }
    RegularOpenSet complement(const RegularOpenSet& a) const { return ro_complement(a); }
    bool leq(const RegularOpenSet& a, const RegularOpenSet& b) const { return ro_leq(a, b); }
    bool equal(const RegularOpenSet& a, const RegularOpenSet& b) const { return a == b; }
    bool is_zero(const RegularOpenSet& a) const { return a.is_empty(); }
    bool prox(const RegularOpenSet& a, const RegularOpenSet& b) const {
        return ro_proximity(a, b);
    }
    RegularOpenSet interpolate(const RegularOpenSet& a, const RegularOpenSet& b) const {
        return ro_interpolate(a, b);
    }
    RegularOpenSet below(const RegularOpenSet& a) const { return ro_below(a); }
    RegularOpenSet shrink(const RegularOpenSet& a) const { return ro_shrink(a); }
    RegularOpenSet sample(Rng& rng) const { return sample_regular_open(rng); }
    std::string print(const RegularOpenSet& a) const { return to_string(a); }
};

static_assert(ProximityCarrier<FiniteCarrier>);
static_assert(ProximityCarrier<IntervalCarrier>);

} // namespace devries
