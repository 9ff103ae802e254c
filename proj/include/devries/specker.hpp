#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "devries/carrier.hpp"
#include "devries/domain.hpp"
#include "devries/piecewise.hpp"

namespace devries {

// ---------------------------------------------------------------------------
// Elements of a Specker algebra over a proximity carrier, stored in full
// orthogonal canonical form: values strictly ascending and distinct, the
// idempotents nonzero, pairwise disjoint, joining to the top. Equality of
// canonical forms is equality of elements.
// ---------------------------------------------------------------------------

template <ProximityCarrier C>
class Specker {
public:
    using El = typename C::Element;
    struct Term {
        DomainValue val;
        El idem;
    };

    static Specker constant(const C& c, DomainValue a) {
        Specker s(&c);
        s.terms_.push_back({std::move(a), c.top()});
        return s;
    }

    static Specker indicator(const C& c, const El& e) {
        if (c.is_zero(e)) return constant(c, DomainValue(0));
        if (c.equal(e, c.top())) return constant(c, DomainValue(1));
        Specker s(&c);
        s.terms_.push_back({DomainValue(0), c.complement(e)});
        s.terms_.push_back({DomainValue(1), e});
        return s;
    }

    /// Validates full orthogonal form after merging equal values and
    /// dropping zero idempotents.
    static Specker from_orthogonal(const C& c, std::vector<Term> raw) {
        Specker s(&c);
        s.terms_ = merge_terms(c, std::move(raw));
        El joined = c.bottom();
        for (std::size_t i = 0; i < s.terms_.size(); ++i) {
            for (std::size_t j = i + 1; j < s.terms_.size(); ++j)
                if (!c.is_zero(c.meet(s.terms_[i].idem, s.terms_[j].idem)))
                    throw std::invalid_argument("idempotents are not orthogonal");
            joined = c.join(joined, s.terms_[i].idem);
        }
        if (!c.equal(joined, c.top()))
            throw std::invalid_argument("orthogonal form does not cover the algebra");
        return s;
    }

    const C& carrier() const { return *carrier_; }
    const std::vector<Term>& terms() const { return terms_; }

    const DomainValue& min_value() const { return terms_.front().val; }
    const DomainValue& max_value() const { return terms_.back().val; }

    std::vector<DomainValue> values() const {
        std::vector<DomainValue> out;
        out.reserve(terms_.size());
        for (const auto& t : terms_) out.push_back(t.val);
        return out;
    }

    bool is_constant() const { return terms_.size() == 1; }

    /// Join of the idempotents whose value is at least a.
    El level(const DomainValue& a) const {
        El acc = carrier_->bottom();
        for (const auto& t : terms_)
            if (t.val >= a) acc = carrier_->join(acc, t.idem);
        return acc;
    }

    bool is_idempotent() const {
        for (const auto& t : terms_)
            if (!(t.val == DomainValue(0)) && !(t.val == DomainValue(1))) return false;
        return true;
    }

    /// The carrier element e with this == chi_e, when idempotent.
    std::optional<El> as_indicator() const {
        if (!is_idempotent()) return std::nullopt;
        El acc = carrier_->bottom();
        for (const auto& t : terms_)
            if (t.val == DomainValue(1)) acc = carrier_->join(acc, t.idem);
        return acc;
    }

    friend bool sp_equal(const Specker& a, const Specker& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (!(a.terms_[i].val == b.terms_[i].val) ||
                !a.carrier_->equal(a.terms_[i].idem, b.terms_[i].idem))
                return false;
        return true;
    }

private:
    explicit Specker(const C* c) : carrier_(c) {}

    static std::vector<Term> merge_terms(const C& c, std::vector<Term> raw) {
        std::vector<Term> kept;
        for (auto& t : raw)
            if (!c.is_zero(t.idem)) kept.push_back(std::move(t));
        std::sort(kept.begin(), kept.end(),
                  [](const Term& a, const Term& b) { return a.val < b.val; });
        std::vector<Term> out;
        for (auto& t : kept) {
            if (!out.empty() && out.back().val == t.val)
                out.back().idem = c.join(out.back().idem, t.idem);
            else
                out.push_back(std::move(t));
        }
        if (out.empty()) out.push_back({DomainValue(0), c.top()}); // all idems were zero
        return out;
    }

    const C* carrier_;
    std::vector<Term> terms_;
};

// --- Ring and lattice operations (partition refinement) ----------------------

template <ProximityCarrier C, typename Op>
Specker<C> sp_combine(const Specker<C>& s, const Specker<C>& t, Op op) {
    const C& c = s.carrier();
    if (&c != &t.carrier()) throw std::invalid_argument("carrier mismatch");
    std::vector<typename Specker<C>::Term> raw;
    for (const auto& a : s.terms())
        for (const auto& b : t.terms()) {
            auto m = c.meet(a.idem, b.idem);
            if (!c.is_zero(m)) raw.push_back({op(a.val, b.val), std::move(m)});
        }
    return Specker<C>::from_orthogonal(c, std::move(raw));
}

template <ProximityCarrier C, typename Op>
Specker<C> sp_map(const Specker<C>& s, Op op) {
    std::vector<typename Specker<C>::Term> raw;
    for (const auto& t : s.terms()) raw.push_back({op(t.val), t.idem});
    return Specker<C>::from_orthogonal(s.carrier(), std::move(raw));
}

template <ProximityCarrier C>
Specker<C> sp_add(const Specker<C>& s, const Specker<C>& t) {
    return sp_combine(s, t, [](const DomainValue& a, const DomainValue& b) { return a + b; });
}
template <ProximityCarrier C>
Specker<C> sp_mul(const Specker<C>& s, const Specker<C>& t) {
    return sp_combine(s, t, [](const DomainValue& a, const DomainValue& b) { return a * b; });
}
template <ProximityCarrier C>
Specker<C> sp_meet(const Specker<C>& s, const Specker<C>& t) {
    return sp_combine(s, t, [](const DomainValue& a, const DomainValue& b) { return dv_min(a, b); });
}
template <ProximityCarrier C>
Specker<C> sp_join(const Specker<C>& s, const Specker<C>& t) {
    return sp_combine(s, t, [](const DomainValue& a, const DomainValue& b) { return dv_max(a, b); });
}
template <ProximityCarrier C>
Specker<C> sp_negate(const Specker<C>& s) {
    return sp_map(s, [](const DomainValue& a) { return -a; });
}
template <ProximityCarrier C>
Specker<C> sp_sub(const Specker<C>& s, const Specker<C>& t) {
    return sp_add(s, sp_negate(t));
}
template <ProximityCarrier C>
Specker<C> sp_scalar(const DomainValue& a, const Specker<C>& s) {
    return sp_map(s, [&a](const DomainValue& v) { return a * v; });
}
template <ProximityCarrier C>
Specker<C> sp_abs(const Specker<C>& s) {
    return sp_map(s, [](const DomainValue& a) { return dv_abs(a); });
}

/// 0 <= s, i.e. the smallest value is nonnegative.
template <ProximityCarrier C>
bool sp_nonnegative(const Specker<C>& s) {
    return s.min_value() >= DomainValue(0);
}

template <ProximityCarrier C>
bool sp_is_zero(const Specker<C>& s) {
    return s.is_constant() && s.min_value() == DomainValue(0);
}

// --- Decreasing form -----------------------------------------------------------

template <ProximityCarrier C>
struct DecreasingForm {
    DomainValue base;
    std::vector<std::pair<DomainValue, typename C::Element>> steps; // (b_i, k_i), b_i > 0
    bool strict = true; // 1 > k_1 > ... > k_n > 0
};

template <ProximityCarrier C>
DecreasingForm<C> to_decreasing(const Specker<C>& s) {
    const C& c = s.carrier();
    DecreasingForm<C> d;
    d.base = s.min_value();
    typename C::Element tail = c.bottom();
    // walk values descending, accumulating the level idempotents
    std::vector<std::pair<DomainValue, typename C::Element>> rev;
    for (std::size_t i = s.terms().size(); i-- > 1;) {
        tail = c.join(tail, s.terms()[i].idem);
        rev.emplace_back(s.terms()[i].val - s.terms()[i - 1].val, tail);
    }
    d.steps.assign(rev.rbegin(), rev.rend());
    return d;
}

template <ProximityCarrier C>
Specker<C> to_orthogonal(const C& c, const DecreasingForm<C>& d) {
    std::vector<typename Specker<C>::Term> raw;
    DomainValue acc = d.base;
    std::vector<DomainValue> vals{d.base};
    for (const auto& [b, k] : d.steps) {
        if (!(b > DomainValue(0))) throw std::invalid_argument("step sizes must be positive");
        acc = acc + b;
        vals.push_back(acc);
    }
    for (std::size_t i = 0; i <= d.steps.size(); ++i) {
        const typename C::Element& k_i = (i == 0) ? c.top() : d.steps[i - 1].second;
        const typename C::Element next = (i == d.steps.size()) ? c.bottom() : d.steps[i].second;
        auto e = c.meet(k_i, c.complement(next));
        if (!c.is_zero(e)) raw.push_back({vals[i], std::move(e)});
    }
    return Specker<C>::from_orthogonal(c, std::move(raw));
}

/// Both elements over the union of their value grids: identical base and
/// step sizes, only the idempotents differ (possibly non-strict).
template <ProximityCarrier C>
struct CompatiblePair {
    DomainValue base;
    std::vector<DomainValue> steps;
    std::vector<typename C::Element> left;  // level idempotents of s
    std::vector<typename C::Element> right; // level idempotents of t
};

template <ProximityCarrier C>
CompatiblePair<C> compatible_decreasing(const Specker<C>& s, const Specker<C>& t) {
    if (&s.carrier() != &t.carrier()) throw std::invalid_argument("carrier mismatch");
    std::vector<DomainValue> grid = s.values();
    for (const auto& v : t.values()) grid.push_back(v);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    CompatiblePair<C> out;
    out.base = grid.front();
    for (std::size_t i = 1; i < grid.size(); ++i) {
        out.steps.push_back(grid[i] - grid[i - 1]);
        out.left.push_back(s.level(grid[i]));
        out.right.push_back(t.level(grid[i]));
    }
    return out;
}

template <ProximityCarrier C>
bool sp_leq(const Specker<C>& s, const Specker<C>& t) {
    const C& c = s.carrier();
    auto pair = compatible_decreasing(s, t);
    for (std::size_t i = 0; i < pair.steps.size(); ++i)
        if (!c.leq(pair.left[i], pair.right[i])) return false;
    return true;
}

/// Componentwise carrier proximity over compatible decreasing forms.
template <ProximityCarrier C>
bool sp_prox(const Specker<C>& s, const Specker<C>& t) {
    const C& c = s.carrier();
    auto pair = compatible_decreasing(s, t);
    for (std::size_t i = 0; i < pair.steps.size(); ++i)
        if (!c.prox(pair.left[i], pair.right[i])) return false;
    return true;
}

/// P9 witness: interpolate each level, then force the chain decreasing.
template <ProximityCarrier C>
Specker<C> sp_interpolate(const Specker<C>& s, const Specker<C>& t) {
    const C& c = s.carrier();
    if (!sp_prox(s, t)) throw std::invalid_argument("interpolation requires s prox t");
    auto pair = compatible_decreasing(s, t);
    DecreasingForm<C> mid;
    mid.base = pair.base;
    typename C::Element acc = c.top();
    for (std::size_t i = 0; i < pair.steps.size(); ++i) {
        acc = c.meet(acc, c.interpolate(pair.left[i], pair.right[i]));
        mid.steps.emplace_back(pair.steps[i], acc);
    }
    mid.strict = false;
    return to_orthogonal(c, mid);
}

/// P10 witness: a positive element well below s, built from the top step.
template <ProximityCarrier C>
Specker<C> sp_below(const Specker<C>& s) {
    const C& c = s.carrier();
    if (!sp_nonnegative(s) || sp_is_zero(s))
        throw std::invalid_argument("below requires s > 0");
    const auto& top_term = s.terms().back();
    auto w = c.below(top_term.idem);
    std::vector<typename Specker<C>::Term> raw;
    raw.push_back({DomainValue(0), c.complement(w)});
    raw.push_back({top_term.val, w});
    return Specker<C>::from_orthogonal(c, std::move(raw));
}

// --- Bridge to normal step functions (interval carrier) -------------------------

Specker<IntervalCarrier> from_normal(const IntervalCarrier& c, const PiecewiseFunction& f);
PiecewiseFunction to_normal(const Specker<IntervalCarrier>& s);

// --- Textual element syntax ------------------------------------------------------

/// Orthogonal form over the interval carrier: "0 on [0,1/4); 2 on (1/4,1/2)".
std::string to_string(const Specker<IntervalCarrier>& s);
Specker<IntervalCarrier> parse_interval_element(const IntervalCarrier& c, std::string_view text);

/// Decreasing form over a finite carrier: "a0 + b1*BITS + b2*BITS".
std::string to_string(const Specker<FiniteCarrier>& s);
Specker<FiniteCarrier> parse_finite_element(const FiniteCarrier& c, std::string_view text);

// --- Sampling ----------------------------------------------------------------------

/// Random element in full orthogonal form: a random finite partition of the
/// carrier with distinct values.
template <ProximityCarrier C>
Specker<C> sample_element(const C& c, Rng& rng, DomainKind kind, int max_classes = 3) {
    int classes = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_classes))) + 1;
    std::vector<typename C::Element> parts;
    if constexpr (C::is_finite) {
        std::vector<typename C::Element> buckets(classes, c.bottom());
        for (Mask atom : c.algebra().atoms())
            buckets[rng.below(static_cast<std::uint64_t>(classes))] |= atom;
        for (auto& b : buckets)
            if (!c.is_zero(b)) parts.push_back(b);
    } else {
        std::vector<Rat> cuts;
        int k = classes - 1 + static_cast<int>(rng.below(2));
        for (int i = 0; i < k; ++i) {
            Rat x = sample_unit_rat(rng);
            if (x > 0 && x < 1) cuts.push_back(std::move(x));
        }
        std::sort(cuts.begin(), cuts.end());
        cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
        std::vector<std::vector<Seg>> buckets(classes);
        Rat prev(0);
        for (std::size_t i = 0; i <= cuts.size(); ++i) {
            Rat next = (i == cuts.size()) ? Rat(1) : cuts[i];
            buckets[rng.below(static_cast<std::uint64_t>(classes))].push_back(
                {prev, next, false, false});
            prev = next;
        }
        for (auto& b : buckets) {
            if (b.empty()) continue;
            RegularOpenSet u = RegularOpenSet::canonicalize(b);
            if (!u.is_empty()) parts.push_back(std::move(u));
        }
    }
    std::vector<DomainValue> vals = sample_scalar_chain(rng, kind, static_cast<int>(parts.size()));
    std::vector<typename Specker<C>::Term> raw;
    for (std::size_t i = 0; i < parts.size(); ++i) raw.push_back({vals[i], parts[i]});
    return Specker<C>::from_orthogonal(c, std::move(raw));
}

template <ProximityCarrier C>
Specker<C> sample_nonnegative(const C& c, Rng& rng, DomainKind kind) {
    Specker<C> s = sample_element(c, rng, kind);
    if (sp_nonnegative(s)) return s;
    return sp_sub(s, Specker<C>::constant(c, s.min_value()));
}

/// A pair s prox t, s built by levelwise shrinking of t.
template <ProximityCarrier C>
std::pair<Specker<C>, Specker<C>> sample_proximal_pair(const C& c, Rng& rng, DomainKind kind) {
    Specker<C> t = sample_element(c, rng, kind);
    DecreasingForm<C> dt = to_decreasing(t);
    DecreasingForm<C> ds;
    ds.base = dt.base;
    ds.strict = false;
    typename C::Element acc = c.top();
    for (const auto& [b, k] : dt.steps) {
        if constexpr (C::is_finite)
            acc = c.meet(acc, rng.chance(1, 3) ? c.meet(k, c.sample(rng)) : k);
        else
            acc = c.meet(acc, c.shrink(k));
        ds.steps.emplace_back(b, acc);
    }
    return {to_orthogonal(c, ds), t};
}

} // namespace devries
