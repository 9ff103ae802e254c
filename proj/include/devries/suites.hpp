#pragma once

#include <cstdint>
#include <functional>

#include "devries/morphisms.hpp"
#include "devries/specker.hpp"

namespace devries {

// --- Interval-carrier de Vries axioms ------------------------------------------

/// DV1-DV7 on seeded random canonical sets, for an arbitrary candidate
/// relation (DV6/DV7 are witness-driven: constructive witnesses for the
/// genuine proximity, candidate search otherwise).
CheckReport dv_interval_relation_suite(
    const std::function<bool(const RegularOpenSet&, const RegularOpenSet&)>& rel,
    std::uint64_t seed, int samples);

/// The genuine proximity plus the two injected mutations; the mutations must
/// be rejected with a counterexample.
CheckReport dv_interval_suite(std::uint64_t seed, int samples);

/// Exhaustive rigidity on 1- and 2-atom algebras plus the dropped-pair
/// injection.
CheckReport rigidity_suite();

/// Boolean-algebra laws of the canonical interval sets (randomized).
CheckReport interval_boolean_laws_suite(std::uint64_t seed, int samples);

/// Ordered-domain laws for the scalar instances (randomized).
CheckReport domain_law_suite(std::uint64_t seed, DomainKind kind, int samples);

// --- Normal-function suites ------------------------------------------------------

/// Properties (1)-(6) of the de Vries power proximity, with the clause-(6)
/// specialization that the reflexive elements are exactly the constants.
CheckReport prox_theorem_suite(std::uint64_t seed, DomainKind kind, int samples);

/// Symbolic ops against normalize(pointwise) as exact canonical forms, and
/// symbolic prox against the levelwise proximity.
CheckReport oracle_equivalence_suite(std::uint64_t seed, DomainKind kind, int samples);

/// Level-set formula clauses (1)-(5) on random pairs.
CheckReport level_formula_suite(std::uint64_t seed, DomainKind kind, int samples);

/// Orthogonal/decreasing roundtrip plus compatible-form order and proximity
/// against the pointwise oracle.
CheckReport roundtrip_suite(std::uint64_t seed, DomainKind kind, int samples);

/// Normalization facts: idempotence, image shrinking, order preservation,
/// scalar-shift laws, idempotents = characteristic functions.
CheckReport normalization_suite(std::uint64_t seed, DomainKind kind, int samples);

// --- Ends, duality, morphisms ------------------------------------------------------

CheckReport ends_agreement_suite(std::uint64_t seed, int samples);
CheckReport duality_suite(std::uint64_t seed, int samples);
CheckReport morphism_suite(std::uint64_t seed, int samples);

// --- Templated Specker suites --------------------------------------------------------

/// P1-P10 of the lifted proximity (P7 in both directions).
template <ProximityCarrier C>
CheckReport prox_axiom_suite(const C& carrier, std::uint64_t seed, DomainKind kind, int samples);

/// f-ring and l-algebra identities: the idempotent-scalar facts,
/// the truncation identity, |st| = |s||t|, s = (s v 0) + (s ^ 0), ring laws,
/// torsion-freeness, and on finite carriers the least-upper-bound fact.
template <ProximityCarrier C>
CheckReport fring_suite(const C& carrier, std::uint64_t seed, DomainKind kind, int samples);

// --- Implementations ------------------------------------------------------------------

template <ProximityCarrier C>
CheckReport prox_axiom_suite(const C& carrier, std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "proximity axioms P1-P10";
    Rng rng(seed);
    using S = Specker<C>;
    auto constant = [&](long v) { return S::constant(carrier, DomainValue(v)); };

    if (sp_prox(constant(0), constant(0)) && sp_prox(constant(1), constant(1)))
        report.add_pass("P1");
    else
        report.add_fail("P1", "0 prox 0 or 1 prox 1 fails");

    struct Fail {
        bool ok = true;
        std::string ce;
        void hit(const std::string& c) {
            if (ok) {
                ok = false;
                ce = c;
            }
        }
    };
    Fail p2, p3, p4, p5, p6, p7f, p7r, p8, p9, p10;

    for (int i = 0; i < samples; ++i) {
        auto [s, t] = sample_proximal_pair(carrier, rng, kind);
        if (p2.ok && !sp_leq(s, t)) p2.hit("s=" + to_string(s) + " t=" + to_string(t));

        S lo = sp_meet(s, sample_element(carrier, rng, kind));
        S hi = sp_join(t, sample_element(carrier, rng, kind));
        if (p3.ok && !sp_prox(lo, hi)) p3.hit("s=" + to_string(lo) + " u=" + to_string(hi));

        S r = sp_join(t, sample_element(carrier, rng, kind));
        if (p4.ok && !sp_prox(s, sp_meet(t, r)))
            p4.hit("s=" + to_string(s) + " t=" + to_string(t) + " r=" + to_string(r));

        if (p5.ok && !sp_prox(sp_negate(t), sp_negate(s)))
            p5.hit("s=" + to_string(s) + " t=" + to_string(t));

        auto [u, v] = sample_proximal_pair(carrier, rng, kind);
        if (p6.ok && !sp_prox(sp_add(s, u), sp_add(t, v)))
            p6.hit("s=" + to_string(s) + " r=" + to_string(u));

        DomainValue a = dv_abs(sample_scalar(rng, kind)) + DomainValue(1);
        if (p7f.ok && !sp_prox(sp_scalar(a, s), sp_scalar(a, t)))
            p7f.hit("a=" + to_string(a) + " s=" + to_string(s));
        S x = sample_element(carrier, rng, kind);
        S y = sample_element(carrier, rng, kind);
        if (p7r.ok && sp_prox(sp_scalar(a, x), sp_scalar(a, y)) != sp_prox(x, y))
            p7r.hit("a=" + to_string(a) + " s=" + to_string(x) + " t=" + to_string(y));

        S s0 = sp_sub(s, S::constant(carrier, s.min_value()));
        S t0 = sp_sub(t, S::constant(carrier, s.min_value()));
        S u0 = sp_sub(u, S::constant(carrier, u.min_value()));
        S v0 = sp_sub(v, S::constant(carrier, u.min_value()));
        if (p8.ok && !sp_prox(sp_mul(s0, u0), sp_mul(t0, v0)))
            p8.hit("s=" + to_string(s0) + " r=" + to_string(u0));

        S mid = sp_interpolate(s, t);
        if (p9.ok && !(sp_prox(s, mid) && sp_prox(mid, t)))
            p9.hit("s=" + to_string(s) + " t=" + to_string(t) + " r=" + to_string(mid));

        S pos = sample_nonnegative(carrier, rng, kind);
        if (sp_is_zero(pos)) pos = sp_add(pos, constant(1));
        S below = sp_below(pos);
        if (p10.ok && !(sp_prox(below, pos) && sp_nonnegative(below) && !sp_is_zero(below)))
            p10.hit("s=" + to_string(pos) + " t=" + to_string(below));
    }

    auto record = [&](const char* name, const Fail& f) {
        if (f.ok)
            report.add_pass(name);
        else
            report.add_fail(name, f.ce);
    };
    record("P2", p2);
    record("P3", p3);
    record("P4", p4);
    record("P5", p5);
    record("P6", p6);
    record("P7-forward", p7f);
    record("P7-reflect", p7r);
    record("P8", p8);
    record("P9", p9);
    record("P10", p10);
    return report;
}

template <ProximityCarrier C>
CheckReport fring_suite(const C& carrier, std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "f-ring and idempotent identities";
    Rng rng(seed);
    using S = Specker<C>;
    auto constant = [&](const DomainValue& v) { return S::constant(carrier, v); };
    const S zero = constant(DomainValue(0));
    const S one = constant(DomainValue(1));

    struct Fail {
        bool ok = true;
        std::string ce;
        void hit(const std::string& c) {
            if (ok) {
                ok = false;
                ce = c;
            }
        }
    };
    Fail l1, l2, l3, l4, l5, l6, claim, fring, split, absmul, ringlaw, ordlaw, torsion, lub;

    for (int i = 0; i < samples; ++i) {
        auto e = carrier.sample(rng);
        auto k = carrier.sample(rng);
        S chi_e = S::indicator(carrier, e);
        S chi_k = S::indicator(carrier, k);

        if (l1.ok && !(sp_leq(zero, chi_e) && sp_leq(chi_e, one)))
            l1.hit("e=" + carrier.print(e));
        if (l2.ok && sp_leq(chi_e, chi_k) != carrier.leq(e, k))
            l2.hit("e=" + carrier.print(e) + " k=" + carrier.print(k));

        DomainValue a = sample_scalar(rng, kind);
        DomainValue unit = kind == DomainKind::integers
                               ? DomainValue(rng.range(0, 1))
                               : DomainValue(make_rat(rng.range(0, 6), 6));
        if (l3.ok && !sp_equal(sp_meet(constant(unit), chi_e), sp_scalar(unit, chi_e)))
            l3.hit("a=" + to_string(unit) + " e=" + carrier.print(e));
        DomainValue big = dv_abs(a) + DomainValue(1);
        if (l4.ok && !sp_equal(sp_meet(sp_scalar(big, chi_e), one), chi_e))
            l4.hit("a=" + to_string(big) + " e=" + carrier.print(e));
        if (!carrier.is_zero(e)) {
            bool lhs = sp_nonnegative(sp_scalar(a, chi_e));
            if (l5.ok && lhs != (a >= DomainValue(0)))
                l5.hit("a=" + to_string(a) + " e=" + carrier.print(e));
        }
        if (!carrier.is_zero(e) && !carrier.is_zero(k)) {
            DomainValue pa = dv_abs(a) + DomainValue(1);
            DomainValue pb = dv_abs(sample_scalar(rng, kind)) + DomainValue(1);
            bool lhs = sp_leq(sp_scalar(pa, chi_e), sp_scalar(pb, chi_k));
            bool rhs = pa <= pb && carrier.leq(e, k);
            if (l6.ok && lhs != rhs)
                l6.hit("a=" + to_string(pa) + " b=" + to_string(pb) + " e=" + carrier.print(e) +
                       " k=" + carrier.print(k));
        }

        S s = sample_element(carrier, rng, kind);
        S t = sample_element(carrier, rng, kind);
        S r = sample_element(carrier, rng, kind);

        DomainValue ca = sample_scalar(rng, kind);
        DomainValue cb = ca + dv_abs(sample_scalar(rng, kind)) + DomainValue(1);
        S lhs_claim = sp_sub(sp_meet(s, constant(cb)), sp_meet(s, constant(ca)));
        S rhs_claim = sp_meet(sp_join(sp_sub(s, constant(ca)), zero), constant(cb - ca));
        if (claim.ok && !sp_equal(lhs_claim, rhs_claim))
            claim.hit("s=" + to_string(s) + " a=" + to_string(ca) + " b=" + to_string(cb));

        S splus = sp_join(s, zero);
        S sminus = sp_meet(s, zero);
        if (split.ok && !sp_equal(s, sp_add(splus, sminus))) split.hit("s=" + to_string(s));

        S disj = sp_negate(sminus); // (-s) v 0, meets splus in 0
        S rp = sp_join(r, zero);
        if (fring.ok) {
            if (!sp_equal(sp_meet(splus, disj), zero))
                fring.hit("s=" + to_string(s));
            else if (!sp_equal(sp_meet(sp_mul(rp, splus), disj), zero))
                fring.hit("s=" + to_string(s) + " r=" + to_string(rp));
        }

        if (absmul.ok && !sp_equal(sp_abs(sp_mul(s, t)), sp_mul(sp_abs(s), sp_abs(t))))
            absmul.hit("s=" + to_string(s) + " t=" + to_string(t));

        if (ringlaw.ok) {
            bool ok = sp_equal(sp_add(s, t), sp_add(t, s)) &&
                      sp_equal(sp_mul(s, t), sp_mul(t, s)) &&
                      sp_equal(sp_add(sp_add(s, t), r), sp_add(s, sp_add(t, r))) &&
                      sp_equal(sp_mul(sp_mul(s, t), r), sp_mul(s, sp_mul(t, r))) &&
                      sp_equal(sp_mul(s, sp_add(t, r)), sp_add(sp_mul(s, t), sp_mul(s, r))) &&
                      sp_equal(sp_add(s, zero), s) && sp_equal(sp_mul(s, one), s);
            if (!ok) ringlaw.hit("s=" + to_string(s) + " t=" + to_string(t) + " r=" + to_string(r));
        }
        if (ordlaw.ok) {
            S sm = sp_meet(s, t);
            bool ok = sp_leq(sp_add(sm, r), sp_add(s, r));
            S saplus = sp_join(s, zero);
            S taplus = sp_join(t, zero);
            ok = ok && sp_nonnegative(sp_mul(saplus, taplus));
            if (!ok) ordlaw.hit("s=" + to_string(s) + " t=" + to_string(t));
        }
        if (torsion.ok) {
            DomainValue nz = a == DomainValue(0) ? DomainValue(1) : a;
            if (sp_is_zero(sp_scalar(nz, s)) != sp_is_zero(s)) torsion.hit("s=" + to_string(s));
        }
        if constexpr (C::is_finite) {
            if (lub.ok) {
                auto [ps, pt] = sample_proximal_pair(carrier, rng, kind);
                bool ok = sp_prox(pt, pt) && sp_leq(ps, pt);
                if (!ok) lub.hit("s=" + to_string(pt));
            }
        }
    }

    auto record = [&](const char* name, const Fail& f) {
        if (f.ok)
            report.add_pass(name);
        else
            report.add_fail(name, f.ce);
    };
    record("idem-bounds", l1);
    record("idem-boolean-order", l2);
    record("unit-scalar-meet", l3);
    record("big-scalar-meet", l4);
    record("sign-reflection", l5);
    record("scaled-order", l6);
    record("truncation-identity", claim);
    record("fring-law", fring);
    record("pos-neg-split", split);
    record("abs-multiplicative", absmul);
    record("ring-laws", ringlaw);
    record("order-laws", ordlaw);
    record("torsion-free", torsion);
    if constexpr (C::is_finite)
        record("lub-of-approximants", lub);
    else
        report.add_skip("lub-of-approximants", "join over all approximants needs a finite carrier");
    return report;
}

} // namespace devries
