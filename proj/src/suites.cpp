#include "devries/suites.hpp"

#include <algorithm>
#include <sstream>

#include "devries/errors.hpp"

namespace devries {

namespace {

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

void record(CheckReport& report, const std::string& name, const Fail& f) {
    if (f.ok)
        report.add_pass(name);
    else
        report.add_fail(name, f.ce);
}

using Rel = std::function<bool(const RegularOpenSet&, const RegularOpenSet&)>;

/// Pairs likely to be related under a candidate relation: genuinely proximal
/// pairs, equal pairs, grown pairs, and uniform pairs.
std::pair<RegularOpenSet, RegularOpenSet> candidate_pair(Rng& rng) {
    RegularOpenSet u = sample_regular_open(rng);
    switch (rng.below(4)) {
    case 0: return {ro_shrink(u), u};
    case 1: return {u, u};
    case 2: return {u, ro_join(u, sample_regular_open(rng))};
    default: return {u, sample_regular_open(rng)};
    }
}

/// Shift a normal function to be nonnegative (constant shifts are pointwise).
PiecewiseFunction nf_shift_nonneg(const PiecewiseFunction& f) {
    DomainValue m = f.values().front();
    if (m >= DomainValue(0)) return f;
    return pw_add(f, PiecewiseFunction(-m));
}

} // namespace

CheckReport dv_interval_relation_suite(const Rel& rel, std::uint64_t seed, int samples) {
    CheckReport report;
    report.suite = "de Vries axioms (interval)";
    Rng rng(seed);
    const RegularOpenSet full = RegularOpenSet::full();

    if (rel(full, full))
        report.add_pass("DV1");
    else
        report.add_fail("DV1", "1 is not well inside 1");

    Fail dv2, dv3, dv4, dv5, dv6;
    int found = 0, attempts = 0;
    while (found < samples && attempts < samples * 8) {
        ++attempts;
        auto [a, b] = candidate_pair(rng);
        if (!rel(a, b)) continue;
        ++found;
        if (dv2.ok && !ro_leq(a, b)) dv2.hit(to_string(a) + " prox " + to_string(b));

        RegularOpenSet lo = rng.chance(1, 2) ? a : ro_meet(a, sample_regular_open(rng));
        RegularOpenSet hi = rng.chance(1, 2) ? b : ro_join(b, sample_regular_open(rng));
        if (dv3.ok && !rel(lo, hi))
            dv3.hit(to_string(lo) + " <= " + to_string(a) + " prox " + to_string(b) +
                    " <= " + to_string(hi));

        RegularOpenSet c1 = rng.chance(1, 2) ? b : ro_join(b, sample_regular_open(rng));
        if (rel(a, c1) && dv4.ok && !rel(a, ro_meet(b, c1)))
            dv4.hit(to_string(a) + " prox " + to_string(b) + " and " + to_string(c1));

        if (dv5.ok && !rel(ro_complement(b), ro_complement(a)))
            dv5.hit(to_string(a) + " prox " + to_string(b) + " but complements fail");

        if (dv6.ok) {
            std::vector<RegularOpenSet> witnesses;
            if (ro_proximity(a, b)) witnesses.push_back(ro_interpolate(a, b));
            witnesses.push_back(a);
            witnesses.push_back(b);
            bool hit = false;
            for (const auto& c : witnesses) hit = hit || (rel(a, c) && rel(c, b));
            if (!hit) dv6.hit("no interpolant between " + to_string(a) + " and " + to_string(b));
        }
    }
    Fail dv7;
    for (int i = 0; i < samples; ++i) {
        RegularOpenSet u = sample_proper_regular_open(rng);
        std::vector<RegularOpenSet> witnesses{ro_below(u), ro_shrink(u), u};
        bool hit = false;
        for (const auto& w : witnesses) hit = hit || (!w.is_empty() && rel(w, u));
        if (dv7.ok && !hit) dv7.hit("no nonzero element below " + to_string(u));
    }

    record(report, "DV2", dv2);
    record(report, "DV3", dv3);
    record(report, "DV4", dv4);
    record(report, "DV5", dv5);
    record(report, "DV6", dv6);
    record(report, "DV7", dv7);
    return report;
}

CheckReport dv_interval_suite(std::uint64_t seed, int samples) {
    CheckReport report;
    report.suite = "de Vries axioms on the interval carrier";

    CheckReport genuine = dv_interval_relation_suite(
        [](const RegularOpenSet& u, const RegularOpenSet& v) { return ro_proximity(u, v); }, seed,
        samples);
    for (auto& item : genuine.items) report.items.push_back(item);

    auto first_failure = [](const CheckReport& r) -> std::string {
        for (const auto& it : r.items)
            if (!it.pass && !it.skipped) return it.name + ": " + it.detail;
        return "";
    };

    CheckReport reflexive = dv_interval_relation_suite(
        [](const RegularOpenSet& u, const RegularOpenSet& v) {
            return ro_proximity(u, v) || u == v;
        },
        seed + 1, samples);
    if (!reflexive.all_pass())
        report.add_pass("mutation-reflexive-rejected", first_failure(reflexive));
    else
        report.add_fail("mutation-reflexive-rejected",
                        "the reflexive-closure mutation passed all axioms");

    CheckReport witness_free = dv_interval_relation_suite(
        [](const RegularOpenSet& u, const RegularOpenSet& v) {
            return ro_proximity(u, v) && (u.is_empty() || v.is_full());
        },
        seed + 2, samples);
    if (!witness_free.all_pass())
        report.add_pass("mutation-witness-free-rejected", first_failure(witness_free));
    else
        report.add_fail("mutation-witness-free-rejected",
                        "the witness-free mutation passed all axioms");
    return report;
}

CheckReport rigidity_suite() {
    CheckReport report;
    report.suite = "finite proximity rigidity";
    for (int atoms = 1; atoms <= 2; ++atoms) {
        FiniteBooleanAlgebra ba(atoms);
        RigidityReport rig = finite_proximity_rigidity(ba);
        std::string detail = std::to_string(rig.passing) + " of " +
                             std::to_string(rig.relations_scanned) + " relations pass";
        if (rig.only_boolean_order_passes)
            report.add_pass("atoms-" + std::to_string(atoms), detail);
        else
            report.add_fail("atoms-" + std::to_string(atoms), detail);
    }
    {
        // drop the reflexive pair of an atom from the order: DV7 must fail
        FiniteBooleanAlgebra ba(2);
        std::set<std::pair<Mask, Mask>> pairs;
        for (Mask a : ba.elements())
            for (Mask b : ba.elements())
                if (ba.leq(a, b) && !(a == 1 && b == 1)) pairs.insert({a, b});
        CheckReport mutated =
            check_devries_axioms(ba, FiniteProximity::explicit_pairs(std::move(pairs)));
        const CheckItem* dv7 = mutated.find("DV7");
        if (dv7 && !dv7->pass)
            report.add_pass("dropped-pair-rejected", "DV7: " + dv7->detail);
        else
            report.add_fail("dropped-pair-rejected", "DV7 unexpectedly passed");
    }
    return report;
}

CheckReport interval_boolean_laws_suite(std::uint64_t seed, int samples) {
    CheckReport report;
    report.suite = "interval carrier Boolean laws";
    Rng rng(seed);
    Fail invol, demorgan, dist, absorb, compl_law, assoc, canon;
    const RegularOpenSet full = RegularOpenSet::full();
    const RegularOpenSet empty = RegularOpenSet::empty();
    for (int i = 0; i < samples; ++i) {
        RegularOpenSet u = sample_regular_open(rng);
        RegularOpenSet v = sample_regular_open(rng);
        RegularOpenSet w = sample_regular_open(rng);
        if (invol.ok && !(ro_complement(ro_complement(u)) == u)) invol.hit(to_string(u));
        if (demorgan.ok &&
            !(ro_complement(ro_join(u, v)) == ro_meet(ro_complement(u), ro_complement(v)) &&
              ro_complement(ro_meet(u, v)) == ro_join(ro_complement(u), ro_complement(v))))
            demorgan.hit(to_string(u) + " , " + to_string(v));
        if (dist.ok && !(ro_meet(u, ro_join(v, w)) == ro_join(ro_meet(u, v), ro_meet(u, w)) &&
                         ro_join(u, ro_meet(v, w)) == ro_meet(ro_join(u, v), ro_join(u, w))))
            dist.hit(to_string(u) + " , " + to_string(v) + " , " + to_string(w));
        if (absorb.ok && !(ro_meet(u, ro_join(u, v)) == u && ro_join(u, ro_meet(u, v)) == u))
            absorb.hit(to_string(u) + " , " + to_string(v));
        if (compl_law.ok &&
            !(ro_meet(u, ro_complement(u)) == empty && ro_join(u, ro_complement(u)) == full))
            compl_law.hit(to_string(u));
        if (assoc.ok && !(ro_join(ro_join(u, v), w) == ro_join(u, ro_join(v, w)) &&
                          ro_meet(ro_meet(u, v), w) == ro_meet(u, ro_meet(v, w)) &&
                          ro_join(u, v) == ro_join(v, u)))
            assoc.hit(to_string(u) + " , " + to_string(v) + " , " + to_string(w));
        if (canon.ok) {
            std::vector<Seg> segs;
            for (const auto& p : u.pieces()) segs.push_back({p.lo, p.hi, p.lo == 0, p.hi == 1});
            if (!(RegularOpenSet::canonicalize(segs) == u)) canon.hit(to_string(u));
        }
    }
    record(report, "involution", invol);
    record(report, "de-morgan", demorgan);
    record(report, "distributivity", dist);
    record(report, "absorption", absorb);
    record(report, "complement-laws", compl_law);
    record(report, "assoc-comm", assoc);
    record(report, "canonical-fixpoint", canon);
    return report;
}

CheckReport domain_law_suite(std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = kind == DomainKind::integers ? "ordered domain laws (Z)"
                                                : "ordered domain laws (Q)";
    Rng rng(seed);
    Fail assoc, comm, dist, order_add, order_mul, integral, lattice, parse;
    for (int i = 0; i < samples; ++i) {
        DomainValue a = sample_scalar(rng, kind);
        DomainValue b = sample_scalar(rng, kind);
        DomainValue c = sample_scalar(rng, kind);
        if (assoc.ok && !((a + b) + c == a + (b + c) && (a * b) * c == a * (b * c)))
            assoc.hit(to_string(a));
        if (comm.ok && !(a + b == b + a && a * b == b * a)) comm.hit(to_string(a));
        if (dist.ok && !(a * (b + c) == a * b + a * c)) dist.hit(to_string(a));
        if (order_add.ok && a <= b && !(a + c <= b + c))
            order_add.hit(to_string(a) + " <= " + to_string(b));
        if (order_mul.ok && DomainValue(0) <= a && DomainValue(0) <= b &&
            !(DomainValue(0) <= a * b))
            order_mul.hit(to_string(a) + " * " + to_string(b));
        if (integral.ok && (a * b).is_zero() && !a.is_zero() && !b.is_zero())
            integral.hit(to_string(a) + " * " + to_string(b));
        if (lattice.ok &&
            !(dv_min(a, b) + dv_max(a, b) == a + b && dv_abs(a) == dv_max(a, -a) &&
              dv_abs(a * b) == dv_abs(a) * dv_abs(b)))
            lattice.hit(to_string(a));
        if (parse.ok && !(parse_domain_value(to_string(a)) == a)) parse.hit(to_string(a));
    }
    record(report, "associativity", assoc);
    record(report, "commutativity", comm);
    record(report, "distributivity", dist);
    record(report, "order-translation", order_add);
    record(report, "order-product", order_mul);
    record(report, "integrality", integral);
    record(report, "lattice-identities", lattice);
    record(report, "parse-roundtrip", parse);
    return report;
}

// --- Normal-function suites ----------------------------------------------------------

namespace {

/// A randomized element well inside g (levelwise shrink with extra meets).
PiecewiseFunction nf_random_below(Rng& rng, const PiecewiseFunction& g) {
    std::vector<DomainValue> vals = g.values();
    std::vector<RegularOpenSet> chain;
    RegularOpenSet acc = RegularOpenSet::full();
    bool first = true;
    for (const auto& a : vals) {
        RegularOpenSet level = ro_shrink(upset_level_ro(g, a));
        if (!first && rng.chance(1, 3)) level = ro_meet(level, sample_regular_open(rng));
        acc = ro_meet(acc, level);
        chain.push_back(acc);
        first = false;
    }
    return assemble_from_chain(vals, chain);
}

PiecewiseFunction sample_nonconstant_normal(Rng& rng, DomainKind kind) {
    for (int i = 0; i < 64; ++i) {
        PiecewiseFunction f = sample_normal_function(rng, kind);
        if (!f.is_constant()) return f;
    }
    return PiecewiseFunction::indicator(
        RegularOpenSet::from_pieces({{make_rat(1, 4), make_rat(1, 2)}}));
}

} // namespace

CheckReport prox_theorem_suite(std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "de Vries power proximity properties";
    Rng rng(seed);
    Fail p1, p2, p3, p4, p5;
    for (int i = 0; i < samples; ++i) {
        auto [f, g] = sample_proximal_pair(rng, kind);
        if (p1.ok && !pw_leq(f, g)) p1.hit(to_string(f) + " prox " + to_string(g));

        PiecewiseFunction lo = nf_meet(f, sample_normal_function(rng, kind));
        PiecewiseFunction hi = nf_join(g, sample_normal_function(rng, kind));
        if (p2.ok && !nf_prox(lo, hi)) p2.hit(to_string(lo) + " ... " + to_string(hi));

        PiecewiseFunction h = nf_join(g, sample_normal_function(rng, kind));
        if (p3.ok && nf_prox(f, h) && !nf_prox(f, nf_meet(g, h)))
            p3.hit(to_string(f) + " prox " + to_string(g) + " and " + to_string(h));

        PiecewiseFunction f2 = nf_random_below(rng, g);
        if (p4.ok && !nf_prox(nf_join(f, f2), g))
            p4.hit(to_string(f) + " , " + to_string(f2) + " prox " + to_string(g));

        PiecewiseFunction mid = nf_interpolate(f, g);
        if (p5.ok && !(nf_prox(f, mid) && nf_prox(mid, g)))
            p5.hit(to_string(f) + " prox " + to_string(g) + " via " + to_string(mid));
    }
    record(report, "prop-1 prox-implies-leq", p1);
    record(report, "prop-2 squeeze", p2);
    record(report, "prop-3 meet", p3);
    record(report, "prop-4 join", p4);
    record(report, "prop-5 interpolation", p5);

    Fail nonconst, consts;
    for (int i = 0; i < samples; ++i) {
        PiecewiseFunction f = sample_nonconstant_normal(rng, kind);
        if (nonconst.ok && nf_prox(f, f)) nonconst.hit(to_string(f));
    }
    for (int i = 0; i < std::max(1, samples / 10); ++i) {
        PiecewiseFunction f{sample_scalar(rng, kind)};
        if (consts.ok && !nf_prox(f, f)) consts.hit(to_string(f));
    }
    record(report, "prop-6 nonconstant-excluded", nonconst);
    record(report, "prop-6 constants-included", consts);
    return report;
}

CheckReport oracle_equivalence_suite(std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "oracle equivalence (symbolic vs pointwise-normalize)";
    Rng rng(seed);
    IntervalCarrier carrier;
    using S = Specker<IntervalCarrier>;

    Fail round_fn, round_sp, add, mul, meet, join, neg, scal, absf, prox_eq;
    for (int i = 0; i < samples; ++i) {
        PiecewiseFunction f = sample_normal_function(rng, kind);
        PiecewiseFunction g = sample_normal_function(rng, kind);
        S s = from_normal(carrier, f);
        S t = from_normal(carrier, g);

        if (round_fn.ok && !(to_normal(s) == f)) round_fn.hit(to_string(f));
        if (round_sp.ok && !sp_equal(from_normal(carrier, to_normal(s)), s))
            round_sp.hit(to_string(s));

        auto check = [&](Fail& fail, const S& symbolic, const PiecewiseFunction& oracle,
                         const char* what) {
            if (fail.ok && !(to_normal(symbolic) == oracle))
                fail.hit(std::string(what) + ": f=" + to_string(f) + " g=" + to_string(g));
        };
        check(add, sp_add(s, t), nf_add(f, g), "add");
        check(mul, sp_mul(s, t), nf_mul(f, g), "mul");
        check(meet, sp_meet(s, t), nf_meet(f, g), "meet");
        check(join, sp_join(s, t), nf_join(f, g), "join");
        check(neg, sp_negate(s), nf_negate(f), "negate");
        DomainValue a = sample_scalar(rng, kind);
        check(scal, sp_scalar(a, s), nf_scalar(a, f), "scalar");
        check(absf, sp_abs(s), nf_abs(f), "abs");

        if (prox_eq.ok && sp_prox(s, t) != nf_prox(f, g))
            prox_eq.hit("f=" + to_string(f) + " g=" + to_string(g));
        auto [pf, pg] = sample_proximal_pair(rng, kind);
        S ps = from_normal(carrier, pf);
        S pt = from_normal(carrier, pg);
        if (prox_eq.ok && (sp_prox(ps, pt) != nf_prox(pf, pg) || !sp_prox(ps, pt)))
            prox_eq.hit("proximal f=" + to_string(pf) + " g=" + to_string(pg));
    }
    record(report, "bijection-function-roundtrip", round_fn);
    record(report, "bijection-element-roundtrip", round_sp);
    record(report, "add", add);
    record(report, "mul", mul);
    record(report, "meet", meet);
    record(report, "join", join);
    record(report, "negate", neg);
    record(report, "scalar", scal);
    record(report, "abs", absf);
    record(report, "prox-levelwise", prox_eq);
    return report;
}

CheckReport level_formula_suite(std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "level-set formulas";
    Rng rng(seed);
    Fail sum, product, scalar, shift, negation;
    for (int i = 0; i < samples; ++i) {
        PiecewiseFunction f = sample_normal_function(rng, kind);
        PiecewiseFunction g = sample_normal_function(rng, kind);
        if (sum.ok) {
            CheckReport r = level_formula_check(f, g, LevelFormula::sum, DomainValue(1));
            if (!r.all_pass()) sum.hit("f=" + to_string(f) + " g=" + to_string(g));
        }
        PiecewiseFunction fp = nf_shift_nonneg(f);
        PiecewiseFunction gp = nf_shift_nonneg(g);
        if (product.ok) {
            CheckReport r = level_formula_check(fp, gp, LevelFormula::product, DomainValue(1));
            if (!r.all_pass()) product.hit("f=" + to_string(fp) + " g=" + to_string(gp));
        }
        DomainValue c = dv_abs(sample_scalar(rng, kind)) + DomainValue(1);
        if (scalar.ok) {
            CheckReport r = level_formula_check(f, g, LevelFormula::scalar, c);
            if (!r.all_pass()) scalar.hit("f=" + to_string(f) + " c=" + to_string(c));
        }
        if (shift.ok) {
            CheckReport r = level_formula_check(f, g, LevelFormula::scalar_shift, c);
            if (!r.all_pass()) shift.hit("f=" + to_string(f) + " c=" + to_string(c));
        }
        if (negation.ok) {
            CheckReport r = level_formula_check(f, g, LevelFormula::negation, DomainValue(1));
            if (!r.all_pass()) negation.hit("f=" + to_string(f));
        }
    }
    record(report, "clause-1 sum", sum);
    record(report, "clause-2 product", product);
    record(report, "clause-3 scalar", scalar);
    record(report, "clause-4 scalar-shift", shift);
    record(report, "clause-5 negation", negation);
    return report;
}

CheckReport roundtrip_suite(std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "orthogonal/decreasing roundtrip and compatible forms";
    Rng rng(seed);
    IntervalCarrier ic;
    FiniteCarrier fc(3);
    Fail round_i, round_f, leq_oracle, prox_oracle, prox_restrict, compat;
    for (int i = 0; i < samples; ++i) {
        auto s = sample_element(ic, rng, kind);
        auto t = sample_element(ic, rng, kind);
        if (round_i.ok && !sp_equal(to_orthogonal(ic, to_decreasing(s)), s))
            round_i.hit(to_string(s));
        auto fs = sample_element(fc, rng, kind);
        if (round_f.ok && !sp_equal(to_orthogonal(fc, to_decreasing(fs)), fs))
            round_f.hit(to_string(fs));

        if (leq_oracle.ok && sp_leq(s, t) != pw_leq(to_normal(s), to_normal(t)))
            leq_oracle.hit("s=" + to_string(s) + " t=" + to_string(t));
        if (prox_oracle.ok && sp_prox(s, t) != nf_prox(to_normal(s), to_normal(t)))
            prox_oracle.hit("s=" + to_string(s) + " t=" + to_string(t));

        RegularOpenSet u = sample_regular_open(rng);
        RegularOpenSet v = sample_regular_open(rng);
        if (prox_restrict.ok &&
            sp_prox(Specker<IntervalCarrier>::indicator(ic, u),
                    Specker<IntervalCarrier>::indicator(ic, v)) != ro_proximity(u, v))
            prox_restrict.hit("U=" + to_string(u) + " V=" + to_string(v));

        if (compat.ok) {
            auto pair = compatible_decreasing(s, t);
            DecreasingForm<IntervalCarrier> ds{pair.base, {}, false};
            DecreasingForm<IntervalCarrier> dt{pair.base, {}, false};
            for (std::size_t j = 0; j < pair.steps.size(); ++j) {
                ds.steps.emplace_back(pair.steps[j], pair.left[j]);
                dt.steps.emplace_back(pair.steps[j], pair.right[j]);
            }
            if (!sp_equal(to_orthogonal(ic, ds), s) || !sp_equal(to_orthogonal(ic, dt), t))
                compat.hit("s=" + to_string(s) + " t=" + to_string(t));
        }
    }
    record(report, "roundtrip-interval", round_i);
    record(report, "roundtrip-finite", round_f);
    record(report, "leq-vs-pointwise-oracle", leq_oracle);
    record(report, "prox-vs-levelwise-oracle", prox_oracle);
    record(report, "prox-restricts-to-carrier", prox_restrict);
    record(report, "compatible-form-reassembly", compat);
    return report;
}

CheckReport normalization_suite(std::uint64_t seed, DomainKind kind, int samples) {
    CheckReport report;
    report.suite = "normalization operator";
    Rng rng(seed);
    Fail idem, image, order, shift, supshift, posscale, chi, fixpoint;
    for (int i = 0; i < samples; ++i) {
        PiecewiseFunction f = sample_piecewise(rng, kind);
        PiecewiseFunction nf = normalize(f);
        if (idem.ok && !(normalize(nf) == nf)) idem.hit(to_string(f));
        if (fixpoint.ok && is_normal(f) != (normalize(f) == f)) fixpoint.hit(to_string(f));
        if (image.ok) {
            std::vector<DomainValue> iv = f.values(), ov = nf.values();
            for (const auto& v : ov)
                if (std::find(iv.begin(), iv.end(), v) == iv.end()) image.hit(to_string(f));
        }
        PiecewiseFunction g = pw_max(f, sample_piecewise(rng, kind));
        if (order.ok && !pw_leq(normalize(f), normalize(g)))
            order.hit(to_string(f) + " <= " + to_string(g));

        DomainValue a = sample_scalar(rng, kind);
        PiecewiseFunction cst{a};
        if (shift.ok && !(normalize(pw_add(cst, f)) == pw_add(cst, nf)))
            shift.hit("a=" + to_string(a) + " f=" + to_string(f));
        if (supshift.ok && !(normalize(pw_max(cst, f)) == pw_max(cst, nf)))
            supshift.hit("a=" + to_string(a) + " f=" + to_string(f));
        DomainValue pos = dv_abs(a);
        if (posscale.ok && !(normalize(pw_scalar(pos, f)) == pw_scalar(pos, nf)))
            posscale.hit("a=" + to_string(pos) + " f=" + to_string(f));

        RegularOpenSet u = sample_regular_open(rng);
        PiecewiseFunction ind = PiecewiseFunction::indicator(u);
        if (chi.ok) {
            if (!(nf_mul(ind, ind) == ind))
                chi.hit(to_string(u));
            else {
                PiecewiseFunction h = sample_normal_function(rng, kind);
                bool idempotent = nf_mul(h, h) == h;
                bool characteristic = true;
                for (const auto& v : h.values())
                    characteristic =
                        characteristic && (v == DomainValue(0) || v == DomainValue(1));
                if (idempotent != characteristic) chi.hit(to_string(h));
            }
        }
    }
    record(report, "idempotence", idem);
    record(report, "fixpoint-iff-normal", fixpoint);
    record(report, "image-shrinks", image);
    record(report, "order-preserving", order);
    record(report, "scalar-shift", shift);
    record(report, "scalar-sup", supshift);
    record(report, "positive-scalar", posscale);
    record(report, "idempotents-are-characteristic", chi);
    return report;
}

// --- Ends, duality, morphisms -----------------------------------------------------------

CheckReport ends_agreement_suite(std::uint64_t seed, int samples) {
    CheckReport report;
    report.suite = "five-way end characterization";
    Rng rng(seed);
    for (int atoms = 1; atoms <= 3; ++atoms) {
        FiniteCarrier carrier(atoms);
        EndsCrossCheck cc = ends_of_specker(carrier);
        std::string tag = "atoms-" + std::to_string(atoms);
        if (cc.agree && static_cast<int>(cc.from_boolean_ends.size()) == atoms)
            report.add_pass(tag + " three-routes+maximality",
                            std::to_string(cc.from_boolean_ends.size()) + " ends");
        else
            report.add_fail(tag + " three-routes+maximality", "routes disagree");

        for (DomainKind kind : {DomainKind::integers, DomainKind::rationals}) {
            Fail ideal_props;
            FiniteCarrier target(1);
            for (Mask g : cc.from_boolean_ends) {
                SpeckerEnd end{g, true};
                std::vector<Mask> table(carrier.algebra().size());
                for (Mask e : carrier.algebra().elements())
                    table[e] = carrier.leq(e, g) ? 0 : 1;
                FinMorphism alpha = extend_morphism(table, carrier, target);
                for (int i = 0; i < samples; ++i) {
                    FinSpecker member = sp_mul(sample_element(carrier, rng, kind),
                                               FinSpecker::indicator(carrier, g));
                    FinSpecker outsider = sample_element(carrier, rng, kind);
                    DomainValue c = sample_scalar(rng, kind);
                    bool ok = end.contains(member) && end.contains(sp_abs(member)) &&
                              sp_prox(sp_abs(member), sp_abs(member)) &&
                              end.contains(sp_meet(sp_abs(member), sp_abs(outsider))) &&
                              (c.is_zero() ||
                               !end.contains(FinSpecker::constant(carrier, c))) &&
                              end.contains(outsider) ==
                                  sp_is_zero(alpha.apply(sp_abs(outsider)));
                    if (!ok) {
                        ideal_props.hit("end " + carrier.print(g) + " member " +
                                        to_string(member));
                        break;
                    }
                }
            }
            std::string kindname = kind == DomainKind::integers ? " Z" : " Q";
            record(report, tag + " ideal-properties" + kindname, ideal_props);
        }
    }
    return report;
}

CheckReport duality_suite(std::uint64_t seed, int samples) {
    CheckReport report;
    report.suite = "duality roundtrips and category laws";
    Rng rng(seed);
    for (int pts = 1; pts <= 5; ++pts) {
        DualityReport r = duality_roundtrip_space(pts);
        if (r.pass)
            report.add_pass("space-roundtrip-" + std::to_string(pts), r.detail);
        else
            report.add_fail("space-roundtrip-" + std::to_string(pts), r.detail);
    }
    for (int atoms = 1; atoms <= 3; ++atoms)
        for (DomainKind kind : {DomainKind::integers, DomainKind::rationals}) {
            FiniteCarrier carrier(atoms);
            DualityReport r = duality_roundtrip_algebra(carrier, rng, kind, samples);
            std::string tag = "algebra-roundtrip-" + std::to_string(atoms) +
                              (kind == DomainKind::integers ? "-Z" : "-Q");
            if (r.pass)
                report.add_pass(tag, r.detail);
            else
                report.add_fail(tag, r.detail);
        }

    // star composition laws, exhaustive over chains of 1- and 2-atom algebras
    std::vector<FiniteBooleanAlgebra> algebras{FiniteBooleanAlgebra(1), FiniteBooleanAlgebra(2)};
    FiniteProximity order = FiniteProximity::boolean_order();
    Fail assoc, unit;
    for (const auto& a : algebras)
        for (const auto& b : algebras)
            for (const auto& c : algebras)
                for (const auto& d : algebras) {
                    auto ab = enumerate_devries_morphisms(a, b);
                    auto bc = enumerate_devries_morphisms(b, c);
                    auto cd = enumerate_devries_morphisms(c, d);
                    for (const auto& f : ab)
                        for (const auto& g : bc)
                            for (const auto& h : cd) {
                                auto gf = compose_devries(g, f, a, order, c);
                                auto hg = compose_devries(h, g, b, order, d);
                                auto left = compose_devries(h, gf, a, order, d);
                                auto right = compose_devries(hg, f, a, order, d);
                                if (assoc.ok && left != right) assoc.hit("chain mismatch");
                            }
                    for (const auto& f : ab) {
                        auto lid = compose_devries(identity_devries(b), f, a, order, b);
                        auto rid = compose_devries(f, identity_devries(a), a, order, b);
                        if (unit.ok && (lid != f || rid != f)) unit.hit("identity law");
                    }
                }
    record(report, "star-associativity", assoc);
    record(report, "star-identity", unit);
    return report;
}

CheckReport morphism_suite(std::uint64_t seed, int samples) {
    CheckReport report;
    report.suite = "proximity morphisms";
    Rng rng(seed);

    Fail clauses, restrict;
    {
        FiniteCarrier src(2), dst2(2), dst1(1);
        for (DomainKind kind : {DomainKind::integers, DomainKind::rationals}) {
            std::vector<const FiniteCarrier*> dsts{&dst2, &dst1};
            for (const FiniteCarrier* dstp : dsts) {
                auto tables = enumerate_devries_morphisms(src.algebra(), dstp->algebra());
                for (const auto& table : tables) {
                    FinMorphism alpha = extend_morphism(table, src, *dstp);
                    if (clauses.ok) {
                        std::function<FinSpecker(const FinSpecker&)> alpha_fn =
                            [&alpha](const FinSpecker& s) { return alpha.apply(s); };
                        CheckReport r = check_proximity_morphism<FiniteCarrier, FiniteCarrier>(
                            alpha_fn, src, *dstp, rng, kind, std::max(8, samples / 16));
                        if (!r.all_pass())
                            clauses.hit("table morphism failed:\n" + r.render_text());
                    }
                    if (restrict.ok) {
                        for (Mask e : src.algebra().elements()) {
                            auto ind = alpha.apply(FinSpecker::indicator(src, e)).as_indicator();
                            if (!ind || *ind != table[e]) {
                                restrict.hit("restriction differs at " + src.print(e));
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    record(report, "extend-then-check-morphism-laws", clauses);
    record(report, "restriction-recovers-table", restrict);

    {
        IntervalCarrier ic;
        PLMap half = PLMap::through({{Rat(0), Rat(0)}, {Rat(1), make_rat(1, 2)}});
        IntervalMorphism alpha = phi_star(half, ic, ic);
        std::function<Specker<IntervalCarrier>(const Specker<IntervalCarrier>&)> alpha_fn =
            [&alpha](const Specker<IntervalCarrier>& s) { return alpha.apply(s); };
        CheckReport r = check_proximity_morphism<IntervalCarrier, IntervalCarrier>(
            alpha_fn, ic, ic, rng, DomainKind::integers, samples);
        bool skipped_lub = false;
        for (const auto& item : r.items) skipped_lub = skipped_lub || item.skipped;
        if (r.all_pass() && skipped_lub)
            report.add_pass("plmap-morphism-clauses", "lub clause skipped (incomplete target)");
        else
            report.add_fail("plmap-morphism-clauses", r.render_text());

        Fail level_id;
        for (int i = 0; i < samples; ++i) {
            PiecewiseFunction f = sample_normal_function(rng, DomainKind::integers);
            Specker<IntervalCarrier> img = alpha.apply(from_normal(ic, f));
            PiecewiseFunction imgf = to_normal(img);
            for (const auto& a : f.values())
                if (level_id.ok &&
                    !(upset_level_ro(imgf, a) == pl_hat(half, upset_level_ro(f, a))))
                    level_id.hit("f=" + to_string(f) + " a=" + to_string(a));
        }
        record(report, "plmap-level-set-identity", level_id);

        // a pointwise compose without normalization leaves the algebra: fold
        // a jump boundary onto itself with a tent map
        PLMap tent = PLMap::through({{Rat(0), Rat(0)},
                                     {make_rat(1, 2), make_rat(1, 2)},
                                     {Rat(1), Rat(0)}});
        PiecewiseFunction witness = PiecewiseFunction::indicator(
            RegularOpenSet::from_pieces({{make_rat(1, 4), make_rat(1, 2)}}));
        std::vector<Rat> cuts{Rat(0), make_rat(1, 4), make_rat(1, 2), make_rat(3, 4), Rat(1)};
        std::vector<DomainValue> pieces, points;
        bool pointwise_ok = true;
        for (std::size_t j = 0; j + 1 < cuts.size(); ++j)
            pieces.push_back(witness(tent.apply(midpoint(cuts[j], cuts[j + 1]))));
        for (std::size_t j = 1; j + 1 < cuts.size(); ++j)
            points.push_back(witness(tent.apply(cuts[j])));
        PiecewiseFunction composed =
            PiecewiseFunction::make(cuts, std::move(pieces), std::move(points));
        for (int num = 0; num <= 16; ++num) {
            Rat x = make_rat(num, 16);
            pointwise_ok = pointwise_ok && composed(x) == witness(tent.apply(x));
        }
        if (pointwise_ok && !is_normal(composed))
            report.add_pass("fault-pointwise-compose-detected",
                            "un-normalized compose leaves the algebra");
        else
            report.add_fail("fault-pointwise-compose-detected",
                            "pointwise tent compose unexpectedly stayed normal");
    }

    Fail continuity, functorial;
    {
        for (int src_atoms = 2; src_atoms <= 3; ++src_atoms) {
            FiniteCarrier src(src_atoms), dst(2);
            auto ends_src = ends(src.algebra(), src.proximity());
            auto ends_dst = ends(dst.algebra(), dst.proximity());
            for (const auto& table : enumerate_devries_morphisms(src.algebra(), dst.algebra())) {
                FinMorphism alpha = extend_morphism(table, src, dst);
                std::vector<int> dual = dual_of_morphism(alpha, ends_src, ends_dst);
                for (int i = 0; i < std::max(4, samples / 32); ++i) {
                    FinSpecker s = sample_element(src, rng, DomainKind::integers);
                    FinSpecker abs_s = sp_abs(s);
                    FinSpecker at = alpha.apply(abs_s);
                    FinSpecker bigger =
                        sp_join(abs_s, sample_element(src, rng, DomainKind::integers));
                    FinSpecker abig = alpha.apply(bigger);
                    for (std::size_t j = 0; j < ends_dst.size(); ++j) {
                        bool lhs = SpeckerEnd{ends_src[dual[j]], true}.contains(s);
                        bool rhs = SpeckerEnd{ends_dst[j], true}.contains(at);
                        bool extra = SpeckerEnd{ends_dst[j], true}.contains(abig);
                        if (extra && !rhs && continuity.ok)
                            continuity.hit("union not attained at |s|");
                        if (lhs != rhs && continuity.ok)
                            continuity.hit("s=" + to_string(s) + " end " +
                                           dst.print(ends_dst[j]));
                    }
                }
            }
        }
    }
    {
        for (int nx = 1; nx <= 3 && functorial.ok; ++nx)
            for (int ny = 1; ny <= 3 && functorial.ok; ++ny)
                for (int nz = 1; nz <= 3 && functorial.ok; ++nz) {
                    FiniteCarrier cx(nx), cy(ny), cz(nz);
                    std::vector<std::vector<int>> phis; // X -> Y
                    std::vector<int> cur(nx, 0);
                    std::function<void(std::size_t)> rec = [&](std::size_t i) {
                        if (i == cur.size()) {
                            phis.push_back(cur);
                            return;
                        }
                        for (int y = 0; y < ny; ++y) {
                            cur[i] = y;
                            rec(i + 1);
                        }
                    };
                    rec(0);
                    std::vector<std::vector<int>> psis; // Y -> Z
                    std::vector<int> cur2(ny, 0);
                    std::function<void(std::size_t)> rec2 = [&](std::size_t i) {
                        if (i == cur2.size()) {
                            psis.push_back(cur2);
                            return;
                        }
                        for (int z = 0; z < nz; ++z) {
                            cur2[i] = z;
                            rec2(i + 1);
                        }
                    };
                    rec2(0);
                    for (const auto& phi : phis)
                        for (const auto& psi : psis) {
                            std::vector<int> comp(nx);
                            for (int i = 0; i < nx; ++i) comp[i] = psi[phi[i]];
                            FinMorphism phi_m = phi_star_finite(phi, cy, cx);
                            FinMorphism psi_m = phi_star_finite(psi, cz, cy);
                            FinMorphism comp_m = phi_star_finite(comp, cz, cx);
                            FinMorphism starred = compose_prox(phi_m, psi_m);
                            for (Mask e : cz.algebra().elements())
                                if (functorial.ok &&
                                    comp_m.apply_idem(e) != starred.apply_idem(e))
                                    functorial.hit("maps disagree");
                        }
                }
    }
    record(report, "dual-continuity-identity", continuity);
    record(report, "composite-functoriality", functorial);

    Fail bp;
    {
        IntervalCarrier ic;
        FiniteCarrier fc(2);
        for (int i = 0; i < samples; ++i) {
            auto s = sample_element(ic, rng, DomainKind::integers);
            bool member = in_boolean_power(s);
            if (bp.ok && member != s.is_constant()) bp.hit(to_string(s));
            auto fs = sample_element(fc, rng, DomainKind::integers);
            if (bp.ok && !in_boolean_power(fs)) bp.hit("finite " + to_string(fs));
            DomainValue a = sample_scalar(rng, DomainKind::integers);
            DomainValue b = sample_scalar(rng, DomainKind::integers);
            auto x = Specker<IntervalCarrier>::constant(ic, a);
            auto y = Specker<IntervalCarrier>::constant(ic, b);
            if (bp.ok && !(in_boolean_power(sp_add(x, y)) && in_boolean_power(sp_mul(x, y)) &&
                           in_boolean_power(sp_meet(x, y)) && in_boolean_power(sp_join(x, y))))
                bp.hit("closure at " + to_string(a) + "," + to_string(b));
        }
    }
    record(report, "boolean-power-subalgebra", bp);
    return report;
}

} // namespace devries
