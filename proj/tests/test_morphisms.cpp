#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "devries/morphisms.hpp"

using namespace devries;

namespace {

const FiniteCarrier two(2);
const FiniteCarrier one(1);
const IntervalCarrier ic;

/// sigma dual to the inclusion of a point: sigma(e) = 1 iff the first atom is in e.
std::vector<Mask> projection_table() {
    std::vector<Mask> table(two.algebra().size());
    for (Mask e : two.algebra().elements()) table[e] = (e & 1) ? 1 : 0;
    return table;
}

} // namespace

TEST_CASE("extension acts through the decreasing form") {
    FinMorphism alpha = extend_morphism(projection_table(), two, one);
    // alpha(a, b) = a: the element with value a at the first atom and b at the second
    for (long a : {-3L, 0L, 2L})
        for (long b : {-1L, 0L, 5L}) {
            auto s = Specker<FiniteCarrier>::from_orthogonal(
                two, a == b ? std::vector<Specker<FiniteCarrier>::Term>{{DomainValue(a), 3u}}
                            : std::vector<Specker<FiniteCarrier>::Term>{{DomainValue(a), 1u},
                                                                        {DomainValue(b), 2u}});
            CHECK(sp_equal(alpha.apply(s), Specker<FiniteCarrier>::constant(one, DomainValue(a))));
        }

    auto id = identity_morphism(two);
    Rng rng(3);
    for (int i = 0; i < 50; ++i) {
        auto s = sample_element(two, rng, DomainKind::integers);
        CHECK(sp_equal(id.apply(s), s));
    }

    std::vector<Mask> not_a_morphism(two.algebra().size(), two.top());
    CHECK_THROWS_AS(extend_morphism(not_a_morphism, two, one), std::invalid_argument);
}

TEST_CASE("the identity map induces the identity morphism") {
    IntervalMorphism alpha = phi_star(PLMap::identity(), ic, ic);
    Rng rng(61);
    for (int i = 0; i < 60; ++i) {
        auto s = sample_element(ic, rng, DomainKind::rationals);
        CHECK(sp_equal(alpha.apply(s), s));
    }
}

TEST_CASE("contraction normalizes the stretched preimage") {
    IntervalMorphism alpha = phi_star(PLMap::through({{Rat(0), Rat(0)}, {Rat(1), make_rat(1, 2)}}),
                                      ic, ic);
    auto chi = Specker<IntervalCarrier>::indicator(ic, parse_regular_open("[0,1/2)"));
    CHECK(sp_equal(alpha.apply(chi), Specker<IntervalCarrier>::constant(ic, DomainValue(1))));
}

TEST_CASE("point inclusion picks a coordinate") {
    // r maps to the first point of {p, q}: alpha(a, b) = a
    FinMorphism alpha = phi_star_finite({0}, two, one);
    auto s = Specker<FiniteCarrier>::from_orthogonal(
        two, {{DomainValue(4), 1u}, {DomainValue(-2), 2u}});
    CHECK(sp_equal(alpha.apply(s), Specker<FiniteCarrier>::constant(one, DomainValue(4))));
}

TEST_CASE("constant map collapses to evaluation") {
    IntervalMorphism alpha = phi_star(PLMap::constant(make_rat(1, 2)), ic, ic);
    auto chi_mid = Specker<IntervalCarrier>::indicator(ic, parse_regular_open("(1/4,3/4)"));
    auto chi_high = Specker<IntervalCarrier>::indicator(ic, parse_regular_open("(3/4,1]"));
    CHECK(sp_equal(alpha.apply(chi_mid),
                   Specker<IntervalCarrier>::constant(ic, DomainValue(1))));
    CHECK(sp_equal(alpha.apply(chi_high),
                   Specker<IntervalCarrier>::constant(ic, DomainValue(0))));
}

TEST_CASE("kernels of evaluations") {
    FinMorphism alpha = extend_morphism(projection_table(), two, one);
    SpeckerEnd end = kernel(alpha);
    CHECK(end.proper);
    CHECK(end.boolean_generator == 2u); // everything vanishing at the first atom
    // kernel = 0 + A: contains (0, t) but no (a, t) with a != 0
    auto in_kernel = Specker<FiniteCarrier>::from_orthogonal(
        two, {{DomainValue(0), 1u}, {DomainValue(7), 2u}});
    auto out_kernel = Specker<FiniteCarrier>::from_orthogonal(
        two, {{DomainValue(1), 1u}, {DomainValue(0), 2u}});
    CHECK(end.contains(in_kernel));
    CHECK_FALSE(end.contains(out_kernel));

    FinMorphism ident = extend_morphism(identity_devries(one.algebra()), one, one);
    SpeckerEnd trivial = kernel(ident);
    CHECK(trivial.proper);
    CHECK(trivial.boolean_generator == 0u);

    // three atoms, evaluation at the middle one
    FiniteCarrier three(3);
    std::vector<Mask> table(three.algebra().size());
    for (Mask e : three.algebra().elements()) table[e] = (e & 2) ? 1 : 0;
    SpeckerEnd mid = kernel(extend_morphism(table, three, one));
    CHECK(mid.boolean_generator == 5u); // A + 0 + A
}

TEST_CASE("three routes to the ends agree") {
    for (int atoms = 1; atoms <= 3; ++atoms) {
        EndsCrossCheck cc = ends_of_specker(FiniteCarrier(atoms));
        CHECK(cc.agree);
        CHECK(static_cast<int>(cc.from_boolean_ends.size()) == atoms);
        CHECK(cc.maximality_verified);
    }
    CHECK_THROWS_AS(ends_of_specker(FiniteCarrier(4)), ScaleError);
}

TEST_CASE("the end space of the algebra matches the Boolean end space") {
    Rng rng(7);
    for (int atoms = 1; atoms <= 3; ++atoms) {
        SpeckerEndSpace space = end_space_of_specker(FiniteCarrier(atoms), rng,
                                                     DomainKind::integers, 40);
        CHECK(space.bases_match);
        CHECK(static_cast<int>(space.end_generators.size()) == atoms);
        CHECK(space.boolean_space.is_discrete());
    }
}

TEST_CASE("composition and duals") {
    FinMorphism alpha = extend_morphism(projection_table(), two, one);
    FinMorphism beta = extend_morphism(identity_devries(one.algebra()), one, one);
    FinMorphism comp = compose_prox(beta, alpha);
    for (Mask e : two.algebra().elements()) CHECK(comp.apply_idem(e) == alpha.apply_idem(e));

    auto ends_two = ends(two.algebra(), two.proximity());
    auto ends_one = ends(one.algebra(), one.proximity());
    std::vector<int> dual = dual_of_morphism(alpha, ends_two, ends_one);
    REQUIRE(dual.size() == 1);
    // the unique end of A lands on the end at the first atom, generator 01
    CHECK(ends_two[dual[0]] == 2u);

    FinMorphism ident = extend_morphism(identity_devries(two.algebra()), two, two);
    std::vector<int> dual_id = dual_of_morphism(ident, ends_two, ends_two);
    CHECK(dual_id == std::vector<int>{0, 1});
}

TEST_CASE("duality roundtrips at the spec instances") {
    DualityReport two_pts = duality_roundtrip_space(2);
    CHECK(two_pts.pass);
    DualityReport one_pt = duality_roundtrip_space(1);
    CHECK(one_pt.pass);
    CHECK_THROWS_AS(duality_roundtrip_space(7), ScaleError);

    Rng rng(13);
    DualityReport alg = duality_roundtrip_algebra(FiniteCarrier(3), rng, DomainKind::rationals, 60);
    CHECK(alg.pass);
    CHECK_THROWS_AS(duality_roundtrip_algebra(FiniteCarrier(4), rng, DomainKind::integers, 10),
                    ScaleError);
}

TEST_CASE("basis identities of the end-space opens") {
    Rng rng(59);
    auto ends_two = ends(two.algebra(), two.proximity());
    for (int i = 0; i < 100; ++i) {
        FinSpecker s = sample_element(two, rng, DomainKind::rationals);
        FinSpecker t = sample_element(two, rng, DomainKind::rationals);
        for (Mask g : ends_two) {
            SpeckerEnd end{g, true};
            CHECK(end.contains(s) == end.contains(sp_abs(s)));
            CHECK(end.contains(sp_join(sp_abs(s), sp_abs(t))) ==
                  (end.contains(s) && end.contains(t)));
            CHECK(end.contains(FinSpecker::constant(two, DomainValue(0))));
            CHECK_FALSE(end.contains(FinSpecker::constant(two, DomainValue(1))));
        }
    }
}

TEST_CASE("boolean power membership") {
    Rng rng(17);
    auto chi = Specker<IntervalCarrier>::indicator(ic, parse_regular_open("(1/4,1/2)"));
    CHECK_FALSE(in_boolean_power(chi));
    CHECK(in_boolean_power(Specker<IntervalCarrier>::constant(ic, DomainValue(5))));
    FiniteCarrier fc(2);
    for (int i = 0; i < 100; ++i)
        CHECK(in_boolean_power(sample_element(fc, rng, DomainKind::integers)));
}

TEST_CASE("morphism file format") {
    MorphismSpec fin = parse_morphism_file(
        "source: finite:2\ntarget: finite:1\nmap:\n00 -> 0\n10 -> 1\n01 -> 0\n11 -> 1\n");
    CHECK(fin.kind == MorphismSpec::Kind::finite);
    CHECK(fin.table == projection_table());

    MorphismSpec iv = parse_morphism_file("source: interval\ntarget: interval\nplmap: (0,0) (1,1/2)\n");
    CHECK(iv.kind == MorphismSpec::Kind::interval);
    CHECK(iv.plmap.apply(Rat(1)) == make_rat(1, 2));

    CHECK_THROWS_AS(parse_morphism_file("source: finite:2\ntarget: interval\n"), ParseError);
    CHECK_THROWS_AS(parse_morphism_file("source: finite:1\ntarget: finite:1\nmap:\n0 -> 0\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_morphism_file("source: finite:1\ntarget: finite:1\nmap:\n0 -> 0\n0 -> 1\n"),
        ParseError);
}

TEST_CASE("checker flags a broken element map") {
    // right map on idempotents, wrong action on scalars
    Rng rng(23);
    std::function<FinSpecker(const FinSpecker&)> bogus = [](const FinSpecker& s) {
        return sp_add(s, FinSpecker::constant(s.carrier(), DomainValue(1)));
    };
    CheckReport r = check_proximity_morphism<FiniteCarrier, FiniteCarrier>(
        bogus, two, two, rng, DomainKind::integers, 40);
    CHECK_FALSE(r.all_pass());
}
