#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "devries/finite_boolean.hpp"

using namespace devries;

TEST_CASE("the order passes every axiom up to six atoms") {
    // exhaustive tuple scans to 4 atoms, seeded sampling at 5 and 6
    for (int atoms = 1; atoms <= 6; ++atoms) {
        FiniteBooleanAlgebra ba(atoms);
        CHECK(check_devries_axioms(ba, FiniteProximity::boolean_order()).all_pass());
    }
    CHECK_THROWS_AS(check_devries_axioms(FiniteBooleanAlgebra(11), FiniteProximity::boolean_order()),
                    ScaleError);
}

TEST_CASE("top-bottom relation fails DV7 at an atom") {
    // 0 below everything and everything below 1; no witness below an atom
    FiniteBooleanAlgebra ba(2);
    std::set<std::pair<Mask, Mask>> pairs;
    for (Mask x : ba.elements()) {
        pairs.insert({0, x});
        pairs.insert({x, ba.top()});
    }
    pairs.insert({0, 0});
    pairs.insert({ba.top(), ba.top()});
    CheckReport r = check_devries_axioms(ba, FiniteProximity::explicit_pairs(pairs));
    const CheckItem* dv7 = r.find("DV7");
    REQUIRE(dv7 != nullptr);
    CHECK_FALSE(dv7->pass);
    for (const char* name : {"DV1", "DV2", "DV3", "DV4", "DV5", "DV6"})
        CHECK(r.find(name)->pass);
}

TEST_CASE("the empty relation fails DV1") {
    FiniteBooleanAlgebra ba(2);
    CheckReport r = check_devries_axioms(ba, FiniteProximity::explicit_pairs({}));
    CHECK_FALSE(r.find("DV1")->pass);
}

TEST_CASE("round ideals of the order are the principal ideals") {
    FiniteBooleanAlgebra ba2(2);
    auto ideals = round_ideals(ba2, FiniteProximity::boolean_order());
    REQUIRE(ideals.size() == 4);
    CHECK(ideals[0] == std::vector<Mask>{0});
    CHECK(ideals[1] == std::vector<Mask>{0, 1});
    CHECK(ideals[2] == std::vector<Mask>{0, 2});
    CHECK(ideals[3] == std::vector<Mask>{0, 1, 2, 3});

    FiniteBooleanAlgebra ba1(1);
    auto small = round_ideals(ba1, FiniteProximity::boolean_order());
    REQUIRE(small.size() == 2);
    CHECK(small[0] == std::vector<Mask>{0});
    CHECK(small[1] == std::vector<Mask>{0, 1});
}

TEST_CASE("a set not closed under join is rejected") {
    FiniteBooleanAlgebra ba(2);
    CHECK_FALSE(is_ideal(ba, {0, 1, 2})); // {0, a, not-a} misses the join 1
    CHECK(is_ideal(ba, {0, 1}));
    CHECK(is_round_ideal(ba, FiniteProximity::boolean_order(), {0, 1}));
}

TEST_CASE("ends are the complements of atoms") {
    FiniteBooleanAlgebra ba2(2);
    auto e2 = ends(ba2, FiniteProximity::boolean_order());
    CHECK(e2 == std::vector<Mask>{1, 2});

    FiniteBooleanAlgebra ba1(1);
    CHECK(ends(ba1, FiniteProximity::boolean_order()) == std::vector<Mask>{0});

    FiniteBooleanAlgebra ba3(3);
    auto e3 = ends(ba3, FiniteProximity::boolean_order());
    REQUIRE(e3.size() == 3);
    for (Mask g : e3) CHECK(__builtin_popcount(ba3.complement(g)) == 1);

    CHECK_THROWS_AS(ends(FiniteBooleanAlgebra(7), FiniteProximity::boolean_order()), ScaleError);
}

TEST_CASE("end spaces are discrete with injective basis on atoms") {
    FiniteProximity order = FiniteProximity::boolean_order();
    {
        FiniteBooleanAlgebra ba(2);
        FiniteEndSpace space = end_space(ba, order);
        CHECK(space.point_count() == 2);
        CHECK(space.is_discrete());
        for (Mask atom : ba.atoms()) CHECK(__builtin_popcount(space.basis[atom]) == 1);
    }
    {
        FiniteBooleanAlgebra ba(1);
        FiniteEndSpace space = end_space(ba, order);
        CHECK(space.point_count() == 1);
        CHECK(space.basis[ba.top()] == 1u);
        CHECK(space.basis[0] == 0u);
    }
    {
        FiniteBooleanAlgebra ba(3);
        FiniteEndSpace space = end_space(ba, order);
        CHECK(space.point_count() == 3);
        CHECK(space.is_discrete());
        std::set<std::uint32_t> images;
        for (Mask atom : ba.atoms()) images.insert(space.basis[atom]);
        CHECK(images.size() == 3);
    }
}

TEST_CASE("morphism checker") {
    FiniteProximity order = FiniteProximity::boolean_order();
    FiniteBooleanAlgebra ba2(2), ba1(1);

    CHECK(check_devries_morphism(identity_devries(ba2), ba2, order, ba2, order).all_pass());

    std::vector<Mask> const_one(ba2.size(), ba2.top());
    CheckReport bad = check_devries_morphism(const_one, ba2, order, ba2, order);
    CHECK_FALSE(bad.find("M1")->pass);

    // sigma(e) = 1 iff the first atom lies in e
    std::vector<Mask> proj(ba2.size());
    for (Mask e : ba2.elements()) proj[e] = (e & 1) ? 1 : 0;
    CHECK(check_devries_morphism(proj, ba2, order, ba1, order).all_pass());
}

TEST_CASE("star composition equals plain composition on finite carriers") {
    FiniteProximity order = FiniteProximity::boolean_order();
    FiniteBooleanAlgebra ba(2);
    for (const auto& sigma : enumerate_devries_morphisms(ba, ba))
        for (const auto& rho : enumerate_devries_morphisms(ba, ba)) {
            auto star = compose_devries(rho, sigma, ba, order, ba);
            std::vector<Mask> plain(ba.size());
            for (Mask e : ba.elements()) plain[e] = rho[sigma[e]];
            CHECK(star == plain);
        }
    for (const auto& sigma : enumerate_devries_morphisms(ba, ba))
        CHECK(compose_devries(identity_devries(ba), sigma, ba, order, ba) == sigma);
}

TEST_CASE("star composition is associative on three-atom triples") {
    FiniteProximity order = FiniteProximity::boolean_order();
    FiniteBooleanAlgebra ba(3);
    auto morphisms = enumerate_devries_morphisms(ba, ba);
    REQUIRE(morphisms.size() == 27); // one per point map on three points
    bool ok = true;
    for (const auto& f : morphisms)
        for (const auto& g : morphisms)
            for (const auto& h : morphisms) {
                auto left = compose_devries(h, compose_devries(g, f, ba, order, ba), ba, order, ba);
                auto right = compose_devries(compose_devries(h, g, ba, order, ba), f, ba, order, ba);
                ok = ok && left == right;
            }
    CHECK(ok);
}

TEST_CASE("rigidity: the order is the only proximity") {
    RigidityReport one = finite_proximity_rigidity(FiniteBooleanAlgebra(1));
    CHECK(one.relations_scanned == 8);
    CHECK(one.passing == 1);
    CHECK(one.only_boolean_order_passes);

    RigidityReport two = finite_proximity_rigidity(FiniteBooleanAlgebra(2));
    CHECK(two.relations_scanned == 512);
    CHECK(two.passing == 1);
    CHECK(two.only_boolean_order_passes);

    CHECK_THROWS_AS(finite_proximity_rigidity(FiniteBooleanAlgebra(3)), ScaleError);
}

TEST_CASE("finite carriers are zero-dimensional and extremally disconnected") {
    FiniteBooleanAlgebra ba(3);
    FiniteProximity order = FiniteProximity::boolean_order();
    CHECK(is_zero_dimensional(ba, order));
    CHECK(is_extremally_disconnected(ba, order));
}

TEST_CASE("algebra file format") {
    FiniteAlgebraSpec plain = parse_finite_algebra("atoms: 3\n");
    CHECK(plain.ba.atom_count == 3);
    CHECK(plain.prox.is_boolean_order());

    FiniteAlgebraSpec expl = parse_finite_algebra(
        "atoms: 2\nprox: explicit\n00 < 00\n00 < 11\n11 < 11\n");
    CHECK_FALSE(expl.prox.is_boolean_order());
    CHECK(expl.prox.rel(expl.ba, 0, 3));
    CHECK_FALSE(expl.prox.rel(expl.ba, 1, 3));

    CHECK_THROWS_AS(parse_finite_algebra("prox: explicit\n"), ParseError);
    CHECK_THROWS_AS(parse_finite_algebra("atoms: 2\n0 < 11\n"), ParseError);
}

TEST_CASE("element bitstrings") {
    FiniteBooleanAlgebra ba(3);
    CHECK(ba.element_to_string(5) == "101");
    CHECK(ba.parse_element("101") == 5);
    CHECK_THROWS_AS(ba.parse_element("10"), ParseError);
    CHECK_THROWS_AS(ba.parse_element("10x"), ParseError);
}
