#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "devries/specker.hpp"
#include "devries/suites.hpp"

using namespace devries;

namespace {

const IntervalCarrier ic;
const FiniteCarrier fc3(3);

Specker<IntervalCarrier> elem(const char* text) { return parse_interval_element(ic, text); }
Specker<FiniteCarrier> felem(const char* text) { return parse_finite_element(fc3, text); }

} // namespace

TEST_CASE("decreasing form of a three-block partition") {
    // 0 on the first atom, 1 on the second, 3 on the third
    Specker<FiniteCarrier> s = felem("0 + 1*011 + 2*001");
    auto d = to_decreasing(s);
    CHECK(d.base == DomainValue(0));
    REQUIRE(d.steps.size() == 2);
    CHECK(d.steps[0].first == DomainValue(1));
    CHECK(d.steps[0].second == fc3.algebra().parse_element("011"));
    CHECK(d.steps[1].first == DomainValue(2));
    CHECK(d.steps[1].second == fc3.algebra().parse_element("001"));
    CHECK(to_string(s) == "0 + 1*011 + 2*001");

    auto c = to_decreasing(Specker<FiniteCarrier>::constant(fc3, DomainValue(5)));
    CHECK(c.base == DomainValue(5));
    CHECK(c.steps.empty());
}

TEST_CASE("orthogonal and decreasing forms are mutually inverse") {
    Rng rng(31);
    for (int i = 0; i < 300; ++i) {
        auto s = sample_element(fc3, rng, DomainKind::integers);
        CHECK(sp_equal(to_orthogonal(fc3, to_decreasing(s)), s));
        auto t = sample_element(ic, rng, DomainKind::rationals);
        CHECK(sp_equal(to_orthogonal(ic, to_decreasing(t)), t));
    }
}

TEST_CASE("complementary indicators sum to one over the interval carrier") {
    RegularOpenSet u = parse_regular_open("[0,1/2)");
    auto sum = sp_add(Specker<IntervalCarrier>::indicator(ic, u),
                      Specker<IntervalCarrier>::indicator(ic, ro_complement(u)));
    CHECK(sp_equal(sum, Specker<IntervalCarrier>::constant(ic, DomainValue(1))));
}

TEST_CASE("bilinearity on indicators") {
    RegularOpenSet u = parse_regular_open("(1/8,1/2)");
    RegularOpenSet v = parse_regular_open("(1/4,3/4)");
    auto lhs = sp_mul(sp_scalar(DomainValue(2), Specker<IntervalCarrier>::indicator(ic, u)),
                      sp_scalar(DomainValue(3), Specker<IntervalCarrier>::indicator(ic, v)));
    auto rhs = sp_scalar(DomainValue(6), Specker<IntervalCarrier>::indicator(ic, ro_meet(u, v)));
    CHECK(sp_equal(lhs, rhs));
}

TEST_CASE("abs of a plus-minus-one element is one") {
    auto s = elem("1 on [0,1/2); -1 on (1/2,1]");
    CHECK(sp_equal(sp_abs(s), Specker<IntervalCarrier>::constant(ic, DomainValue(1))));
}

TEST_CASE("order via compatible decreasing forms") {
    CHECK(sp_leq(Specker<IntervalCarrier>::constant(ic, DomainValue(2)),
                 Specker<IntervalCarrier>::constant(ic, DomainValue(3))));
    CHECK_FALSE(sp_leq(Specker<IntervalCarrier>::constant(ic, DomainValue(3)),
                       Specker<IntervalCarrier>::constant(ic, DomainValue(2))));

    RegularOpenSet u = parse_regular_open("(1/4,1/2)");
    RegularOpenSet v = parse_regular_open("(1/8,3/4)");
    CHECK(sp_leq(Specker<IntervalCarrier>::indicator(ic, u),
                 Specker<IntervalCarrier>::indicator(ic, v)) == ro_leq(u, v));
    CHECK(sp_leq(Specker<IntervalCarrier>::indicator(ic, v),
                 Specker<IntervalCarrier>::indicator(ic, u)) == ro_leq(v, u));

    auto one_minus_two_chi = elem("1 on [0,1/2); -1 on (1/2,1]");
    CHECK_FALSE(sp_nonnegative(one_minus_two_chi));
}

TEST_CASE("compatible forms share base and steps") {
    RegularOpenSet u = parse_regular_open("(1/4,1/2)");
    RegularOpenSet v = parse_regular_open("(1/8,3/4)");
    auto pair = compatible_decreasing(Specker<IntervalCarrier>::indicator(ic, u),
                                      Specker<IntervalCarrier>::indicator(ic, v));
    CHECK(pair.base == DomainValue(0));
    REQUIRE(pair.steps.size() == 1);
    CHECK(pair.steps[0] == DomainValue(1));
    CHECK(pair.left[0] == u);
    CHECK(pair.right[0] == v);

    // 0 against 2*chi_U over the union grid {0,2}
    auto zero = Specker<IntervalCarrier>::constant(ic, DomainValue(0));
    auto twochi = sp_scalar(DomainValue(2), Specker<IntervalCarrier>::indicator(ic, u));
    auto mixed = compatible_decreasing(zero, twochi);
    CHECK(mixed.base == DomainValue(0));
    REQUIRE(mixed.steps.size() == 1);
    CHECK(mixed.steps[0] == DomainValue(2));
    CHECK(mixed.left[0].is_empty());
    CHECK(mixed.right[0] == u);

    auto s = elem("0 on [0,1/3); 4 on (1/3,1]");
    auto same = compatible_decreasing(s, s);
    for (std::size_t i = 0; i < same.steps.size(); ++i) CHECK(same.left[i] == same.right[i]);
}

TEST_CASE("lifted proximity") {
    auto c = Specker<IntervalCarrier>::constant(ic, DomainValue(9));
    CHECK(sp_prox(c, c));
    auto small = sp_scalar(DomainValue(2), elem("1 on (1/4,1/2); 0 elsewhere"));
    auto big = sp_scalar(DomainValue(2), elem("1 on (1/8,3/4); 0 elsewhere"));
    CHECK(sp_prox(small, big));
    CHECK_FALSE(sp_prox(small, small));

    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        auto s = sample_element(ic, rng, DomainKind::integers);
        CHECK(sp_prox(s, s) == s.is_constant());
    }
}

TEST_CASE("the lifted proximity of a finite carrier is the order") {
    Rng rng(47);
    for (int i = 0; i < 300; ++i) {
        auto s = sample_element(fc3, rng, DomainKind::rationals);
        auto t = sample_element(fc3, rng, DomainKind::rationals);
        CHECK(sp_prox(s, t) == sp_leq(s, t));
    }
}

TEST_CASE("interpolation and below witnesses") {
    Rng rng(43);
    for (int i = 0; i < 200; ++i) {
        auto [s, t] = sample_proximal_pair(ic, rng, DomainKind::rationals);
        auto mid = sp_interpolate(s, t);
        CHECK(sp_prox(s, mid));
        CHECK(sp_prox(mid, t));
    }
    auto pos = elem("2 on (1/4,1/2); 0 elsewhere");
    auto below = sp_below(pos);
    CHECK(sp_prox(below, pos));
    CHECK(sp_nonnegative(below));
    CHECK_FALSE(sp_is_zero(below));
    CHECK_THROWS(sp_below(Specker<IntervalCarrier>::constant(ic, DomainValue(0))));
}

TEST_CASE("a relation without interpolants makes the witness op fail") {
    // only (1,1) and (0, first-atom): no c with 0 rel c rel first-atom
    FiniteBooleanAlgebra ba(2);
    std::set<std::pair<Mask, Mask>> pairs{{ba.top(), ba.top()}, {0, 1}};
    FiniteCarrier broken(2, FiniteProximity::explicit_pairs(pairs));
    CHECK_FALSE(check_devries_axioms(ba, broken.proximity()).all_pass());
    CHECK_THROWS_AS(broken.interpolate(0, 1), std::invalid_argument);

    auto zero = Specker<FiniteCarrier>::constant(broken, DomainValue(0));
    auto chi = Specker<FiniteCarrier>::indicator(broken, 1);
    REQUIRE(sp_prox(zero, chi)); // the only grid step is (0, atom)
    CHECK_THROWS_AS(sp_interpolate(zero, chi), std::invalid_argument);
}

TEST_CASE("idempotent elements are indicators") {
    RegularOpenSet u = parse_regular_open("(1/3,2/3)");
    auto chi = Specker<IntervalCarrier>::indicator(ic, u);
    CHECK(chi.is_idempotent());
    CHECK(sp_equal(sp_mul(chi, chi), chi));
    REQUIRE(chi.as_indicator().has_value());
    CHECK(*chi.as_indicator() == u);
    CHECK_FALSE(elem("2 on (1/3,2/3); 0 elsewhere").is_idempotent());
}

TEST_CASE("element syntax roundtrips") {
    auto s = elem("0 on [0,1/4); 2 on (1/4,1/2); 1 on (1/2,1]");
    CHECK(to_string(s) == "0 on [0,1/4); 1 on (1/2,1]; 2 on (1/4,1/2)");
    CHECK(sp_equal(parse_interval_element(ic, to_string(s)), s));

    auto t = felem("-2 + 1/2*110 + 3*100");
    CHECK(to_string(t) == "-2 + 1/2*110 + 3*100");
    CHECK(sp_equal(parse_finite_element(fc3, to_string(t)), t));

    CHECK_THROWS_AS(parse_interval_element(ic, "1 on (1/4,1/2]; 0 elsewhere"), ParseError);
    CHECK_THROWS_AS(parse_finite_element(fc3, "0 + 1*100 + 1*011"), ParseError);
    CHECK_THROWS_AS(parse_finite_element(fc3, "0 + -1*100"), ParseError);
}

TEST_CASE("the normal-function bridge intertwines the spec examples") {
    PiecewiseFunction f = parse_step_function("1 on (1/4,1/2); 0 elsewhere");
    auto s = from_normal(ic, f);
    CHECK(to_normal(s) == f);
    CHECK(sp_equal(from_normal(ic, to_normal(s)), s));
    CHECK_THROWS_AS(from_normal(ic, parse_step_function("1 on (1/4,1/2]; 0 elsewhere")),
                    std::invalid_argument);
}

TEST_CASE("axiom suites pass on a finite carrier") {
    FiniteCarrier fc2(2);
    CHECK(prox_axiom_suite(fc2, 61, DomainKind::integers, 150).all_pass());
    CHECK(prox_axiom_suite(fc2, 61, DomainKind::rationals, 150).all_pass());
    CHECK(fring_suite(fc2, 61, DomainKind::rationals, 150).all_pass());
}

TEST_CASE("orthogonal form validation") {
    using S = Specker<IntervalCarrier>;
    RegularOpenSet u = parse_regular_open("(1/4,1/2)");
    // overlapping idempotents are rejected
    CHECK_THROWS_AS(S::from_orthogonal(
                        ic, {{DomainValue(0), RegularOpenSet::full()}, {DomainValue(1), u}}),
                    std::invalid_argument);
    // partial cover is rejected
    CHECK_THROWS_AS(S::from_orthogonal(ic, {{DomainValue(1), u}}), std::invalid_argument);
    // merging equal values joins their idempotents
    auto merged = S::from_orthogonal(ic, {{DomainValue(1), parse_regular_open("[0,1/2)")},
                                          {DomainValue(1), parse_regular_open("(1/2,1]")}});
    CHECK(sp_equal(merged, S::constant(ic, DomainValue(1))));
}
