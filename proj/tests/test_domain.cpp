#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "devries/domain.hpp"
#include "devries/rng.hpp"
#include "devries/suites.hpp"

using namespace devries;

TEST_CASE("exact scalar arithmetic") {
    DomainValue half = DomainValue::from_fraction(1, 2);
    DomainValue third = DomainValue::from_fraction(1, 3);
    CHECK(half + third == DomainValue::from_fraction(5, 6));
    CHECK(DomainValue(-2) * DomainValue(3) == DomainValue(-6));
    CHECK(dv_abs(DomainValue::from_fraction(-7, 4)) == DomainValue::from_fraction(7, 4));
    CHECK(dv_compare(half, third) == Cmp::greater);
    CHECK(dv_compare(half, half) == Cmp::equal);
    CHECK(dv_compare(third, half) == Cmp::less);
}

TEST_CASE("textual form") {
    CHECK(to_string(DomainValue(5)) == "5");
    CHECK(to_string(DomainValue::from_fraction(-3, 6)) == "-1/2");
    CHECK(parse_domain_value("7/4") == DomainValue::from_fraction(7, 4));
    CHECK(parse_domain_value("-12") == DomainValue(-12));
    CHECK(parse_domain_value(" 3/9 ") == DomainValue::from_fraction(1, 3));
    CHECK_THROWS_AS(parse_domain_value("1/0"), ParseError);
    CHECK_THROWS_AS(parse_domain_value("x"), ParseError);
    CHECK_THROWS_AS(parse_domain_value("1.5"), ParseError);
}

TEST_CASE("lowest terms with positive denominator") {
    DomainValue v = DomainValue::from_fraction(6, -8);
    CHECK(to_string(v) == "-3/4");
    CHECK(v.value().get_den() == 4);
}

TEST_CASE("integer sampler stays integral") {
    Rng rng(5);
    for (int i = 0; i < 200; ++i) CHECK(sample_scalar(rng, DomainKind::integers).is_integer());
}

TEST_CASE("no zero divisors on samples") {
    Rng rng(9);
    for (int i = 0; i < 500; ++i) {
        DomainValue a = sample_scalar(rng, DomainKind::rationals);
        DomainValue b = sample_scalar(rng, DomainKind::rationals);
        if ((a * b).is_zero()) CHECK((a.is_zero() || b.is_zero()));
    }
}

TEST_CASE("randomized law suite at full scale for both instances") {
    CHECK(domain_law_suite(101, DomainKind::integers, 1000).all_pass());
    CHECK(domain_law_suite(101, DomainKind::rationals, 1000).all_pass());
}
