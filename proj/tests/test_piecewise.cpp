#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "devries/piecewise.hpp"
#include "devries/suites.hpp"

using namespace devries;

namespace {
PiecewiseFunction f(const char* text) { return parse_step_function(text); }
PointSet pts(const char* intervals) { return PointSet::from_segs(parse_raw_intervals(intervals)); }
} // namespace

TEST_CASE("upper level sets are exact point sets") {
    PiecewiseFunction chi = f("1 on (1/4,1/2]; 0 elsewhere");
    CHECK(chi.upset_level(DomainValue(1)) == pts("(1/4,1/2]"));
    CHECK(PiecewiseFunction(DomainValue(3)).upset_level(DomainValue(2)) == pts("[0,1]"));
    CHECK(f("1 on (1/4,1/2); 0 elsewhere").upset_level(DomainValue(2)).is_empty());
}

TEST_CASE("normalization of a half-open indicator") {
    PiecewiseFunction chi = f("1 on (1/4,1/2]; 0 elsewhere");
    CHECK_FALSE(is_normal(chi));
    PiecewiseFunction n = normalize(chi);
    CHECK(is_normal(n));
    CHECK(n == f("1 on (1/4,1/2); 0 elsewhere"));
}

TEST_CASE("normal functions are fixed points") {
    PiecewiseFunction n = f("1 on (1/4,1/2); 0 elsewhere");
    CHECK(normalize(n) == n);
    PiecewiseFunction c{DomainValue(7)};
    CHECK(normalize(c) == c);
}

TEST_CASE("complementary indicators sum to one") {
    PiecewiseFunction a = PiecewiseFunction::indicator(parse_regular_open("[0,1/2)"));
    PiecewiseFunction b = PiecewiseFunction::indicator(parse_regular_open("(1/2,1]"));
    // the pointwise sum misses the shared boundary point
    PiecewiseFunction pw = pw_add(a, b);
    CHECK(pw(make_rat(1, 2)) == DomainValue(0));
    CHECK_FALSE(is_normal(pw));
    CHECK(nf_add(a, b) == PiecewiseFunction(DomainValue(1)));
    CHECK(nf_join(a, b) == PiecewiseFunction(DomainValue(1)));
}

TEST_CASE("pointwise sum on the common refinement") {
    PiecewiseFunction sum = pw_add(f("1 on [0,1/2); 0 elsewhere"), f("1 on (1/4,1]; 0 elsewhere"));
    CHECK(sum(make_rat(1, 8)) == DomainValue(1));
    CHECK(sum(make_rat(3, 8)) == DomainValue(2));
    CHECK(sum(make_rat(3, 4)) == DomainValue(1));
    CHECK(sum(make_rat(1, 4)) == DomainValue(1));
    CHECK(sum(make_rat(1, 2)) == DomainValue(1));
    CHECK(pw_mul(PiecewiseFunction(DomainValue(3)), PiecewiseFunction(DomainValue(-2))) ==
          PiecewiseFunction(DomainValue(-6)));
    PiecewiseFunction g = f("2 on (1/3,2/3); 0 elsewhere");
    CHECK(pw_min(g, g) == g);
}

TEST_CASE("lifted sum normalizes the refinement") {
    PiecewiseFunction lifted =
        nf_add(f("1 on [0,1/2); 0 elsewhere"), f("1 on (1/4,1]; 0 elsewhere"));
    CHECK(lifted == f("2 on (1/4,1/2); 1 elsewhere"));
}

TEST_CASE("power proximity") {
    PiecewiseFunction c{DomainValue(4)};
    CHECK(nf_prox(c, c));
    CHECK(nf_prox(f("1 on (1/4,1/2); 0 elsewhere"), f("1 on (1/8,3/4); 0 elsewhere")));
    PiecewiseFunction jump = f("1 on [0,1/2); 0 elsewhere");
    CHECK_FALSE(nf_prox(jump, jump));
}

TEST_CASE("continuity domains") {
    CHECK(continuity_domain(f("1 on (1/4,1/2); 0 elsewhere")) ==
          pts("[0,1/4) u (1/4,1/2) u (1/2,1]"));
    CHECK(continuity_domain(PiecewiseFunction(DomainValue(5))) == pts("[0,1]"));
    CHECK(continuity_domain(f("1 on [0,1/2); 0 elsewhere")) == pts("[0,1/2) u (1/2,1]"));
}

TEST_CASE("unique normal extension from a dense domain") {
    PointSet d = pts("[0,1/2) u (1/2,1]");
    PiecewiseFunction one_with_gap = f("1 on [0,1/2) u (1/2,1]; 0 at 1/2");
    CHECK(extend_from_dense(one_with_gap, d) == PiecewiseFunction(DomainValue(1)));

    PiecewiseFunction chi = f("1 on (1/4,1/2); 0 elsewhere");
    CHECK(extend_from_dense(chi, continuity_domain(chi)) == chi);

    PiecewiseFunction jumpy = f("1 on [0,1/4); 0 elsewhere");
    CHECK_THROWS_AS(extend_from_dense(jumpy, d), std::invalid_argument);
    CHECK_THROWS_AS(extend_from_dense(chi, pts("(1/3,1]")), std::invalid_argument);
}

TEST_CASE("level formula clauses on the spec instances") {
    PiecewiseFunction a = f("1 on [0,1/2); 0 elsewhere");
    PiecewiseFunction b = f("1 on (1/4,1]; 0 elsewhere");
    CHECK(level_formula_check(a, b, LevelFormula::sum, DomainValue(1)).all_pass());
    // the sum's level at 2 is exactly the overlap
    CHECK(upset_level_ro(nf_add(a, b), DomainValue(2)) == parse_regular_open("(1/4,1/2)"));

    PiecewiseFunction h = f("1 on (1/4,1/2); 0 elsewhere");
    CHECK(level_formula_check(h, h, LevelFormula::scalar, DomainValue(2)).all_pass());
    CHECK(upset_level_ro(nf_scalar(DomainValue(2), h), DomainValue(2)) ==
          upset_level_ro(h, DomainValue(1)));

    CHECK(level_formula_check(h, h, LevelFormula::negation, DomainValue(1)).all_pass());
    CHECK(upset_level_ro(nf_negate(h), DomainValue(0)) ==
          ro_complement(upset_level_ro(h, DomainValue(1))));

    PiecewiseFunction prod_a = f("2 on [0,1/3); 1 elsewhere");
    CHECK(level_formula_check(prod_a, h, LevelFormula::product, DomainValue(1)).all_pass());
    CHECK(level_formula_check(h, h, LevelFormula::scalar_shift, DomainValue(3)).all_pass());
}

TEST_CASE("interpolation produces a normal midpoint") {
    PiecewiseFunction g = f("2 on (1/8,7/8); 0 elsewhere");
    PiecewiseFunction s = f("2 on (1/4,1/2); 0 elsewhere");
    REQUIRE(nf_prox(s, g));
    PiecewiseFunction mid = nf_interpolate(s, g);
    CHECK(is_normal(mid));
    CHECK(nf_prox(s, mid));
    CHECK(nf_prox(mid, g));
}

TEST_CASE("step parser details") {
    CHECK(f("5") == PiecewiseFunction(DomainValue(5)));
    CHECK(f("0 on [0,1/4); 2 on (1/4,1/2); 1 at 1/2; 0 on (1/2,1]")(make_rat(1, 2)) ==
          DomainValue(1));
    // implied point values take the min of the neighbours
    PiecewiseFunction g = f("1 on [0,1/2); 0 on (1/2,1]");
    CHECK(g(make_rat(1, 2)) == DomainValue(0));
    CHECK(is_normal(g));
    CHECK_THROWS_AS(f("1 on [0,1/2)"), ParseError);                        // uncovered
    CHECK_THROWS_AS(f("1 on [0,1/2); 2 on (1/4,1]; 0 elsewhere"), ParseError); // overlap
    CHECK_THROWS_AS(f(""), ParseError);
}

TEST_CASE("printer and parser roundtrip") {
    Rng rng(21);
    for (int i = 0; i < 300; ++i) {
        PiecewiseFunction g = sample_piecewise(rng, DomainKind::rationals);
        CHECK(parse_step_function(to_string(g)) == g);
        PiecewiseFunction n = sample_normal_function(rng, DomainKind::integers);
        CHECK(parse_step_function(to_string(n)) == n);
    }
}

TEST_CASE("normalization law suite") {
    CHECK(normalization_suite(71, DomainKind::integers, 400).all_pass());
    CHECK(normalization_suite(72, DomainKind::rationals, 400).all_pass());
}

TEST_CASE("normalization preserves values on piece interiors") {
    Rng rng(57);
    for (int i = 0; i < 300; ++i) {
        PiecewiseFunction g = sample_piecewise(rng, DomainKind::rationals);
        PiecewiseFunction n = normalize(g);
        for (std::size_t j = 0; j + 1 < g.breakpoints().size(); ++j) {
            Rat mid = midpoint(g.breakpoints()[j], g.breakpoints()[j + 1]);
            CHECK(n(mid) == g(mid));
        }
    }
}

TEST_CASE("canonical form merges removable breakpoints") {
    PiecewiseFunction g = PiecewiseFunction::make(
        {Rat(0), make_rat(1, 2), Rat(1)}, {DomainValue(3), DomainValue(3)}, {DomainValue(3)});
    CHECK(g.is_constant());
    PiecewiseFunction h = PiecewiseFunction::make(
        {Rat(0), make_rat(1, 2), Rat(1)}, {DomainValue(3), DomainValue(3)}, {DomainValue(1)});
    CHECK_FALSE(h.is_constant()); // the point value keeps the breakpoint
}
