#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "devries/interval.hpp"
#include "devries/suites.hpp"

using namespace devries;

namespace {
RegularOpenSet ro(const char* text) { return parse_regular_open(text); }
} // namespace

TEST_CASE("canonicalize takes the interior of the closure") {
    CHECK(to_string(RegularOpenSet::canonicalize(parse_raw_intervals("(0,1/4) u (1/4,1/2)"))) ==
          "[0,1/2)");
    CHECK(to_string(RegularOpenSet::canonicalize(parse_raw_intervals("(1/4,1/2)"))) ==
          "(1/4,1/2)");
    CHECK(to_string(RegularOpenSet::canonicalize(parse_raw_intervals("(0,1/2)"))) == "[0,1/2)");
    CHECK(to_string(RegularOpenSet::canonicalize(parse_raw_intervals("[1/3,2/3]"))) ==
          "(1/3,2/3)");
    CHECK(RegularOpenSet::canonicalize({}).is_empty());
    CHECK_THROWS(RegularOpenSet::canonicalize(parse_raw_intervals("(1/2,2)")));
}

TEST_CASE("strict parser rejects non-canonical input") {
    CHECK_THROWS_AS(ro("(0,1/4)"), ParseError);     // must be closed at 0
    CHECK_THROWS_AS(ro("[1/4,1/2)"), ParseError);   // closed endpoint inside
    CHECK_THROWS_AS(ro("(1/4,1)"), ParseError);     // must be closed at 1
    CHECK_THROWS_AS(ro("(1/2,1/4)"), ParseError);   // inverted
    CHECK_THROWS_AS(ro("(1/4,1/2) u (1/8,3/4)"), ParseError); // not separated
    CHECK(ro("empty").is_empty());
    CHECK(ro("[0,1]").is_full());
    CHECK(to_string(ro(" [0,1/4)u(1/2 , 3/4) ")) == "[0,1/4) u (1/2,3/4)");
}

TEST_CASE("boolean operations") {
    CHECK(to_string(ro_meet(ro("[0,1/2)"), ro("(1/4,3/4)"))) == "(1/4,1/2)");
    CHECK(to_string(ro_join(ro("[0,1/2)"), ro("(1/2,1]"))) == "[0,1]");
    CHECK(to_string(ro_complement(ro("(1/4,1/2)"))) == "[0,1/4) u (1/2,1]");
    CHECK(ro_complement(RegularOpenSet::empty()).is_full());
    CHECK(ro_leq(ro("(1/4,1/2)"), ro("[0,1/2)")));
    CHECK_FALSE(ro_leq(ro("[0,1/2)"), ro("(1/4,1/2)")));
}

TEST_CASE("proximity is closure containment") {
    CHECK(ro_proximity(ro("(1/4,1/2)"), ro("(1/8,3/4)")));
    CHECK_FALSE(ro_proximity(ro("(1/4,1/2)"), ro("(1/4,1/2)")));
    CHECK(ro_proximity(ro("[0,1/2)"), ro("[0,3/4)")));
    CHECK(ro_proximity(RegularOpenSet::empty(), RegularOpenSet::empty()));
    CHECK(ro_proximity(RegularOpenSet::full(), RegularOpenSet::full()));
}

TEST_CASE("interpolation witnesses") {
    RegularOpenSet u = ro("(1/4,1/2)");
    RegularOpenSet v = ro("(1/8,3/4)");
    RegularOpenSet w = ro_interpolate(u, v);
    CHECK(ro_proximity(u, w));
    CHECK(ro_proximity(w, v));
    CHECK(ro_interpolate(RegularOpenSet::empty(), v).is_empty());
    CHECK(ro_interpolate(RegularOpenSet::full(), RegularOpenSet::full()).is_full());
    CHECK_THROWS(ro_interpolate(u, u)); // precondition violated
}

TEST_CASE("nonzero element well below") {
    RegularOpenSet u = ro("(1/4,1/2)");
    RegularOpenSet w = ro_below(u);
    CHECK_FALSE(w.is_empty());
    CHECK(ro_proximity(w, u));
    CHECK(to_string(ro_below(RegularOpenSet::full())) == "(1/3,2/3)");
    CHECK_THROWS(ro_below(RegularOpenSet::empty()));
}

TEST_CASE("point ends") {
    CHECK_FALSE(end_member(Rat(0), ro("[0,1/2)")));
    CHECK(end_member(make_rat(3, 4), ro("[0,1/2)")));
    CHECK_FALSE(end_member(make_rat(1, 2), ro("(1/4,1/2)")));
}

TEST_CASE("piecewise-linear preimages") {
    CHECK(pl_hat(PLMap::identity(), ro("(1/4,1/2)")) == ro("(1/4,1/2)"));
    PLMap half = parse_plmap("(0,0) (1,1/2)");
    CHECK(pl_hat(half, ro("[0,1/2)")).is_full());
    PLMap mid = PLMap::constant(make_rat(1, 2));
    CHECK(pl_hat(mid, ro("(1/4,3/4)")).is_full());
    CHECK(pl_hat(mid, ro("(3/4,1]")).is_empty());
}

TEST_CASE("plmap validation and composition") {
    CHECK_THROWS(PLMap::through({{Rat(0), Rat(0)}}));
    CHECK_THROWS(PLMap::through({{Rat(0), Rat(0)}, {make_rat(1, 2), Rat(2)}, {Rat(1), Rat(0)}}));
    PLMap tent = parse_plmap("(0,0) (1/2,1) (1,0)");
    CHECK(tent.apply(make_rat(1, 4)) == make_rat(1, 2));
    PLMap doubled = compose(tent, parse_plmap("(0,0) (1,1/2)"));
    CHECK(doubled.apply(make_rat(1, 2)) == make_rat(1, 2));
    CHECK(doubled.apply(Rat(1)) == Rat(1));
}

TEST_CASE("zero-dimensionality fails on the connected carrier") {
    RegularOpenSet a = ro("(1/4,1/2)");
    RegularOpenSet b = ro("(1/8,3/4)");
    REQUIRE(ro_proximity(a, b));
    CHECK_FALSE(clopen_interpolant(a, b).has_value());
    CHECK(clopen_interpolant(RegularOpenSet::empty(), b).has_value());
    CHECK_FALSE(interval_is_zero_dimensional());
    // U <= U without U prox U shows the carrier is not extremally disconnected
    CHECK(ro_leq(a, a));
    CHECK_FALSE(ro_proximity(a, a));
    CHECK_FALSE(interval_is_extremally_disconnected());
}

TEST_CASE("point ends induce round ideals") {
    Rng rng(19);
    for (int i = 0; i < 200; ++i) {
        Rat x = sample_unit_rat(rng);
        RegularOpenSet u = sample_regular_open(rng);
        RegularOpenSet v = sample_regular_open(rng);
        // downward closed and join closed
        if (end_member(x, v) && ro_leq(u, v)) CHECK(end_member(x, u));
        if (end_member(x, u) && end_member(x, v)) CHECK(end_member(x, ro_join(u, v)));
        // round: some member lies strictly above u, still avoiding x
        if (end_member(x, u) && !u.is_empty()) {
            Rat dist = Rat(1);
            ClosedIntervalSet cl = u.closure();
            for (const auto& comp : cl.components()) {
                Rat d = comp.first <= x && x <= comp.second ? Rat(0)
                        : (x < comp.first ? Rat(comp.first - x) : Rat(x - comp.second));
                if (d < dist) dist = d;
            }
            REQUIRE(dist > 0);
            Rat lo = x - dist / 2 < 0 ? Rat(0) : Rat(x - dist / 2);
            Rat hi = x + dist / 2 > 1 ? Rat(1) : Rat(x + dist / 2);
            RegularOpenSet avoid = ro_complement(RegularOpenSet::from_pieces({{lo, hi}}));
            RegularOpenSet w = ro_interpolate(u, avoid);
            CHECK(ro_proximity(u, w));
            CHECK(end_member(x, w));
        }
    }
}

TEST_CASE("only the clopen elements are well inside themselves") {
    Rng rng(11);
    for (int i = 0; i < 400; ++i) {
        RegularOpenSet u = sample_regular_open(rng);
        CHECK(ro_proximity(u, u) == (u.is_empty() || u.is_full()));
    }
}

TEST_CASE("print-parse roundtrip") {
    Rng rng(3);
    for (int i = 0; i < 300; ++i) {
        RegularOpenSet u = sample_regular_open(rng);
        CHECK(parse_regular_open(to_string(u)) == u);
    }
}

TEST_CASE("boolean law suite") {
    CHECK(interval_boolean_laws_suite(73, 500).all_pass());
}

TEST_CASE("point sets are exact under membership") {
    Rng rng(29);
    auto sample_segs = [&rng] {
        std::vector<Seg> segs;
        int k = static_cast<int>(rng.below(4));
        for (int j = 0; j < k; ++j) {
            Rat a = sample_unit_rat(rng);
            Rat b = sample_unit_rat(rng);
            if (b < a) std::swap(a, b);
            segs.push_back({a, b, rng.chance(1, 2), rng.chance(1, 2)});
        }
        return PointSet::from_segs(std::move(segs));
    };
    for (int i = 0; i < 200; ++i) {
        PointSet a = sample_segs();
        PointSet b = sample_segs();
        ClosedIntervalSet c = sample_regular_open(rng).closure();
        PointSet u = a.unite(b);
        PointSet d = a.subtract_closed(c);
        for (int num = 0; num <= 24; ++num) {
            Rat x = make_rat(num, 24);
            CHECK(u.contains(x) == (a.contains(x) || b.contains(x)));
            CHECK(d.contains(x) == (a.contains(x) && !c.contains(x)));
            if (a.contains(x)) CHECK(a.closure().contains(x));
        }
        CHECK(a.subset_of(u));
        CHECK(d.subset_of(a));
    }
}

TEST_CASE("meet is exact intersection; join and complement bound the set ops") {
    Rng rng(37);
    for (int i = 0; i < 200; ++i) {
        RegularOpenSet u = sample_regular_open(rng);
        RegularOpenSet v = sample_regular_open(rng);
        RegularOpenSet m = ro_meet(u, v);
        RegularOpenSet j = ro_join(u, v);
        RegularOpenSet c = ro_complement(u);
        for (int num = 0; num <= 24; ++num) {
            Rat x = make_rat(num, 24);
            CHECK(m.contains(x) == (u.contains(x) && v.contains(x)));
            if (u.contains(x) || v.contains(x)) CHECK(j.contains(x));
            if (c.contains(x)) CHECK_FALSE(u.contains(x));
        }
    }
}

TEST_CASE("pl preimages act as a de Vries morphism") {
    Rng rng(53);
    std::vector<PLMap> maps{
        PLMap::identity(),
        parse_plmap("(0,0) (1,1/2)"),
        parse_plmap("(0,1/4) (1/2,1) (1,0)"),
        parse_plmap("(0,1) (1/3,1/6) (2/3,1/2) (1,1/2)"),
        PLMap::constant(make_rat(2, 5)),
    };
    for (const PLMap& phi : maps) {
        CHECK(pl_hat(phi, RegularOpenSet::full()).is_full());
        CHECK(pl_hat(phi, RegularOpenSet::empty()).is_empty());
        for (int i = 0; i < 60; ++i) {
            RegularOpenSet u = sample_regular_open(rng);
            RegularOpenSet v = sample_regular_open(rng);
            CHECK(pl_hat(phi, ro_meet(u, v)) == ro_meet(pl_hat(phi, u), pl_hat(phi, v)));
            // the open preimage sits inside the regularized one
            for (int num = 0; num <= 12; ++num) {
                Rat x = make_rat(num, 12);
                if (u.contains(phi.apply(x))) CHECK(pl_hat(phi, u).contains(x));
            }
            RegularOpenSet small = ro_shrink(u);
            if (ro_proximity(small, u))
                CHECK(ro_proximity(ro_complement(pl_hat(phi, ro_complement(small))),
                                   pl_hat(phi, u)));
        }
    }
}
