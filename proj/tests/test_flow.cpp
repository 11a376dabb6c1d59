#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "circlerig/flow.hpp"

using namespace circlerig;

TEST_CASE("mobius flow: interpolation through the matrix subgroup") {
    auto f = canonicalize(LiftedMap::mobius({4, 0, 0, 0.25}));
    auto flow = one_parameter_flow(f);
    auto half = flow(0.5);
    auto sqrt2 = canonicalize(LiftedMap::mobius({2, 0, 0, 0.5}));
    CHECK(circle_sup_distance(half, sqrt2) < 1e-12);
    CHECK(circle_sup_distance(flow(0.0), canonicalize(LiftedMap::identity())) < 1e-12);
    CHECK(circle_sup_distance(flow(1.0), f) < 1e-12);

    for (double s : {0.25, 0.7, -0.5}) {
        for (double t : {0.5, 1.25}) {
            CHECK(circle_sup_distance(compose(flow(s), flow(t)), flow(s + t)) < 1e-9);
        }
    }
}

TEST_CASE("mobius flow: parabolic case") {
    auto f = canonicalize(LiftedMap::mobius({1, 0, 1, 1}));
    auto flow = one_parameter_flow(f);
    auto twice = canonicalize(LiftedMap::mobius({1, 0, 2, 1}));
    CHECK(circle_sup_distance(flow(2.0), twice) < 1e-9);
    CHECK(circle_sup_distance(compose(flow(0.3), flow(0.45)), flow(0.75)) < 1e-9);
}

TEST_CASE("pl flow: single neutral fixed point") {
    auto f = canonicalize(LiftedMap::pl({{rational(0), rational(0)}, {rational(1, 2), rational(3, 4)}}));
    auto flow = one_parameter_flow(f);
    CHECK(circle_sup_distance(compose(flow(0.5), flow(0.5)), f) < 1e-9);
    CHECK(circle_sup_distance(flow(0.0), canonicalize(LiftedMap::identity())) < 1e-9);
    CHECK(circle_sup_distance(flow(1.0), f) < 1e-12);
    CHECK(circle_sup_distance(flow(-1.0), invert(f)) < 1e-12);
    for (double s : {0.25, 0.625}) {
        for (double t : {0.375, 1.5, -0.75}) {
            CHECK(circle_sup_distance(compose(flow(s), flow(t)), flow(s + t)) < 1e-9);
        }
    }
}

TEST_CASE("pl flow: hyperbolic map with gaps moving in both directions") {
    auto f = canonicalize(LiftedMap::pl({{rational(0), rational(0)},
                                         {rational(1, 4), rational(1, 8)},
                                         {rational(1, 2), rational(1, 2)},
                                         {rational(3, 4), rational(7, 8)}}));
    auto flow = one_parameter_flow(f);
    CHECK(circle_sup_distance(compose(flow(0.5), flow(0.5)), f) < 1e-9);
    CHECK(circle_sup_distance(compose(flow(0.25), flow(0.75)), f) < 1e-9);
    // Fixed points stay fixed along the flow.
    auto h = flow(0.3);
    CHECK(h.lift().eval(0.0) == doctest::Approx(0.0));
    CHECK(h.lift().eval(0.5) == doctest::Approx(0.5));
}

TEST_CASE("flow admissibility errors") {
    CHECK_THROWS_AS(one_parameter_flow(canonicalize(LiftedMap::rotation(Scalar(rational(1, 3))))),
                    NoFixedPoint);
    double t = 0.4;
    CHECK_THROWS_AS(one_parameter_flow(canonicalize(
                        LiftedMap::mobius({std::cos(t), -std::sin(t), std::sin(t), std::cos(t)}))),
                    NoFixedPoint);
    CHECK_THROWS_AS(one_parameter_flow(canonicalize(LiftedMap::pl(
                        {{rational(0), rational(2, 5)}, {rational(1, 2), rational(4, 5)}}))),
                    NoFixedPoint);
}

TEST_CASE("conjugating family: affine translations on the line") {
    IntervalFamily fam;
    fam.lo = -std::numeric_limits<double>::infinity();
    fam.hi = std::numeric_limits<double>::infinity();
    fam.map = [](double t) -> IntervalMap {
        return [t](double x) { return x + 1 + t; };
    };
    auto f = conjugating_family(fam);
    auto f0 = f(0.0);
    for (double x : {-3.0, -0.4, 0.0, 1.7, 9.2}) CHECK(f0(x) == doctest::Approx(x).epsilon(1e-9));
    for (double t : {0.25, 0.5, 1.0}) {
        auto ft = f(t);
        auto gt = fam.map(t);
        auto g0 = fam.map(0.0);
        for (double x : {-2.0, -0.3, 0.6, 4.4}) {
            CHECK(ft(x) == doctest::Approx(x / (1 + t)).epsilon(1e-9));
            CHECK(ft(gt(x)) == doctest::Approx(g0(ft(x))).epsilon(1e-8));
        }
    }
}

TEST_CASE("conjugating family: mobius restrictions to (0, 1/2)") {
    IntervalFamily fam;
    fam.lo = 0.0;
    fam.hi = 0.5;
    fam.map = [](double t) -> IntervalMap {
        double l = 2 + t;
        auto m = LiftedMap::mobius({l, 0, 0, 1 / l});
        return [m](double x) { return m.eval(x); };
    };
    auto f = conjugating_family(fam);
    auto g0 = fam.map(0.0);
    for (double t : {0.3, 0.8, 1.0}) {
        auto ft = f(t);
        auto gt = fam.map(t);
        for (int i = 1; i < 1000; ++i) {
            double x = 0.5 * i / 1000;
            CHECK(ft(gt(x)) == doctest::Approx(g0(ft(x))).epsilon(1e-9));
        }
    }
}

TEST_CASE("conjugating family: fixed points inside the interval are rejected") {
    IntervalFamily fam;
    fam.lo = 0.0;
    fam.hi = 1.0;
    fam.map = [](double t) -> IntervalMap {
        return [t](double x) { return x + (x - 0.5) * (0.1 + t); };
    };
    CHECK_THROWS_AS(conjugating_family(fam), FixedPointInInterval);
}
