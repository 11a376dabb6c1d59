#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circlerig/contraction.hpp"

using namespace circlerig;

namespace {

Arc nbhd(double c, double r) { return arc_around(CirclePoint(c), r); }

}  // namespace

TEST_CASE("contraction power for a hyperbolic mobius map against a rotation") {
    auto f = canonicalize(LiftedMap::mobius({2, 0, 0, 0.5}));
    auto g = canonicalize(LiftedMap::rotation(Scalar(rational(1, 4))));
    // f- = 1/2, f+ = 0; g^{-1}(f-) = 1/4, g(f+) = 1/4.
    Arc Um = nbhd(0.5, 0.05), Up = nbhd(0.0, 0.05), Vm = nbhd(0.25, 0.05), Vp = nbhd(0.25, 0.05);
    long N = find_contraction_power(f, g, Um, Up, Vm, Vp);
    CHECK(N <= 12);
    // Independent check of the first containment by dense sampling.
    auto fNg = compose(power(f, N), g);
    for (int i = 0; i < 400; ++i) {
        double x = i / 400.0;
        if (arc_contains(Vm, CirclePoint(x))) continue;
        CHECK(arc_contains(Up, CirclePoint(fNg.lift().eval(x))));
    }
    auto gfN = compose(g, power(f, N));
    for (int i = 0; i < 400; ++i) {
        double x = i / 400.0;
        if (arc_contains(Um, CirclePoint(x))) continue;
        CHECK(arc_contains(Vp, CirclePoint(gfN.lift().eval(x))));
    }
}

TEST_CASE("identity g needs only one power with wide arcs") {
    auto f = canonicalize(LiftedMap::mobius({3, 0, 0, 1.0 / 3}));
    auto g = canonicalize(LiftedMap::identity());
    Arc Um = nbhd(0.5, 0.2), Up = nbhd(0.0, 0.2), Vm = nbhd(0.5, 0.2), Vp = nbhd(0.0, 0.2);
    CHECK(find_contraction_power(f, g, Um, Up, Vm, Vp) == 1);
}

TEST_CASE("attracting point of f^N g approaches f+ as N grows") {
    auto f = canonicalize(LiftedMap::mobius({2, 0, 0, 0.5}));
    auto g = canonicalize(LiftedMap::rotation(Scalar(rational(1, 4))));
    double prev = 1.0;
    for (long N : {5L, 10L, 20L}) {
        auto d = classify(compose(power(f, N), g), 1e-9);
        REQUIRE(d.tag == DynTag::Hyperbolic);
        double dist = circle_distance(d.attracting, CirclePoint(0.0));
        CHECK(dist < prev);
        prev = dist;
    }
}

TEST_CASE("fixed-point alternative") {
    auto f = canonicalize(LiftedMap::mobius({2, 0, 0, 0.5}));
    auto g = canonicalize(LiftedMap::rotation(Scalar(rational(1, 4))));
    auto alt = fixed_point_alternative(f, g, 8);
    CHECK((alt.pos_has_fixed || alt.neg_has_fixed));

    // A rotation by 1/2 exchanges the fixed points 0 and 1/2 of f; neither
    // f^N g nor f^-N g acquires a fixed point.
    auto swap = canonicalize(LiftedMap::rotation(Scalar(rational(1, 2))));
    CHECK_THROWS_AS(fixed_point_alternative(f, swap, 8), ExchangedFixedPoints);
}
