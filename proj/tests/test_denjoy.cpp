#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "circlerig/denjoy.hpp"

using namespace circlerig;

namespace {

// The semi-conjugacy identity h(f'(x)) = f(h(x)), checked exactly.
void check_semiconjugacy(const CircleHomeo& f, const DenjoyResult& r, int samples = 200) {
    for (int i = 0; i <= samples; ++i) {
        Rational x = rational(i, samples) + rational(1, 3 * samples);
        Rational lhs = r.h.eval_exact(r.blown.lift().eval_exact(x));
        Rational rhs = f.lift().eval_exact(r.h.eval_exact(x));
        CHECK(lhs == rhs);
    }
}

}  // namespace

TEST_CASE("blow-up of a rotation by 1/2 keeps rotation number 1/2") {
    auto f = canonicalize(LiftedMap::rotation(Scalar(rational(1, 2))));
    auto r = denjoy_blowup(f, {rational(0), rational(1, 2)}, {rational(1, 8), rational(1, 8)});
    REQUIRE(r.blown.lift().is_pl());
    check_semiconjugacy(f, r);
    // Exact period-2 certificate: (f')^2 = x + 1 on the whole circle.
    auto sq = power(r.blown.lift(), 2);
    for (int i = 0; i < 9; ++i) {
        Rational x = rational(i, 9);
        CHECK(sq.eval_exact(x) == x + 1);
    }
}

TEST_CASE("blow-up of a period-3 orbit of the rotation by 1/3") {
    auto f = canonicalize(LiftedMap::rotation(Scalar(rational(1, 3))));
    auto r = denjoy_blowup(f, {rational(0), rational(1, 3), rational(2, 3)},
                           {rational(1, 10), rational(1, 20), rational(1, 10)});
    check_semiconjugacy(f, r);
    // The inserted gaps are permuted following the orbit: the first gap has
    // width 1/10 and lands on the gap at the image point.
    auto g0 = r.blown.lift().eval_exact(rational(0));
    auto g0e = r.blown.lift().eval_exact(rational(1, 10));
    CHECK(g0e - g0 == rational(1, 20));  // image gap has the 1/3-point's width
}

TEST_CASE("blow-up of a fixed point keeps rotation number 0") {
    auto f = canonicalize(LiftedMap::pl({{rational(0), rational(0)}, {rational(1, 2), rational(3, 4)}}));
    auto r = denjoy_blowup(f, {rational(0)}, {rational(1, 4)});
    check_semiconjugacy(f, r);
    // f' fixes the inserted interval pointwise at its endpoints.
    CHECK(r.blown.lift().eval_exact(rational(0)) == rational(0));
    CHECK(r.blown.lift().eval_exact(rational(1, 4)) == rational(1, 4));
    auto d = classify(r.blown);
    CHECK(d.tag == DynTag::GeneralFixed);
}

TEST_CASE("collapse map is monotone, degree one, and flat exactly on the gaps") {
    auto f = canonicalize(LiftedMap::rotation(Scalar(rational(1, 2))));
    auto r = denjoy_blowup(f, {rational(0), rational(1, 2)}, {rational(1, 8), rational(1, 8)});
    for (size_t i = 0; i + 1 < r.h.bp.size(); ++i) {
        CHECK(r.h.bp[i].first <= r.h.bp[i + 1].first);
        CHECK(r.h.bp[i].second <= r.h.bp[i + 1].second);
    }
    for (const auto& [x, y] : r.h.bp) {
        CHECK(r.h.eval_exact(x + 1) == y + 1);
    }
    // Flat on the inserted gap at 0: h == 0 on [0, 1/8].
    CHECK(r.h.eval_exact(rational(0)) == r.h.eval_exact(rational(1, 8)));
    CHECK(r.h.eval_exact(rational(0)) != r.h.eval_exact(rational(1, 7)));
}

TEST_CASE("bad orbits are rejected") {
    auto f = canonicalize(LiftedMap::rotation(Scalar(rational(1, 2))));
    CHECK_THROWS_AS(denjoy_blowup(f, {rational(0), rational(1, 3)}, {rational(1, 8), rational(1, 8)}),
                    NotPeriodic);
    // Two 2-cycles are not a single orbit.
    CHECK_THROWS_AS(denjoy_blowup(f, {rational(0), rational(1, 2), rational(1, 4), rational(3, 4)},
                                  {rational(1, 16), rational(1, 16), rational(1, 16), rational(1, 16)}),
                    NotPeriodic);
    CHECK_THROWS_AS(denjoy_blowup(f, {rational(0), rational(1, 2)}, {rational(1, 2), rational(1, 2)}),
                    InvalidMap);
}
