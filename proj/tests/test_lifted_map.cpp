#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "circlerig/lifted_map.hpp"

using namespace circlerig;

namespace {

// Independent dense-grid PL interpolator, doubles only: extends one period of
// breakpoints by f(x+1) = f(x)+1 and interpolates linearly.
double pl_oracle(const std::vector<std::pair<double, double>>& bp, double x) {
    size_t n = bp.size();
    double x0 = bp[0].first;
    double k = std::floor(x - x0);
    double xm = x - k;  // in [x0, x0+1)
    for (size_t i = 0; i < n; ++i) {
        double xa = bp[i].first, ya = bp[i].second;
        double xb = (i + 1 < n) ? bp[i + 1].first : bp[0].first + 1;
        double yb = (i + 1 < n) ? bp[i + 1].second : bp[0].second + 1;
        if (xm >= xa && xm <= xb) {
            double t = (xm - xa) / (xb - xa);
            return ya + t * (yb - ya) + k;
        }
    }
    return x;  // unreachable
}

std::array<double, 4> random_sl2(std::mt19937& rng) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (;;) {
        double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
        double det = a * d - b * c;
        if (std::abs(det) < 0.05) continue;
        if (det < 0) {
            b = -b;
            d = -d;
            det = -det;
        }
        double s = 1.0 / std::sqrt(det);
        return {a * s, b * s, c * s, d * s};
    }
}

}  // namespace

TEST_CASE("pl lift evaluates by periodic linear interpolation") {
    auto f = LiftedMap::pl({{rational(0), rational(2, 5)}, {rational(1, 2), rational(4, 5)}});
    CHECK(f.eval_exact(rational(1, 4)) == rational(3, 5));
    CHECK(f.eval_exact(rational(0)) == rational(2, 5));
    CHECK(f.eval_exact(rational(1, 2)) == rational(4, 5));
    // Oracle comparison over a dense grid, several periods.
    std::vector<std::pair<double, double>> obp = {{0.0, 0.4}, {0.5, 0.8}};
    for (int i = -300; i <= 300; ++i) {
        double x = i / 100.0;
        CHECK(f.eval(x) == doctest::Approx(pl_oracle(obp, x)).epsilon(1e-12));
    }
}

TEST_CASE("pl lift accepts any integer window and normalizes") {
    auto f = LiftedMap::pl({{rational(7, 2), rational(19, 5)}, {rational(3), rational(17, 5)}});
    // Same map as {(0,2/5),(1/2,4/5)} (shifted by 3): f(1/4) = 3/5.
    CHECK(f.eval_exact(rational(1, 4)) == rational(3, 5));
}

TEST_CASE("pl lift rejects non-monotone data") {
    CHECK_THROWS_AS(LiftedMap::pl({{rational(0), rational(1, 2)}, {rational(1, 2), rational(1, 4)}}),
                    InvalidMap);
    CHECK_THROWS_AS(LiftedMap::pl({{rational(0), rational(0)}, {rational(1, 2), rational(3, 2)}}),
                    InvalidMap);
}

TEST_CASE("equivariance f(x+1) = f(x)+1 across kinds") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::vector<LiftedMap> maps;
    maps.push_back(LiftedMap::rotation(Scalar(rational(5, 7))));
    maps.push_back(LiftedMap::pl({{rational(0), rational(1, 5)},
                                  {rational(1, 3), rational(3, 5)},
                                  {rational(2, 3), rational(9, 10)}}));
    maps.push_back(LiftedMap::mobius(random_sl2(rng), 2));
    maps.push_back(LiftedMap::composite({maps[2], maps[1], maps[0]}));
    for (const auto& f : maps) {
        for (int i = 0; i < 50; ++i) {
            double x = u(rng);
            CHECK(f.eval(x + 1) == doctest::Approx(f.eval(x) + 1).epsilon(1e-12));
        }
    }
}

TEST_CASE("mobius lift realizes the projective action and is monotone") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int trial = 0; trial < 300; ++trial) {
        auto m = random_sl2(rng);
        auto f = LiftedMap::mobius(m);
        double prev = f.eval(-0.5);
        for (int i = -49; i <= 150; ++i) {
            double x = i / 100.0;
            double y = f.eval(x);
            CHECK(y > prev);  // strict monotonicity on a grid
            prev = y;
            // Image direction is parallel to m * (cos pi x, sin pi x).
            double vx = std::cos(kPi * x), vy = std::sin(kPi * x);
            double wx = m[0] * vx + m[1] * vy, wy = m[2] * vx + m[3] * vy;
            double cross = wx * std::sin(kPi * y) - wy * std::cos(kPi * y);
            CHECK(std::abs(cross) < 1e-9 * std::hypot(wx, wy));
        }
        // Branch pinning: value at 0 lies in [branch, branch + 1).
        auto g = LiftedMap::mobius(m, 3);
        double v0 = g.eval(0.0);
        CHECK(v0 >= 3.0);
        CHECK(v0 < 4.0);
        (void)u;
    }
}

TEST_CASE("mobius determinant must be 1") {
    CHECK_THROWS_AS(LiftedMap::mobius({2, 0, 0, 2}), InvalidMap);
    CHECK_NOTHROW(LiftedMap::mobius({2, 0, 0, 0.5}));
}

TEST_CASE("composition agrees with pointwise composition and simplifies kinds") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto pl = LiftedMap::pl({{rational(0), rational(1, 10)},
                             {rational(1, 4), rational(1, 2)},
                             {rational(3, 4), rational(4, 5)}});
    auto rot = LiftedMap::rotation(Scalar(rational(2, 3)));
    auto mob = LiftedMap::mobius(random_sl2(rng), -1);

    SUBCASE("pl o pl stays pl and exact") {
        auto c = compose(pl, pl);
        CHECK(c.is_pl());
        for (int i = 0; i < 40; ++i) {
            Rational x = rational(i, 37);
            CHECK(c.eval_exact(x) == pl.eval_exact(pl.eval_exact(x)));
        }
    }
    SUBCASE("rot o pl stays pl") {
        auto c = compose(rot, pl);
        CHECK(c.is_pl());
        CHECK(c.eval_exact(rational(1, 8)) == pl.eval_exact(rational(1, 8)) + rational(2, 3));
    }
    SUBCASE("mobius o mobius stays mobius") {
        auto m2 = LiftedMap::mobius(random_sl2(rng), 1);
        auto c = compose(mob, m2);
        CHECK(c.is_mobius());
        for (int i = 0; i < 50; ++i) {
            double x = u(rng);
            CHECK(c.eval(x) == doctest::Approx(mob.eval(m2.eval(x))).epsilon(1e-10));
        }
    }
    SUBCASE("mixed composition evaluates factor by factor") {
        auto c = compose(mob, pl);
        CHECK(c.is_composite());
        for (int i = 0; i < 50; ++i) {
            double x = u(rng);
            CHECK(c.eval(x) == doctest::Approx(mob.eval(pl.eval(x))).epsilon(1e-10));
        }
    }
}

TEST_CASE("inverse and power obey the group laws") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    auto pl = LiftedMap::pl({{rational(0), rational(3, 10)}, {rational(2, 5), rational(1, 2)}});
    auto mob = LiftedMap::mobius(random_sl2(rng), 2);

    for (int i = 0; i < 30; ++i) {
        Rational x = rational(i - 15, 11);
        CHECK(invert(pl).eval_exact(pl.eval_exact(x)) == x);
    }
    for (int i = 0; i < 30; ++i) {
        double x = u(rng);
        CHECK(invert(mob).eval(mob.eval(x)) == doctest::Approx(x).epsilon(1e-9));
    }
    // f^5 by repeated application.
    auto p5 = power(pl, 5);
    auto m3 = power(mob, -3);
    Rational y = rational(4, 9);
    for (int i = 0; i < 5; ++i) y = pl.eval_exact(y);
    CHECK(p5.eval_exact(rational(4, 9)) == y);
    double z = 0.37;
    auto mobinv = invert(mob);
    for (int i = 0; i < 3; ++i) z = mobinv.eval(z);
    CHECK(m3.eval(0.37) == doctest::Approx(z).epsilon(1e-9));
    CHECK(power(pl, 0).eval_exact(rational(5, 8)) == rational(5, 8));
}

TEST_CASE("integer shift commutes with evaluation") {
    auto pl = LiftedMap::pl({{rational(0), rational(3, 10)}, {rational(2, 5), rational(1, 2)}});
    auto s = pl.shifted(-2);
    CHECK(s.eval_exact(rational(1, 5)) == pl.eval_exact(rational(1, 5)) - 2);
}

TEST_CASE("rotation composition adds exactly") {
    auto a = LiftedMap::rotation(Scalar(rational(1, 3)));
    auto b = LiftedMap::rotation(Scalar(rational(1, 6)));
    auto c = compose(a, b);
    CHECK(c.is_rotation());
    CHECK(c.eval_exact(rational(0)) == rational(1, 2));
}
