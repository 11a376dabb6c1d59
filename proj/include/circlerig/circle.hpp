#ifndef CIRCLERIG_CIRCLE_HPP
#define CIRCLERIG_CIRCLE_HPP

#include <cmath>
#include <optional>

#include "circlerig/rational.hpp"

namespace circlerig {

inline constexpr double kPi = 3.14159265358979323846;

// Reduce a double into [0, 1).
inline double mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r = 0.0;  // guard against -1e-17 -> 1.0 rounding
    return r;
}

// A point of S^1 = R/Z. The angle is exact when the generating data was
// rational; `err` bounds the absolute error of `approx` otherwise.
struct CirclePoint {
    double approx = 0.0;
    std::optional<Rational> exact;
    double err = 0.0;

    CirclePoint() = default;
    explicit CirclePoint(double a, double e = 0.0) : approx(mod1(a)), err(e) {}
    explicit CirclePoint(const Rational& q) : approx(to_double(rational_frac(q))), exact(rational_frac(q)) {}

    bool is_exact() const { return exact.has_value(); }
};

inline double circle_distance(double a, double b) {
    double d = mod1(a - b);
    return std::min(d, 1.0 - d);
}

inline double circle_distance(const CirclePoint& a, const CirclePoint& b) {
    double d = mod1(a.approx - b.approx);
    return std::min(d, 1.0 - d);
}

// Orientation predicate: true iff b lies in the positively oriented open
// arc from a to c. This is the triple cyclic-order test; linear comparisons
// of angles are deliberately not exposed.
inline bool cyclic_order(const CirclePoint& a, const CirclePoint& b, const CirclePoint& c) {
    if (a.is_exact() && b.is_exact() && c.is_exact()) {
        Rational u = rational_frac(*b.exact - *a.exact);
        Rational v = rational_frac(*c.exact - *a.exact);
        return u != 0 && v != 0 && u < v;
    }
    double u = mod1(b.approx - a.approx);
    double v = mod1(c.approx - a.approx);
    return u > 0.0 && v > 0.0 && u < v;
}

inline bool approx_equal(const CirclePoint& a, const CirclePoint& b, double tol) {
    if (a.is_exact() && b.is_exact()) return *a.exact == *b.exact;
    return circle_distance(a, b) <= tol;
}

}  // namespace circlerig

#endif
