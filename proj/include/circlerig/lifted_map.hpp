#ifndef CIRCLERIG_LIFTED_MAP_HPP
#define CIRCLERIG_LIFTED_MAP_HPP

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "circlerig/circle.hpp"
#include "circlerig/errors.hpp"
#include "circlerig/rational.hpp"

namespace circlerig {

class LiftedMap;

enum class MapKind { Rotation, PL, Mobius, Composite };

// x |-> x + tau.
struct RotationLift {
    Scalar tau;
};

// Periodic piecewise-linear interpolation through one period of breakpoints.
// Canonical storage: x strictly increasing in [0,1), y strictly increasing
// with y.back() < y.front() + 1. Exact end-to-end.
struct PLLift {
    std::vector<std::pair<Rational, Rational>> bp;
};

// Lift of the projective action of m in SL(2,R) on the circle of directions,
// angle t in [0,1) <-> direction (cos pi t, sin pi t). `branch` selects the
// lift: value at 0 equals theta0 + branch with theta0 in [0,1).
//
// Evaluation goes through the decomposition m = R(pi a) diag(lam,1/lam) R(pi b):
// rotation lifts are exact translations and the diagonal lift moves every
// point by strictly less than 1/2, so each factor has an unambiguous lift.
struct MobiusLift {
    std::array<double, 4> m{1, 0, 0, 1};  // row-major [a b; c d], det == 1
    long branch = 0;

    // cached decomposition, circle units
    double rot_out = 0, lam = 1, rot_in = 0;
    double theta0 = 0;  // pinned value at 0, in [0,1)
    long pin = 0;       // integer offset making the pinned value land in [0,1)
};

// Ordered composition: factors[0] applied last (outermost).
struct CompositeLift {
    std::vector<LiftedMap> factors;
};

class LiftedMap {
public:
    using Variant = std::variant<RotationLift, PLLift, MobiusLift, CompositeLift>;

    LiftedMap() : v_(RotationLift{Scalar(Rational(0))}) {}
    explicit LiftedMap(Variant v) : v_(std::move(v)) {}

    static LiftedMap identity();
    static LiftedMap rotation(const Scalar& tau);
    // Breakpoints over one period in any integer window; normalized on entry.
    static LiftedMap pl(std::vector<std::pair<Rational, Rational>> breakpoints);
    static LiftedMap mobius(const std::array<double, 4>& m, long branch = 0);
    static LiftedMap composite(std::vector<LiftedMap> factors);

    const Variant& data() const { return v_; }
    MapKind kind() const { return static_cast<MapKind>(v_.index()); }
    const RotationLift& as_rotation() const { return std::get<RotationLift>(v_); }
    const PLLift& as_pl() const { return std::get<PLLift>(v_); }
    const MobiusLift& as_mobius() const { return std::get<MobiusLift>(v_); }
    const CompositeLift& as_composite() const { return std::get<CompositeLift>(v_); }
    bool is_rotation() const { return std::holds_alternative<RotationLift>(v_); }
    bool is_pl() const { return std::holds_alternative<PLLift>(v_); }
    bool is_mobius() const { return std::holds_alternative<MobiusLift>(v_); }
    bool is_composite() const { return std::holds_alternative<CompositeLift>(v_); }

    double eval(double x) const;
    bool is_exact() const;
    Rational eval_exact(const Rational& x) const;
    CirclePoint image(const CirclePoint& p) const;

    // The same map shifted by an integer translation.
    LiftedMap shifted(long k) const;

    friend LiftedMap compose(const LiftedMap& f, const LiftedMap& g);
    friend LiftedMap invert(const LiftedMap& f);

private:
    Variant v_;
};

LiftedMap compose(const LiftedMap& f, const LiftedMap& g);
LiftedMap invert(const LiftedMap& f);
LiftedMap power(const LiftedMap& f, long n);

// Rescales a positive-determinant matrix to determinant 1 before lifting.
LiftedMap mobius_normalized(std::array<double, 4> m, long branch = 0);

// Max of |f(x) - g(x)| over a uniform grid on [0,1).
double sup_distance(const LiftedMap& f, const LiftedMap& g, int samples = 512);

}  // namespace circlerig

#endif
