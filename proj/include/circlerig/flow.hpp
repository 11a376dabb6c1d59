#ifndef CIRCLERIG_FLOW_HPP
#define CIRCLERIG_FLOW_HPP

#include <functional>

#include "circlerig/homeo.hpp"

namespace circlerig {

// A one-parameter family t -> f^t with f^0 = id and f^1 = f.
struct Flow {
    std::function<CircleHomeo(double)> at;
    CircleHomeo operator()(double t) const { return at(t); }
};

// Embeds f in a one-parameter group. Mobius maps use the matrix
// one-parameter subgroup (exact group law); PL maps with fixed points use
// affine interpolation on a fundamental domain [x0, f(x0)] in each
// fixed-point-free component, x0 the leftmost breakpoint there.
// Throws NoFixedPoint for fixed-point-free non-Mobius maps (and elliptic
// Mobius maps).
Flow one_parameter_flow(const CircleHomeo& f);

// Homeomorphisms of an open interval (a, b); b may be +inf, a -inf.
using IntervalMap = std::function<double(double)>;

struct IntervalFamily {
    double lo, hi;                             // the interval I = (lo, hi)
    std::function<IntervalMap(double)> map;    // t -> g_t, fixed-point free on I
};

// Returns t -> f_t with f_0 = id and f_t g_t f_t^{-1} = g_0 on I, built by
// the affine identification of the fundamental domains [x, g_t(x)] and
// equivariant extension. Throws FixedPointInInterval if a sampled g_t has a
// fixed point in I.
std::function<IntervalMap(double)> conjugating_family(const IntervalFamily& g);

}  // namespace circlerig

#endif
