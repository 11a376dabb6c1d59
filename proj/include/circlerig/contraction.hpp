#ifndef CIRCLERIG_CONTRACTION_HPP
#define CIRCLERIG_CONTRACTION_HPP

#include "circlerig/homeo.hpp"

namespace circlerig {

// Closed arc from lo to hi, positively oriented; never the whole circle.
struct Arc {
    CirclePoint lo, hi;
};

bool arc_contains(const Arc& a, const CirclePoint& p);
Arc arc_around(const CirclePoint& center, double radius);

// Smallest N <= n_max with f^N g (S^1 \ V-) inside U+ and g f^N (S^1 \ U-)
// inside V+, certified by monotone endpoint evaluation. Preconditions: f
// hyperbolic, U-/U+ neighborhoods of the repelling/attracting points, V- a
// neighborhood of g^{-1}(repelling), V+ of g(attracting). Throws
// ConstructionFailed when no N up to n_max works.
long find_contraction_power(const CircleHomeo& f, const CircleHomeo& g, const Arc& Um,
                            const Arc& Up, const Arc& Vm, const Arc& Vp, long n_max = 256);

// Companion fixed-point alternative: at least one of f^N g and f^-N g has a
// fixed point, unless g exchanges the fixed points of f.
struct FixedPointAlternative {
    bool pos_has_fixed = false;  // f^N g
    bool neg_has_fixed = false;  // f^-N g
};

FixedPointAlternative fixed_point_alternative(const CircleHomeo& f, const CircleHomeo& g, long N,
                                              double tol = 1e-9);

}  // namespace circlerig

#endif
