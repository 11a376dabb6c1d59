#ifndef CIRCLERIG_HOMEO_HPP
#define CIRCLERIG_HOMEO_HPP

#include <vector>

#include "circlerig/lifted_map.hpp"

namespace circlerig {

// A circle homeomorphism, represented by its canonical lift: the unique lift
// whose value at 0 lies in [0,1).
class CircleHomeo {
public:
    CircleHomeo() : lift_(LiftedMap::identity()) {}

    const LiftedMap& lift() const { return lift_; }
    CirclePoint apply(const CirclePoint& p) const { return lift_.image(p); }

    friend CircleHomeo canonicalize(const LiftedMap& f);

private:
    explicit CircleHomeo(LiftedMap f) : lift_(std::move(f)) {}
    LiftedMap lift_;
};

CircleHomeo canonicalize(const LiftedMap& f);
CircleHomeo compose(const CircleHomeo& f, const CircleHomeo& g);
CircleHomeo invert(const CircleHomeo& f);
CircleHomeo power(const CircleHomeo& f, long n);

// Max over a grid of the circle distance between f(x) and g(x).
double circle_sup_distance(const CircleHomeo& f, const CircleHomeo& g, int samples = 512);

enum class DynTag { FixedPointFree, Hyperbolic, SingleNeutralFixed, GeneralFixed };

struct FixedInterval {
    CirclePoint lo, hi;  // positively oriented closed arc; lo == hi means a point
    bool is_point() const {
        if (lo.is_exact() && hi.is_exact()) return *lo.exact == *hi.exact;
        return lo.approx == hi.approx;
    }
};

struct DynClass {
    DynTag tag = DynTag::FixedPointFree;
    CirclePoint attracting, repelling;       // Hyperbolic
    CirclePoint neutral;                     // SingleNeutralFixed
    bool whole_circle = false;               // GeneralFixed: the identity map
    std::vector<FixedInterval> fixed_set;    // full fixed set, cyclically ordered
};

// Fixed-point classification. PL and rotation kinds are solved exactly,
// Mobius via the trace, composites by bisection on the displacement at
// tolerance tol (AmbiguousAtTolerance when roots cannot be certified).
DynClass classify(const CircleHomeo& f, double tol = 1e-9);

const char* dyn_tag_name(DynTag t);

}  // namespace circlerig

#endif
