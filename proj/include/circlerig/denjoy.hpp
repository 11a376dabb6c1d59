#ifndef CIRCLERIG_DENJOY_HPP
#define CIRCLERIG_DENJOY_HPP

#include <vector>

#include "circlerig/homeo.hpp"

namespace circlerig {

// Monotone (possibly non-strict) degree-one map, stored like a PL lift but
// allowing flat pieces. h(x+1) = h(x)+1.
struct SemiConjugacyMap {
    std::vector<std::pair<Rational, Rational>> bp;

    Rational eval_exact(const Rational& x) const;
    double eval(double x) const { return to_double(eval_exact(rational_from_double(x))); }
};

struct DenjoyResult {
    CircleHomeo blown;    // f'
    SemiConjugacyMap h;   // collapse map: h o f' = f o h
};

// Opens each point of the exact periodic orbit into an interval of the given
// width (weights pair with the orbit points as listed; they must sum to < 1).
// f must be exact (rational rotation or PL). Throws NotPeriodic when the
// orbit is not a single exact cycle of f.
DenjoyResult denjoy_blowup(const CircleHomeo& f, const std::vector<Rational>& orbit,
                           const std::vector<Rational>& weights);

}  // namespace circlerig

#endif
