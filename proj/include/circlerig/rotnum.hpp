#ifndef CIRCLERIG_ROTNUM_HPP
#define CIRCLERIG_ROTNUM_HPP

#include <optional>

#include "circlerig/homeo.hpp"

namespace circlerig {

// Exact periodic-orbit record: f^q(x) = x + p.
struct PeriodicWitness {
    Rational x;
    long q = 0;
    long p = 0;
};

// Certified enclosure of a translation number.
struct RotBound {
    double lo = 0.0, hi = 0.0;
    std::optional<Rational> exact;
    std::optional<PeriodicWitness> witness;

    double width() const { return hi - lo; }
    double mid() const { return exact ? to_double(*exact) : (lo + hi) / 2; }
};

// Enclosure did not shrink to the requested tolerance; carries the best
// enclosure obtained.
struct ToleranceNotReached : Error {
    RotBound best;
    explicit ToleranceNotReached(RotBound b)
        : Error("translation number enclosure wider than tolerance"), best(std::move(b)) {}
};

// Certified enclosure of rot(f~). Tries an exact rational certificate first
// (periodic orbit, or a sign-certified fixed point for Mobius/Composite),
// then tightens [min,max of (f~^n(x)-x)/n] by doubling n.
RotBound translation_number(const LiftedMap& f, double tol = 1e-9, long max_iter = 1 << 20);

// rot(f) = rot(f~) mod Z on the canonical lift; exact when certified.
RotBound rotation_number(const CircleHomeo& f, double tol = 1e-9);

// Exact search for f~^q(x) = x + p, q <= q_max. PL/rotation kinds only.
std::optional<PeriodicWitness> periodic_certificate(const LiftedMap& f, long q_max = 64);
std::optional<PeriodicWitness> periodic_certificate(const CircleHomeo& f, long q_max = 64);

// For lifts of the identity: the constant integer displacement. Verified on
// breakpoints (exact kinds) or 100 sample points within tol.
long integer_translation_value(const LiftedMap& f, double tol = 1e-9);

}  // namespace circlerig

#endif
