#include "circlerig/rotnum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace circlerig {

namespace {

std::optional<PeriodicWitness> rotation_certificate(const RotationLift& r, long q_max) {
    Rational tau = r.tau.exact ? *r.tau.exact : rational_from_double(r.tau.approx);
    if (!tau.get_den().fits_slong_p()) return std::nullopt;
    long q = tau.get_den().get_si();
    if (q > q_max) return std::nullopt;
    if (!tau.get_num().fits_slong_p()) return std::nullopt;
    return PeriodicWitness{rational(0), q, tau.get_num().get_si()};
}

// Smallest q <= q_max with an exact solution of f^q(x) = x + p, solved
// piecewise on the exact PL power.
std::optional<PeriodicWitness> pl_certificate(const LiftedMap& f, long q_max) {
    LiftedMap F = LiftedMap::identity();
    for (long q = 1; q <= q_max; ++q) {
        F = compose(f, F);
        if (F.is_rotation()) {  // composition simplified to a rotation
            const auto& r = F.as_rotation();
            Rational tau = r.tau.exact ? *r.tau.exact : rational_from_double(r.tau.approx);
            if (is_integer(tau) && tau.get_num().fits_slong_p())
                return PeriodicWitness{rational(0), q, tau.get_num().get_si()};
            continue;
        }
        const auto& bp = F.as_pl().bp;
        size_t n = bp.size();
        for (size_t i = 0; i < n; ++i) {
            Rational xa = bp[i].first, da = bp[i].second - xa;
            Rational xb = (i + 1 < n) ? bp[i + 1].first : bp[0].first + 1;
            Rational db = ((i + 1 < n) ? bp[i + 1].second : bp[0].second + 1) - xb;
            long plo = floor_long(std::min(da, db));
            long phi = floor_long(std::max(da, db)) + 1;
            for (long p = plo; p <= phi; ++p) {
                if (da == p) return PeriodicWitness{xa, q, p};
                int sa = sgn(Rational(da - p)), sb = sgn(Rational(db - p));
                if (sa * sb < 0) {
                    Rational x = xa + (xb - xa) * (p - da) / (db - da);
                    return PeriodicWitness{x, q, p};
                }
            }
        }
    }
    return std::nullopt;
}

RotBound exact_bound(const Rational& v, std::optional<PeriodicWitness> w) {
    RotBound b;
    b.exact = v;
    b.lo = b.hi = to_double(v);
    b.witness = std::move(w);
    return b;
}

void intersect(RotBound& best, double lo, double hi) {
    best.lo = std::max(best.lo, lo);
    best.hi = std::min(best.hi, hi);
}

RotBound pl_enclosure(const LiftedMap& f, double tol, long max_iter) {
    RotBound best;
    best.lo = -std::numeric_limits<double>::infinity();
    best.hi = std::numeric_limits<double>::infinity();
    LiftedMap F = f;
    long n = 1;
    const size_t bp_cap = 40000;
    for (;;) {
        const auto& bp = F.as_pl().bp;
        Rational mn = bp[0].second - bp[0].first, mx = mn;
        for (const auto& [x, y] : bp) {
            Rational d = y - x;
            mn = std::min(mn, d);
            mx = std::max(mx, d);
        }
        intersect(best, to_double(Rational(mn / n)) - 1e-15, to_double(Rational(mx / n)) + 1e-15);
        if (best.width() <= tol) return best;
        if (2 * n > max_iter || bp.size() > bp_cap) throw ToleranceNotReached(best);
        F = compose(F, F);
        if (!F.is_pl()) throw ToleranceNotReached(best);  // defensive; PL is closed under compose
        n *= 2;
    }
}

RotBound numeric_enclosure(const LiftedMap& f, double tol, long max_iter) {
    const double slop = 1e-9;
    RotBound best;
    best.lo = -std::numeric_limits<double>::infinity();
    best.hi = std::numeric_limits<double>::infinity();
    double x = 0.0;
    long next = 1;
    for (long n = 1; n <= max_iter; ++n) {
        x = f.eval(x);
        if (n == next || n == max_iter) {
            intersect(best, (x - 1) / n - slop, (x + 1) / n + slop);
            if (best.width() <= tol) return best;
            next *= 2;
        }
    }
    throw ToleranceNotReached(best);
}

// Integer translation number certified by a sign-bracketed fixed point.
std::optional<long> fixed_point_level(const LiftedMap& f) {
    try {
        DynClass d = classify(canonicalize(f));
        if (d.tag == DynTag::FixedPointFree) return std::nullopt;
        double x = d.whole_circle             ? 0.0
                   : d.tag == DynTag::Hyperbolic ? d.attracting.approx
                   : d.tag == DynTag::SingleNeutralFixed
                       ? d.neutral.approx
                       : d.fixed_set.front().lo.approx;
        return std::lround(f.eval(x) - x);
    } catch (const AmbiguousAtTolerance&) {
        return std::nullopt;
    }
}

}  // namespace

std::optional<PeriodicWitness> periodic_certificate(const LiftedMap& f, long q_max) {
    switch (f.kind()) {
        case MapKind::Rotation: return rotation_certificate(f.as_rotation(), q_max);
        case MapKind::PL:
            if (!f.is_exact()) throw UnsupportedKind("periodic_certificate: non-rational PL data");
            return pl_certificate(f, q_max);
        default: throw UnsupportedKind("periodic_certificate: Mobius/Composite kinds");
    }
}

std::optional<PeriodicWitness> periodic_certificate(const CircleHomeo& f, long q_max) {
    return periodic_certificate(f.lift(), q_max);
}

RotBound translation_number(const LiftedMap& f, double tol, long max_iter) {
    switch (f.kind()) {
        case MapKind::Rotation: {
            const auto& r = f.as_rotation();
            Rational tau = r.tau.exact ? *r.tau.exact : rational_from_double(r.tau.approx);
            return exact_bound(tau, rotation_certificate(r, 1 << 16));
        }
        case MapKind::PL: {
            if (auto w = pl_certificate(f, 64))
                return exact_bound(Rational(rational(w->p) / w->q), w);
            return pl_enclosure(f, tol, max_iter);
        }
        case MapKind::Mobius:
        case MapKind::Composite: {
            if (auto k = fixed_point_level(f)) {
                RotBound b;
                b.exact = rational(*k);
                b.lo = b.hi = static_cast<double>(*k);
                b.witness = PeriodicWitness{rational(0), 1, *k};  // level certified by bracketing
                return b;
            }
            return numeric_enclosure(f, tol, max_iter);
        }
    }
    throw UnsupportedKind("translation_number");
}

RotBound rotation_number(const CircleHomeo& f, double tol) {
    RotBound b = translation_number(f.lift(), tol);
    if (b.exact) {
        Rational r = rational_frac(*b.exact);
        b.exact = r;
        b.lo = b.hi = to_double(r);
    }
    return b;
}

long integer_translation_value(const LiftedMap& f, double tol) {
    if (f.is_rotation() && f.as_rotation().tau.exact) {
        Rational tau = *f.as_rotation().tau.exact;
        if (!is_integer(tau)) throw NotIdentityLift("rotation by a non-integer");
        return floor_long(tau);
    }
    if (f.is_pl()) {
        const auto& bp = f.as_pl().bp;
        Rational d0 = bp[0].second - bp[0].first;
        if (!is_integer(d0)) throw NotIdentityLift("non-integer displacement");
        for (const auto& [x, y] : bp)
            if (y - x != d0) throw NotIdentityLift("displacement is not constant");
        return floor_long(d0);
    }
    double d0 = f.eval(0.0);
    long k = std::lround(d0);
    if (std::abs(d0 - k) >= tol) throw NotIdentityLift("displacement at 0 is not near an integer");
    for (int i = 1; i < 100; ++i) {
        double x = i / 100.0;
        if (std::abs(f.eval(x) - x - k) >= tol)
            throw NotIdentityLift("displacement spread exceeds tolerance");
    }
    return k;
}

}  // namespace circlerig
