#include "circlerig/contraction.hpp"

#include <cmath>
#include <vector>

#include "circlerig/errors.hpp"

namespace circlerig {

bool arc_contains(const Arc& a, const CirclePoint& p) {
    double len = mod1(a.hi.approx - a.lo.approx);
    double off = mod1(p.approx - a.lo.approx);
    return off <= len;
}

Arc arc_around(const CirclePoint& center, double radius) {
    Arc a;
    a.lo = CirclePoint(center.approx - radius);
    a.hi = CirclePoint(center.approx + radius);
    return a;
}

namespace {

// Image [phi(lo), phi(hi)] of a (proper) arc under a circle homeomorphism.
Arc arc_image(const CircleHomeo& phi, const Arc& a) {
    return {CirclePoint(phi.lift().eval(a.lo.approx)), CirclePoint(phi.lift().eval(a.hi.approx))};
}

bool arc_inside(const Arc& inner, const Arc& outer) {
    double len = mod1(outer.hi.approx - outer.lo.approx);
    double u = mod1(inner.lo.approx - outer.lo.approx);
    double v = mod1(inner.hi.approx - outer.lo.approx);
    return u <= v && v <= len;
}

Arc complement(const Arc& a) { return {a.hi, a.lo}; }

// Certified fixed-point query on the displacement function: +1 certified
// fixed point, -1 certified fixed-point free, 0 undecided at tol.
int fixed_point_certificate(const CircleHomeo& f, double tol) {
    const int N = 2048;
    double margin = 1.0;
    bool crossing = false;
    std::vector<double> d(N + 1);
    for (int i = 0; i <= N; ++i) {
        double x = static_cast<double>(i) / N;
        d[i] = f.lift().eval(x) - x;
        margin = std::min({margin, std::abs(d[i]), std::abs(d[i] - 1)});
    }
    for (int i = 0; i < N; ++i)
        for (int k = 0; k <= 1; ++k)
            if ((d[i] - k) * (d[i + 1] - k) < 0) crossing = true;
    if (crossing) return 1;
    if (margin > tol) return -1;
    return 0;
}

}  // namespace

long find_contraction_power(const CircleHomeo& f, const CircleHomeo& g, const Arc& Um,
                            const Arc& Up, const Arc& Vm, const Arc& Vp, long n_max) {
    DynClass d = classify(f);
    if (d.tag != DynTag::Hyperbolic) throw InvalidMap("find_contraction_power: f not hyperbolic");
    CirclePoint gm(invert(g).lift().eval(d.repelling.approx));
    CirclePoint gp(g.lift().eval(d.attracting.approx));
    if (!arc_contains(Um, d.repelling) || !arc_contains(Up, d.attracting) ||
        !arc_contains(Vm, gm) || !arc_contains(Vp, gp))
        throw InvalidMap("find_contraction_power: arcs do not enclose the required points");

    Arc srcA = complement(Vm);  // S^1 \ V-
    Arc srcB = complement(Um);  // S^1 \ U-
    for (long N = 1; N <= n_max; ++N) {
        CircleHomeo fN = power(f, N);
        bool ok1 = arc_inside(arc_image(compose(fN, g), srcA), Up);
        bool ok2 = arc_inside(arc_image(compose(g, fN), srcB), Vp);
        if (ok1 && ok2) return N;
    }
    throw ConstructionFailed("find_contraction_power: no admissible power up to n_max");
}

FixedPointAlternative fixed_point_alternative(const CircleHomeo& f, const CircleHomeo& g, long N,
                                              double tol) {
    FixedPointAlternative out;
    int pos = fixed_point_certificate(compose(power(f, N), g), tol);
    int neg = fixed_point_certificate(compose(power(f, -N), g), tol);
    out.pos_has_fixed = pos > 0;
    out.neg_has_fixed = neg > 0;
    if (!out.pos_has_fixed && !out.neg_has_fixed) {
        // Either undecided or g exchanges the fixed points of f.
        DynClass d = classify(f);
        if (d.tag == DynTag::Hyperbolic) {
            double gp = g.lift().eval(d.attracting.approx);
            double gm = g.lift().eval(d.repelling.approx);
            if (circle_distance(mod1(gp), d.repelling.approx) < 1e-6 &&
                circle_distance(mod1(gm), d.attracting.approx) < 1e-6)
                throw ExchangedFixedPoints("g exchanges the fixed points of f");
        }
        throw AmbiguousAtTolerance("fixed-point alternative undecided at tolerance");
    }
    return out;
}

}  // namespace circlerig
