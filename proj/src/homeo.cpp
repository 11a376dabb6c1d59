#include "circlerig/homeo.hpp"

#include <algorithm>
#include <cmath>

#include "circlerig/errors.hpp"

namespace circlerig {

CircleHomeo canonicalize(const LiftedMap& f) {
    long k;
    if (f.is_exact()) {
        k = floor_long(f.eval_exact(rational(0)));
    } else {
        k = static_cast<long>(std::floor(f.eval(0.0)));
    }
    return CircleHomeo(f.shifted(-k));
}

CircleHomeo compose(const CircleHomeo& f, const CircleHomeo& g) {
    return canonicalize(compose(f.lift(), g.lift()));
}

CircleHomeo invert(const CircleHomeo& f) { return canonicalize(invert(f.lift())); }

CircleHomeo power(const CircleHomeo& f, long n) { return canonicalize(power(f.lift(), n)); }

double circle_sup_distance(const CircleHomeo& f, const CircleHomeo& g, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        double x = static_cast<double>(i) / samples;
        worst = std::max(worst, circle_distance(f.lift().eval(x), g.lift().eval(x)));
    }
    return worst;
}

const char* dyn_tag_name(DynTag t) {
    switch (t) {
        case DynTag::FixedPointFree: return "fixed-point-free";
        case DynTag::Hyperbolic: return "hyperbolic";
        case DynTag::SingleNeutralFixed: return "single-neutral-fixed";
        case DynTag::GeneralFixed: return "general-fixed";
    }
    return "?";
}

namespace {

CirclePoint exact_point(const Rational& r) {
    CirclePoint p;
    p.exact = rational_frac(r);
    p.approx = to_double(*p.exact);
    p.err = 0.0;
    return p;
}

CirclePoint approx_point(double x, double err) {
    CirclePoint p;
    p.approx = mod1(x);
    p.err = err;
    return p;
}

DynClass classify_rotation(const RotationLift& r) {
    DynClass d;
    bool integral;
    if (r.tau.exact) {
        integral = is_integer(*r.tau.exact);
    } else {
        integral = (r.tau.approx == std::round(r.tau.approx));
    }
    if (integral) {
        d.tag = DynTag::GeneralFixed;
        d.whole_circle = true;
    } else {
        d.tag = DynTag::FixedPointFree;
    }
    return d;
}

// Exact fixed-set computation for a canonical PL lift: solve f(x)-x = k for
// k in {0,1} piecewise, then merge adjacent components.
DynClass classify_pl(const PLLift& pl) {
    const auto& bp = pl.bp;
    size_t n = bp.size();
    struct Comp {
        Rational lo, hi;
    };
    std::vector<Comp> raw;
    auto push = [&](const Rational& lo, const Rational& hi) { raw.push_back({lo, hi}); };

    std::vector<Rational> xs(n + 1), ds(n + 1);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = bp[i].first;
        ds[i] = bp[i].second - bp[i].first;
    }
    xs[n] = bp[0].first + 1;
    ds[n] = ds[0];

    for (size_t i = 0; i < n; ++i) {
        for (int k = 0; k <= 1; ++k) {
            Rational a = ds[i] - k, b = ds[i + 1] - k;
            int sa = sgn(a), sb = sgn(b);
            if (sa == 0 && sb == 0) {
                push(xs[i], xs[i + 1]);
            } else if (sa == 0) {
                push(xs[i], xs[i]);
            } else if (sa * sb < 0) {
                Rational root = xs[i] + (xs[i + 1] - xs[i]) * (-a) / (b - a);
                push(root, root);
            }
            // sb == 0 is recorded when the next piece starts.
        }
    }

    DynClass out;
    if (raw.empty()) {
        out.tag = DynTag::FixedPointFree;
        return out;
    }
    std::sort(raw.begin(), raw.end(),
              [](const Comp& a, const Comp& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); });
    std::vector<Comp> comps;
    for (const auto& c : raw) {
        if (!comps.empty() && comps.back().hi >= c.lo) {
            comps.back().hi = std::max(comps.back().hi, c.hi);
        } else {
            comps.push_back(c);
        }
    }
    // Wrap-around merge.
    if (comps.size() >= 2 && comps.back().hi == comps.front().lo + 1) {
        comps.front().lo = comps.back().lo - 1;
        comps.pop_back();
    }
    if (comps.size() == 1 && comps.front().hi - comps.front().lo >= 1) {
        out.tag = DynTag::GeneralFixed;
        out.whole_circle = true;
        out.fixed_set.push_back({exact_point(rational(0)), exact_point(rational(0))});
        return out;
    }
    for (const auto& c : comps) out.fixed_set.push_back({exact_point(c.lo), exact_point(c.hi)});

    // Side signs of the displacement just left/right of each component.
    LiftedMap L{LiftedMap::Variant{pl}};
    // Sign of d(x) - level, where level is the integer value of d on the
    // adjacent fixed component; gaps contain no other integer level.
    auto disp_sign = [&](const Rational& x, long level) {
        return sgn(Rational(L.eval_exact(x) - x - level));
    };
    // Breakpoint-grid nodes strictly adjacent to x.
    auto next_node = [&](const Rational& x) -> Rational {
        Rational best = x + 1;
        for (const auto& p : bp) {
            Rational c = p.first + rational_floor(x - p.first) + 1;
            if (c < best) best = c;
        }
        return best;
    };
    auto prev_node = [&](const Rational& x) -> Rational {
        Rational best = x - 1;
        for (const auto& p : bp) {
            Rational c = p.first + rational_floor(x - p.first);
            if (c == x) c -= 1;
            if (c > best) best = c;
        }
        return best;
    };
    size_t m = comps.size();
    std::vector<int> sign_right(m), sign_left(m);
    for (size_t i = 0; i < m; ++i) {
        long level = std::lround(to_double(Rational(L.eval_exact(comps[i].lo) - comps[i].lo)));
        Rational gap_end = (i + 1 < m) ? comps[i + 1].lo : comps[0].lo + 1;
        Rational t = comps[i].hi;
        Rational probe = (t + std::min(next_node(t), gap_end)) / 2;
        sign_right[i] = disp_sign(probe, level);
        Rational gap_start = (i > 0) ? comps[i - 1].hi : comps[m - 1].hi - 1;
        Rational u = comps[i].lo;
        probe = (u + std::max(prev_node(u), gap_start)) / 2;
        sign_left[i] = disp_sign(probe, level);
    }

    if (m == 2 && comps[0].lo == comps[0].hi && comps[1].lo == comps[1].hi) {
        int a = -1, r = -1;
        for (int i = 0; i < 2; ++i) {
            if (sign_left[i] > 0 && sign_right[i] < 0) a = i;
            if (sign_left[i] < 0 && sign_right[i] > 0) r = i;
        }
        if (a >= 0 && r >= 0) {
            out.tag = DynTag::Hyperbolic;
            out.attracting = exact_point(comps[a].lo);
            out.repelling = exact_point(comps[r].lo);
            return out;
        }
    }
    if (m == 1 && comps[0].lo == comps[0].hi) {
        out.tag = DynTag::SingleNeutralFixed;
        out.neutral = exact_point(comps[0].lo);
        return out;
    }
    out.tag = DynTag::GeneralFixed;
    return out;
}

CirclePoint direction_point(double v1, double v2) {
    return approx_point(std::atan2(v2, v1) / kPi, 1e-14);
}

DynClass classify_mobius(const MobiusLift& mb) {
    DynClass out;
    const auto& m = mb.m;
    double tr = std::abs(m[0] + m[3]);
    const double band = 1e-12;
    if (tr < 2.0 - band) {
        out.tag = DynTag::FixedPointFree;
        return out;
    }
    double s = (m[0] + m[3] >= 0) ? 1.0 : -1.0;
    double a = s * m[0], b = s * m[1], c = s * m[2], d = s * m[3];
    if (tr <= 2.0 + band) {
        // Parabolic (or the identity).
        double off = std::max({std::abs(a - 1), std::abs(b), std::abs(c), std::abs(d - 1)});
        if (off <= band) {
            out.tag = DynTag::GeneralFixed;
            out.whole_circle = true;
            return out;
        }
        // Kernel of M - I, from the larger row.
        double v1, v2;
        if (std::hypot(a - 1, b) >= std::hypot(c, d - 1)) {
            v1 = b;
            v2 = 1 - a;
        } else {
            v1 = d - 1;
            v2 = -c;
        }
        out.tag = DynTag::SingleNeutralFixed;
        out.neutral = direction_point(v1, v2);
        out.fixed_set.push_back({out.neutral, out.neutral});
        return out;
    }
    // Hyperbolic: attracting along the dominant eigendirection.
    double disc = std::sqrt(tr * tr - 4.0);
    double lam = (tr + disc) / 2.0, mu = (tr - disc) / 2.0;
    auto eigvec = [&](double ev, double& v1, double& v2) {
        if (std::hypot(a - ev, b) >= std::hypot(c, d - ev)) {
            v1 = b;
            v2 = ev - a;
        } else {
            v1 = d - ev;
            v2 = -c;
        }
        if (std::hypot(v1, v2) < 1e-300) {
            v1 = 1;
            v2 = 0;
        }
    };
    double a1, a2, r1, r2;
    eigvec(lam, a1, a2);
    eigvec(mu, r1, r2);
    out.tag = DynTag::Hyperbolic;
    out.attracting = direction_point(a1, a2);
    out.repelling = direction_point(r1, r2);
    out.fixed_set.push_back({out.attracting, out.attracting});
    out.fixed_set.push_back({out.repelling, out.repelling});
    return out;
}

DynClass classify_general(const LiftedMap& f, double tol) {
    const int N = 4096;
    std::vector<double> d(N + 1);
    for (int i = 0; i <= N; ++i) {
        double x = static_cast<double>(i) / N;
        d[i] = f.eval(x) - x;
    }
    struct Root {
        double x;
        int left, right;  // displacement signs on either side
    };
    std::vector<Root> roots;
    std::vector<int> near_zero;  // sample indices close to an integer level
    for (int k = 0; k <= 1; ++k) {
        for (int i = 0; i < N; ++i) {
            double a = d[i] - k, b = d[i + 1] - k;
            if (a == 0.0 || std::abs(a) <= tol) near_zero.push_back(i);
            if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
                double lo = static_cast<double>(i) / N, hi = static_cast<double>(i + 1) / N;
                double flo = a;
                for (int it = 0; it < 80 && hi - lo > 1e-15; ++it) {
                    double mid = (lo + hi) / 2;
                    double fm = f.eval(mid) - mid - k;
                    if ((fm > 0) == (flo > 0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                roots.push_back({(lo + hi) / 2, a > 0 ? 1 : -1, b > 0 ? 1 : -1});
            }
        }
    }
    DynClass out;
    if (roots.empty()) {
        if (near_zero.empty()) {
            out.tag = DynTag::FixedPointFree;
            return out;
        }
        throw AmbiguousAtTolerance(
            "displacement comes within tolerance of an integer but no sign change certifies a "
            "fixed point");
    }
    // Every near-zero sample must sit next to a certified root.
    double spacing = 1.0 / N;
    for (int i : near_zero) {
        double x = static_cast<double>(i) / N;
        bool covered = false;
        for (const auto& r : roots) {
            if (circle_distance(x, r.x) <= 2 * spacing) {
                covered = true;
                break;
            }
        }
        if (!covered)
            throw AmbiguousAtTolerance("possible tangential fixed point not certified at tolerance");
    }
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.x < b.x; });
    for (size_t i = 0; i < roots.size(); ++i) {
        double gap = circle_distance(roots[i].x, roots[(i + 1) % roots.size()].x);
        if (roots.size() > 1 && gap <= std::max(tol, 2 * spacing))
            throw AmbiguousAtTolerance("fixed points not separated at tolerance");
    }
    for (const auto& r : roots) {
        CirclePoint p = approx_point(r.x, 1e-14);
        out.fixed_set.push_back({p, p});
    }
    if (roots.size() == 2) {
        int a = -1, rp = -1;
        for (int i = 0; i < 2; ++i) {
            if (roots[i].left > 0 && roots[i].right < 0) a = i;
            if (roots[i].left < 0 && roots[i].right > 0) rp = i;
        }
        if (a >= 0 && rp >= 0) {
            out.tag = DynTag::Hyperbolic;
            out.attracting = approx_point(roots[a].x, 1e-14);
            out.repelling = approx_point(roots[rp].x, 1e-14);
            return out;
        }
    }
    out.tag = DynTag::GeneralFixed;
    return out;
}

}  // namespace

DynClass classify(const CircleHomeo& f, double tol) {
    const LiftedMap& L = f.lift();
    switch (L.kind()) {
        case MapKind::Rotation: return classify_rotation(L.as_rotation());
        case MapKind::PL: return classify_pl(L.as_pl());
        case MapKind::Mobius: return classify_mobius(L.as_mobius());
        case MapKind::Composite: return classify_general(L, tol);
    }
    throw UnsupportedKind("classify: unknown kind");
}

}  // namespace circlerig
