#include "circlerig/flow.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "circlerig/errors.hpp"

namespace circlerig {

namespace {

// ---------------------------------------------------------------- Mobius ---

// Closed-form matrix power M^t for tr(M) >= 2 (nearly-parabolic maps use the
// unipotent formula): M^t = (l^t (M - m I) - l^-t (M - l I)) / (l - m).
std::array<double, 4> matrix_power(const std::array<double, 4>& m, double t) {
    double tr = m[0] + m[3];
    const double band = 1e-9;
    if (std::abs(tr - 2.0) <= band) {
        return {1 + t * (m[0] - 1), t * m[1], t * m[2], 1 + t * (m[3] - 1)};
    }
    double disc = std::sqrt(tr * tr - 4.0);
    double l = (tr + disc) / 2.0, mu = (tr - disc) / 2.0;
    double lt = std::pow(l, t), mt = std::pow(mu, t);
    std::array<double, 4> out{};
    std::array<double, 4> id{1, 0, 0, 1};
    for (int i = 0; i < 4; ++i) out[i] = (lt * (m[i] - mu * id[i]) - mt * (m[i] - l * id[i])) / disc;
    return out;
}

Flow mobius_flow(const MobiusLift& mb) {
    double tr = mb.m[0] + mb.m[3];
    if (std::abs(tr) < 2.0 - 1e-12)
        throw NoFixedPoint("elliptic Mobius map does not embed in a fixed-point flow");
    std::array<double, 4> m = mb.m;
    if (tr < 0)
        for (auto& e : m) e = -e;
    Flow flow;
    flow.at = [m](double t) { return canonicalize(mobius_normalized(matrix_power(m, t))); };
    return flow;
}

// -------------------------------------------------------------------- PL ---

constexpr int kOrbitCap = 4000;

struct Gap {
    Rational P, Q;  // open interval between consecutive fixed components
};

// Fractional power phi_s on one right-moving gap: T-coordinate translation
// with T affine on the fundamental domain [x0, G(x0)), x0 the leftmost kink.
class GapFlow {
public:
    GapFlow(const LiftedMap& G, const LiftedMap& Ginv, Rational P, Rational Q)
        : G_(G), Ginv_(Ginv), P_(std::move(P)), Q_(std::move(Q)) {
        for (const auto& p : G_.as_pl().bp) {
            const Rational& b = p.first;
            Rational c = b + rational_floor(P_ - b) + 1;  // smallest b+n > P
            for (; c < Q_; c += 1) kinks_.push_back(c);
        }
        std::sort(kinks_.begin(), kinks_.end());
        x0_ = kinks_.empty() ? Rational((P_ + Q_) / 2) : kinks_.front();
        x1_ = G_.eval_exact(x0_);
        delta_ = x1_ - x0_;
    }

    // Exact evaluation of phi_s at x in (P,Q); s may be negative (inverse
    // direction). Returns x when the orbit-location cap is hit.
    Rational eval(const Rational& x, const Rational& s) const {
        Rational xi = x;
        long k = 0;
        Rational target;
        bool located = false;
        for (int it = 0; it <= kOrbitCap; ++it) {
            Rational u = (xi - x0_) / delta_;
            if (u >= 1) {
                xi = Ginv_.eval_exact(xi);
                ++k;
            } else if (u < 0) {
                xi = G_.eval_exact(xi);
                --k;
            } else {
                Rational v = u + s;
                long j = floor_long(v);
                target = x0_ + (v - j) * delta_;
                k += j;
                located = true;
                break;
            }
        }
        if (!located) return x;
        const LiftedMap& step = (k >= 0) ? G_ : Ginv_;
        for (long i = 0; i < std::labs(k); ++i) {
            if (i > kOrbitCap) return x;
            target = step.eval_exact(target);
        }
        return target;
    }

    // Node pairs (x, phi_s(x)) capturing every kink of phi_s up to the
    // truncation window near the gap endpoints.
    std::vector<std::pair<Rational, Rational>> pairs(const Rational& s) const {
        Rational trunc(1, 1099511627776L);  // 2^-40
        std::vector<Rational> seeds = kinks_;
        seeds.push_back(x0_);
        std::vector<Rational> nodes;
        for (const auto& w : seeds) {
            Rational v = w;
            for (int i = 0; i < kOrbitCap && Q_ - v > trunc; ++i) {
                nodes.push_back(v);
                v = G_.eval_exact(v);
            }
            v = Ginv_.eval_exact(w);
            for (int i = 0; i < kOrbitCap && v - P_ > trunc; ++i) {
                nodes.push_back(v);
                v = Ginv_.eval_exact(v);
            }
        }
        std::vector<Rational> all = nodes;
        for (const auto& w : nodes) {
            Rational pre = eval(w, Rational(-s));
            if (pre > P_ && pre < Q_) all.push_back(pre);
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        std::vector<std::pair<Rational, Rational>> out;
        out.reserve(all.size());
        for (const auto& x : all) out.emplace_back(x, eval(x, s));
        return out;
    }

private:
    const LiftedMap& G_;
    const LiftedMap& Ginv_;
    Rational P_, Q_, x0_, x1_, delta_;
    std::vector<Rational> kinks_;
};

// Builds the fractional power phi_s (s in (0,1)) of an exact PL lift G whose
// fixed set is exactly `comps` (at displacement level zero).
LiftedMap pl_fractional_power(const LiftedMap& G, const LiftedMap& Ginv,
                              const std::vector<std::pair<Rational, Rational>>& comps,
                              const Rational& s) {
    std::map<Rational, Rational> pairs;
    size_t m = comps.size();
    for (size_t i = 0; i < m; ++i) {
        const auto& [lo, hi] = comps[i];
        pairs[rational_frac(lo)] = rational_frac(lo);
        pairs[rational_frac(hi)] = rational_frac(hi);
        Rational P = hi;
        Rational Q = (i + 1 < m) ? comps[i + 1].first : comps[0].first + 1;
        if (P == Q) continue;  // touching components (already a merged edge case)
        Rational mid = (P + Q) / 2;
        int dir = sgn(Rational(G.eval_exact(mid) - mid));
        if (dir == 0) continue;  // gap is actually fixed
        std::vector<std::pair<Rational, Rational>> gp;
        if (dir > 0) {
            gp = GapFlow(G, Ginv, P, Q).pairs(s);
        } else {
            gp = GapFlow(Ginv, G, P, Q).pairs(s);
            for (auto& pr : gp) std::swap(pr.first, pr.second);
            std::sort(gp.begin(), gp.end());
        }
        for (const auto& [x, y] : gp) {
            Rational fl = rational_floor(x);
            pairs[x - fl] = y - fl;
        }
    }
    std::vector<std::pair<Rational, Rational>> bp(pairs.begin(), pairs.end());
    return LiftedMap::pl(std::move(bp));
}

Flow pl_flow(const CircleHomeo& f) {
    DynClass d = classify(f);
    if (d.tag == DynTag::FixedPointFree)
        throw NoFixedPoint("fixed-point-free PL map does not embed in a flow");
    Flow flow;
    if (d.whole_circle) {
        flow.at = [](double) { return canonicalize(LiftedMap::identity()); };
        return flow;
    }
    // Shift the lift so the fixed set sits at displacement level zero; all
    // components share one integer level (the displacement cannot cross an
    // integer inside a gap).
    std::vector<std::pair<Rational, Rational>> comps;
    for (const auto& c : d.fixed_set) {
        Rational lo = *c.lo.exact;
        Rational hi = lo + rational_frac(*c.hi.exact - lo);
        comps.emplace_back(lo, hi);
    }
    std::sort(comps.begin(), comps.end());
    long level = floor_long(Rational(f.lift().eval_exact(comps[0].first) - comps[0].first +
                                     Rational(1, 2)));
    LiftedMap G = f.lift().shifted(-level);
    LiftedMap Ginv = invert(G);
    flow.at = [G, Ginv, comps](double t) {
        Rational r = rational_from_double(t);
        long n = floor_long(r);
        Rational s = r - n;
        LiftedMap whole = power(G, n);
        if (s != 0) whole = compose(whole, pl_fractional_power(G, Ginv, comps, s));
        return canonicalize(whole);
    };
    return flow;
}

}  // namespace

Flow one_parameter_flow(const CircleHomeo& f) {
    switch (f.lift().kind()) {
        case MapKind::Mobius: return mobius_flow(f.lift().as_mobius());
        case MapKind::Rotation: {
            DynClass d = classify(f);
            if (d.tag != DynTag::GeneralFixed)
                throw NoFixedPoint("fixed-point-free rotation does not embed in a fixed-point flow");
            Flow flow;
            flow.at = [](double) { return canonicalize(LiftedMap::identity()); };
            return flow;
        }
        case MapKind::PL: return pl_flow(f);
        case MapKind::Composite:
            throw UnsupportedKind("one_parameter_flow: composite lifts are not flow-admissible");
    }
    throw UnsupportedKind("one_parameter_flow");
}

// ------------------------------------------------------- interval families ---

namespace {

double monotone_inverse(const IntervalMap& g, double y, double lo, double hi) {
    // Expanding bracket around y, then bisection; g is increasing toward the
    // direction it moves points, but always monotone increasing as a map.
    double a = std::max(lo, y - 1.0), b = std::min(hi, y + 1.0);
    for (int i = 0; i < 200 && g(a) > y; ++i) a = std::max(lo, a - (b - a));
    for (int i = 0; i < 200 && g(b) < y; ++i) b = std::min(hi, b + (b - a));
    for (int i = 0; i < 120; ++i) {
        double mid = (a + b) / 2;
        if (g(mid) < y)
            a = mid;
        else
            b = mid;
    }
    return (a + b) / 2;
}

}  // namespace

std::function<IntervalMap(double)> conjugating_family(const IntervalFamily& g) {
    double lo = g.lo, hi = g.hi;
    double xbar = (std::isfinite(lo) && std::isfinite(hi)) ? (lo + hi) / 2
                  : std::isfinite(lo)                      ? lo + 1
                  : std::isfinite(hi)                      ? hi - 1
                                                           : 0.0;
    auto probe_points = [&](int n) {
        std::vector<double> xs;
        for (int i = 1; i < n; ++i) {
            double u = static_cast<double>(i) / n;
            if (std::isfinite(lo) && std::isfinite(hi))
                xs.push_back(lo + u * (hi - lo));
            else
                xs.push_back(xbar + std::tan((u - 0.5) * 3.0));
        }
        return xs;
    };
    auto direction = [&](const IntervalMap& gt) {
        int dir = 0;
        for (double x : probe_points(64)) {
            double dx = gt(x) - x;
            if (dx == 0.0) throw FixedPointInInterval("g_t fixes a sampled point of I");
            int s = dx > 0 ? 1 : -1;
            if (dir == 0) dir = s;
            if (s != dir) throw FixedPointInInterval("g_t changes direction inside I");
        }
        return dir;
    };
    IntervalMap g0 = g.map(0.0);
    int dir0 = direction(g0);
    double y0 = g0(xbar);

    return [=](double t) -> IntervalMap {
        IntervalMap gt = g.map(t);
        if (direction(gt) != dir0)
            throw FixedPointInInterval("family reverses direction: some g_t has a fixed point");
        double yt = gt(xbar);
        return [=](double y) -> double {
            const int cap = 20000;
            double xi = y;
            long k = 0;
            double dt = yt - xbar;
            for (int it = 0;; ++it) {
                if (it > cap) return y;
                double u = (xi - xbar) / dt;
                if (u >= 1.0) {
                    xi = monotone_inverse(gt, xi, lo, hi);
                    ++k;
                } else if (u < 0.0) {
                    xi = gt(xi);
                    --k;
                } else {
                    double r = xbar + u * (y0 - xbar);
                    for (long i = 0; i < std::labs(k); ++i)
                        r = (k > 0) ? g0(r) : monotone_inverse(g0, r, lo, hi);
                    return r;
                }
            }
        };
    };
}

}  // namespace circlerig
