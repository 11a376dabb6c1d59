#include "circlerig/denjoy.hpp"

#include <algorithm>
#include <map>

#include "circlerig/errors.hpp"

namespace circlerig {

Rational SemiConjugacyMap::eval_exact(const Rational& x) const {
    const Rational& x0 = bp.front().first;
    Rational k = rational_floor(x - x0);
    Rational xm = x - k;
    size_t n = bp.size();
    for (size_t i = 0; i < n; ++i) {
        const Rational& xa = bp[i].first;
        Rational xb = (i + 1 < n) ? bp[i + 1].first : bp[0].first + 1;
        Rational yb = (i + 1 < n) ? bp[i + 1].second : bp[0].second + 1;
        if (xm >= xa && xm <= xb) {
            if (xa == xb) return bp[i].second + k;
            Rational t = (xm - xa) / (xb - xa);
            return bp[i].second + t * (yb - bp[i].second) + k;
        }
    }
    return x;  // unreachable for valid data
}

DenjoyResult denjoy_blowup(const CircleHomeo& f, const std::vector<Rational>& orbit,
                           const std::vector<Rational>& weights) {
    if (!f.lift().is_exact()) throw UnsupportedKind("denjoy_blowup needs an exact (rational) map");
    size_t q = orbit.size();
    if (q == 0 || weights.size() != q) throw InvalidMap("orbit/weights size mismatch");
    Rational W(0);
    for (const auto& w : weights) {
        if (w <= 0) throw InvalidMap("weights must be positive");
        W += w;
    }
    if (W >= 1) throw InvalidMap("weights must sum to less than 1");

    // Sort orbit points into [0,1), keeping their weights attached.
    std::vector<std::pair<Rational, Rational>> pts;  // (point, weight)
    pts.reserve(q);
    for (size_t i = 0; i < q; ++i) pts.emplace_back(rational_frac(orbit[i]), weights[i]);
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < q; ++i)
        if (pts[i].first == pts[i + 1].first) throw NotPeriodic("orbit points are not distinct");

    // Verify the orbit: f must permute it in a single q-cycle.
    std::vector<size_t> sigma(q);
    std::vector<long> jump(q);
    for (size_t i = 0; i < q; ++i) {
        Rational y = f.lift().eval_exact(pts[i].first);
        Rational yf = rational_frac(y);
        bool found = false;
        for (size_t j = 0; j < q; ++j) {
            if (pts[j].first == yf) {
                sigma[i] = j;
                jump[i] = floor_long(Rational(y - yf));
                found = true;
                break;
            }
        }
        if (!found) throw NotPeriodic("orbit is not f-invariant");
    }
    size_t idx = 0, steps = 0;
    do {
        idx = sigma[idx];
        ++steps;
    } while (idx != 0 && steps <= q);
    if (steps != q) throw NotPeriodic("orbit is not a single cycle of f");

    // Gap starts: g_j = (1-W) p_j + sum of earlier weights.
    std::vector<Rational> gap(q);
    Rational acc(0);
    for (size_t j = 0; j < q; ++j) {
        gap[j] = (1 - W) * pts[j].first + acc;
        acc += pts[j].second;
    }
    // The embedding of the complement of the orbit, extended to lifts.
    auto embed = [&](const Rational& x) -> Rational {
        Rational fl = rational_floor(x);
        Rational xf = x - fl;
        Rational s(0);
        for (size_t j = 0; j < q; ++j)
            if (pts[j].first < xf) s += pts[j].second;
        return (1 - W) * xf + s + fl;
    };

    std::map<Rational, Rational> fp;  // breakpoints of f', keyed mod 1
    for (size_t j = 0; j < q; ++j) {
        size_t k = sigma[j];
        fp[gap[j]] = gap[k] + jump[j];
        fp[gap[j] + pts[j].second] = gap[k] + pts[k].second + jump[j];
    }
    if (f.lift().is_pl()) {
        for (const auto& [x, y] : f.lift().as_pl().bp) {
            Rational xf = rational_frac(x);
            bool on_orbit = false;
            for (const auto& p : pts)
                if (p.first == xf) on_orbit = true;
            if (on_orbit) continue;
            Rational ex = embed(xf);
            fp[ex] = embed(Rational(y - rational_floor(x)));
        }
    }
    std::vector<std::pair<Rational, Rational>> fbp(fp.begin(), fp.end());

    SemiConjugacyMap h;
    for (size_t j = 0; j < q; ++j) {
        h.bp.emplace_back(gap[j], pts[j].first);
        h.bp.emplace_back(gap[j] + pts[j].second, pts[j].first);
    }

    DenjoyResult out;
    out.blown = canonicalize(LiftedMap::pl(std::move(fbp)));
    out.h = std::move(h);
    return out;
}

}  // namespace circlerig
