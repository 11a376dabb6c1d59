#include "circlerig/lifted_map.hpp"

#include <algorithm>
#include <cmath>

namespace circlerig {

namespace {

constexpr double kDetTol = 1e-12;

// ---- PL helpers ------------------------------------------------------------

PLLift normalize_pl(std::vector<std::pair<Rational, Rational>> bp) {
    if (bp.empty()) throw InvalidMap("PL lift needs at least one breakpoint");
    for (auto& [x, y] : bp) {
        Rational k = rational_floor(x);
        x -= k;
        y -= k;
    }
    std::sort(bp.begin(), bp.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    for (size_t i = 0; i + 1 < bp.size(); ++i) {
        if (bp[i].first == bp[i + 1].first)
            throw InvalidMap("PL lift: coincident breakpoint abscissae");
        if (bp[i].second >= bp[i + 1].second)
            throw InvalidMap("PL lift: breakpoint ordinates not increasing");
    }
    if (bp.back().second >= bp.front().second + 1)
        throw InvalidMap("PL lift: ordinate span >= 1 over one period");
    return PLLift{std::move(bp)};
}

Rational pl_eval_exact(const PLLift& f, const Rational& x) {
    Rational k = rational_floor(x);
    Rational t = x - k;
    const auto& bp = f.bp;
    // segment [lo, hi) containing t, with periodic wrap
    size_t i = 0;
    Rational xlo, ylo, xhi, yhi;
    if (t < bp.front().first) {
        xlo = bp.back().first - 1;
        ylo = bp.back().second - 1;
        xhi = bp.front().first;
        yhi = bp.front().second;
    } else {
        size_t lo = 0, hi = bp.size();
        while (lo + 1 < hi) {
            size_t mid = (lo + hi) / 2;
            if (bp[mid].first <= t) lo = mid; else hi = mid;
        }
        i = lo;
        xlo = bp[i].first;
        ylo = bp[i].second;
        if (i + 1 < bp.size()) {
            xhi = bp[i + 1].first;
            yhi = bp[i + 1].second;
        } else {
            xhi = bp.front().first + 1;
            yhi = bp.front().second + 1;
        }
    }
    if (t == xlo) return ylo + k;
    return ylo + (t - xlo) * (yhi - ylo) / (xhi - xlo) + k;
}

double pl_eval(const PLLift& f, double x) {
    double k = std::floor(x);
    double t = x - k;
    const auto& bp = f.bp;
    auto xd = [&](size_t i) { return to_double(bp[i].first); };
    auto yd = [&](size_t i) { return to_double(bp[i].second); };
    double xlo, ylo, xhi, yhi;
    if (t < xd(0)) {
        xlo = xd(bp.size() - 1) - 1;
        ylo = yd(bp.size() - 1) - 1;
        xhi = xd(0);
        yhi = yd(0);
    } else {
        size_t lo = 0, hi = bp.size();
        while (lo + 1 < hi) {
            size_t mid = (lo + hi) / 2;
            if (xd(mid) <= t) lo = mid; else hi = mid;
        }
        xlo = xd(lo);
        ylo = yd(lo);
        if (lo + 1 < bp.size()) {
            xhi = xd(lo + 1);
            yhi = yd(lo + 1);
        } else {
            xhi = xd(0) + 1;
            yhi = yd(0) + 1;
        }
    }
    return ylo + (t - xlo) * (yhi - ylo) / (xhi - xlo) + k;
}

PLLift pl_invert(const PLLift& f) {
    std::vector<std::pair<Rational, Rational>> sw;
    sw.reserve(f.bp.size());
    for (const auto& [x, y] : f.bp) sw.emplace_back(y, x);
    return normalize_pl(std::move(sw));
}

PLLift pl_compose(const PLLift& f, const PLLift& g) {
    PLLift ginv = pl_invert(g);
    std::vector<Rational> xs;
    for (const auto& [x, y] : g.bp) xs.push_back(x);
    for (const auto& [x, y] : f.bp) xs.push_back(rational_frac(pl_eval_exact(ginv, x)));
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::vector<std::pair<Rational, Rational>> bp;
    bp.reserve(xs.size());
    for (const auto& x : xs) bp.emplace_back(x, pl_eval_exact(f, pl_eval_exact(g, x)));
    return normalize_pl(std::move(bp));
}

PLLift pl_shift(PLLift f, long k) {
    for (auto& [x, y] : f.bp) y += k;
    return f;
}

PLLift pl_add_rotation(const PLLift& f, const Rational& tau, bool outer) {
    std::vector<std::pair<Rational, Rational>> bp = f.bp;
    if (outer) {
        for (auto& [x, y] : bp) y += tau;  // tau after f
    } else {
        for (auto& [x, y] : bp) x -= tau;  // tau before f
    }
    return normalize_pl(std::move(bp));
}

// ---- Mobius helpers --------------------------------------------------------

std::array<double, 4> normalize_matrix(std::array<double, 4> m) {
    double det = m[0] * m[3] - m[1] * m[2];
    if (!(det > 0)) throw InvalidMap("Mobius lift: determinant must be positive");
    double s = 1.0 / std::sqrt(det);
    for (auto& e : m) e *= s;
    double tr = m[0] + m[3];
    bool neg = tr < 0 || (tr == 0 && (m[0] < 0 || (m[0] == 0 && m[1] < 0)));
    if (neg)
        for (auto& e : m) e = -e;
    return m;
}

// Lift of diag(lam, 1/lam) pinned at 0; moves every point by < 1/2.
double diag_lift(double lam, double x) {
    double raw = std::atan2(std::sin(M_PI * x) / lam, lam * std::cos(M_PI * x)) / M_PI;
    return raw + std::round(x - raw);
}

double mobius_pinned_raw(const MobiusLift& f, double x) {
    return f.rot_out + diag_lift(f.lam, x + f.rot_in);
}

void mobius_decompose(MobiusLift& f) {
    const auto& m = f.m;
    double E = (m[0] + m[3]) / 2, F = (m[0] - m[3]) / 2;
    double G = (m[2] + m[1]) / 2, H = (m[2] - m[1]) / 2;
    double Q = std::hypot(E, H), R = std::hypot(F, G);
    double s1 = Q + R;  // larger singular value
    if (!(s1 > 0)) throw InvalidMap("Mobius lift: degenerate matrix");
    double s2 = 1.0 / s1;  // det == 1, so s2 = det/s1 (avoids cancellation in Q-R)
    double a1 = std::atan2(H, E), a2 = std::atan2(G, F);
    f.rot_out = (a1 + a2) / 2 / M_PI;
    f.rot_in = (a1 - a2) / 2 / M_PI;
    f.lam = std::sqrt(s1 / s2);
    double raw0 = mobius_pinned_raw(f, 0.0);
    f.pin = std::lround(std::floor(raw0));
    f.theta0 = raw0 - static_cast<double>(f.pin);
    if (f.theta0 < 0) { f.theta0 += 1; f.pin -= 1; }
    if (f.theta0 >= 1) { f.theta0 -= 1; f.pin += 1; }
}

double mobius_eval(const MobiusLift& f, double x) {
    return mobius_pinned_raw(f, x) - static_cast<double>(f.pin) + static_cast<double>(f.branch);
}

MobiusLift make_mobius(const std::array<double, 4>& m, long branch) {
    MobiusLift f;
    f.m = normalize_matrix(m);
    f.branch = branch;
    mobius_decompose(f);
    return f;
}

std::array<double, 4> matmul(const std::array<double, 4>& a, const std::array<double, 4>& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Mobius lift with the given matrix whose lift value at 0 equals v0 (which
// must agree with the projective action mod 1, up to roundoff).
MobiusLift mobius_pinned_to(const std::array<double, 4>& m, double v0) {
    MobiusLift f = make_mobius(m, 0);
    f.branch = std::lround(v0 - f.theta0);
    return f;
}

// ---- generic helpers -------------------------------------------------------

std::vector<LiftedMap> flatten(const LiftedMap& f) {
    if (const auto* c = std::get_if<CompositeLift>(&f.data())) {
        std::vector<LiftedMap> out;
        for (const auto& g : c->factors) {
            auto sub = flatten(g);
            out.insert(out.end(), sub.begin(), sub.end());
        }
        return out;
    }
    return {f};
}

// Try to merge f∘g into a single non-composite lift.
std::optional<LiftedMap> merge_pair(const LiftedMap& f, const LiftedMap& g) {
    const auto *fr = std::get_if<RotationLift>(&f.data());
    const auto *gr = std::get_if<RotationLift>(&g.data());
    const auto *fp = std::get_if<PLLift>(&f.data());
    const auto *gp = std::get_if<PLLift>(&g.data());
    const auto *fm = std::get_if<MobiusLift>(&f.data());
    const auto *gm = std::get_if<MobiusLift>(&g.data());

    if (fr && gr) {
        if (fr->tau.is_exact() && gr->tau.is_exact())
            return LiftedMap::rotation(Scalar(*fr->tau.exact + *gr->tau.exact));
        return LiftedMap::rotation(Scalar(fr->tau.approx + gr->tau.approx));
    }
    if (fp && gp) return LiftedMap(LiftedMap::Variant(pl_compose(*fp, *gp)));
    if (fr && gp && fr->tau.is_exact())
        return LiftedMap(LiftedMap::Variant(pl_add_rotation(*gp, *fr->tau.exact, true)));
    if (fp && gr && gr->tau.is_exact())
        return LiftedMap(LiftedMap::Variant(pl_add_rotation(*fp, *gr->tau.exact, false)));
    if (fm && gm) {
        double v0 = f.eval(g.eval(0.0));
        return LiftedMap(LiftedMap::Variant(mobius_pinned_to(matmul(fm->m, gm->m), v0)));
    }
    auto rot_matrix = [](double tau) -> std::array<double, 4> {
        double a = M_PI * tau;
        return {std::cos(a), -std::sin(a), std::sin(a), std::cos(a)};
    };
    if (fr && gm) {
        double v0 = f.eval(g.eval(0.0));
        return LiftedMap(LiftedMap::Variant(mobius_pinned_to(matmul(rot_matrix(fr->tau.approx), gm->m), v0)));
    }
    if (fm && gr) {
        double v0 = f.eval(g.eval(0.0));
        return LiftedMap(LiftedMap::Variant(mobius_pinned_to(matmul(fm->m, rot_matrix(gr->tau.approx)), v0)));
    }
    return std::nullopt;
}

bool rotation_is_identity(const LiftedMap& f) {
    const auto* r = std::get_if<RotationLift>(&f.data());
    return r && r->tau.is_exact() && *r->tau.exact == 0;
}

}  // namespace

// ---- LiftedMap -------------------------------------------------------------

LiftedMap LiftedMap::identity() { return rotation(Scalar(Rational(0))); }

LiftedMap LiftedMap::rotation(const Scalar& tau) { return LiftedMap(Variant(RotationLift{tau})); }

LiftedMap LiftedMap::pl(std::vector<std::pair<Rational, Rational>> breakpoints) {
    return LiftedMap(Variant(normalize_pl(std::move(breakpoints))));
}

LiftedMap LiftedMap::mobius(const std::array<double, 4>& m, long branch) {
    double det = m[0] * m[3] - m[1] * m[2];
    if (std::abs(det - 1.0) > kDetTol)
        throw InvalidMap("Mobius lift: determinant must be 1 within 1e-12");
    return LiftedMap(Variant(make_mobius(m, branch)));
}

LiftedMap LiftedMap::composite(std::vector<LiftedMap> factors) {
    if (factors.empty()) return identity();
    if (factors.size() == 1) return factors.front();
    return LiftedMap(Variant(CompositeLift{std::move(factors)}));
}

double LiftedMap::eval(double x) const {
    return std::visit(
        [&](const auto& f) -> double {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, RotationLift>) {
                return x + f.tau.approx;
            } else if constexpr (std::is_same_v<T, PLLift>) {
                return pl_eval(f, x);
            } else if constexpr (std::is_same_v<T, MobiusLift>) {
                return mobius_eval(f, x);
            } else {
                double y = x;
                for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it) y = it->eval(y);
                return y;
            }
        },
        v_);
}

bool LiftedMap::is_exact() const {
    return std::visit(
        [&](const auto& f) -> bool {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, RotationLift>) {
                return f.tau.is_exact();
            } else if constexpr (std::is_same_v<T, PLLift>) {
                return true;
            } else if constexpr (std::is_same_v<T, MobiusLift>) {
                return false;
            } else {
                return std::all_of(f.factors.begin(), f.factors.end(),
                                   [](const LiftedMap& g) { return g.is_exact(); });
            }
        },
        v_);
}

Rational LiftedMap::eval_exact(const Rational& x) const {
    return std::visit(
        [&](const auto& f) -> Rational {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, RotationLift>) {
                if (!f.tau.is_exact()) throw UnsupportedKind("rotation lift has no exact angle");
                return x + *f.tau.exact;
            } else if constexpr (std::is_same_v<T, PLLift>) {
                return pl_eval_exact(f, x);
            } else if constexpr (std::is_same_v<T, MobiusLift>) {
                throw UnsupportedKind("Mobius lifts have no exact evaluation");
            } else {
                Rational y = x;
                for (auto it = f.factors.rbegin(); it != f.factors.rend(); ++it)
                    y = it->eval_exact(y);
                return y;
            }
        },
        v_);
}

CirclePoint LiftedMap::image(const CirclePoint& p) const {
    if (p.is_exact() && is_exact()) return CirclePoint(eval_exact(*p.exact));
    return CirclePoint(mod1(eval(p.approx)), p.err);
}

LiftedMap LiftedMap::shifted(long k) const {
    if (k == 0) return *this;
    return std::visit(
        [&](const auto& f) -> LiftedMap {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, RotationLift>) {
                if (f.tau.is_exact()) return rotation(Scalar(*f.tau.exact + k));
                return rotation(Scalar(f.tau.approx + static_cast<double>(k)));
            } else if constexpr (std::is_same_v<T, PLLift>) {
                return LiftedMap(Variant(pl_shift(f, k)));
            } else if constexpr (std::is_same_v<T, MobiusLift>) {
                MobiusLift g = f;
                g.branch += k;
                return LiftedMap(Variant(g));
            } else {
                CompositeLift g = f;
                g.factors.front() = g.factors.front().shifted(k);
                return LiftedMap(Variant(g));
            }
        },
        v_);
}

LiftedMap compose(const LiftedMap& f, const LiftedMap& g) {
    std::vector<LiftedMap> factors = flatten(f);
    auto gf = flatten(g);
    factors.insert(factors.end(), gf.begin(), gf.end());
    // greedy adjacent merging until stable
    bool merged = true;
    while (merged && factors.size() > 1) {
        merged = false;
        for (size_t i = 0; i + 1 < factors.size(); ++i) {
            if (rotation_is_identity(factors[i])) {
                factors.erase(factors.begin() + static_cast<long>(i));
                merged = true;
                break;
            }
            if (auto m = merge_pair(factors[i], factors[i + 1])) {
                factors[i] = std::move(*m);
                factors.erase(factors.begin() + static_cast<long>(i) + 1);
                merged = true;
                break;
            }
        }
        if (!merged && factors.size() > 1 && rotation_is_identity(factors.back())) {
            factors.pop_back();
            merged = true;
        }
    }
    return LiftedMap::composite(std::move(factors));
}

LiftedMap invert(const LiftedMap& f) {
    return std::visit(
        [&](const auto& m) -> LiftedMap {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, RotationLift>) {
                if (m.tau.is_exact()) return LiftedMap::rotation(Scalar(-*m.tau.exact));
                return LiftedMap::rotation(Scalar(-m.tau.approx));
            } else if constexpr (std::is_same_v<T, PLLift>) {
                return LiftedMap(LiftedMap::Variant(pl_invert(m)));
            } else if constexpr (std::is_same_v<T, MobiusLift>) {
                std::array<double, 4> inv{m.m[3], -m.m[1], -m.m[2], m.m[0]};
                MobiusLift g = make_mobius(inv, 0);
                // pin so that g(f(0)) == 0
                double w = mobius_eval(g, f.eval(0.0));
                g.branch = -std::lround(w);
                return LiftedMap(LiftedMap::Variant(g));
            } else {
                std::vector<LiftedMap> inv;
                inv.reserve(m.factors.size());
                for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it)
                    inv.push_back(invert(*it));
                return LiftedMap::composite(std::move(inv));
            }
        },
        f.data());
}

LiftedMap power(const LiftedMap& f, long n) {
    if (n == 0) return LiftedMap::identity();
    if (n < 0) return power(invert(f), -n);
    LiftedMap acc = f;
    LiftedMap base = f;
    long k = n - 1;
    while (k > 0) {
        if (k & 1) acc = compose(acc, base);
        base = compose(base, base);
        k >>= 1;
    }
    return acc;
}

LiftedMap mobius_normalized(std::array<double, 4> m, long branch) {
    return LiftedMap(LiftedMap::Variant(make_mobius(m, branch)));
}

double sup_distance(const LiftedMap& f, const LiftedMap& g, int samples) {
    double worst = 0;
    for (int i = 0; i < samples; ++i) {
        double x = static_cast<double>(i) / samples;
        worst = std::max(worst, std::abs(f.eval(x) - g.eval(x)));
    }
    return worst;
}

}  // namespace circlerig
