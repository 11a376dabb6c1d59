#include "circlerig/representation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace circlerig {

namespace {

using Mat = std::array<double, 4>;

Mat mat_mul(const Mat& a, const Mat& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat mat_inv(const Mat& a) {  // det 1
    return {a[3], -a[1], -a[2], a[0]};
}

Mat rot_mat(double phi) {
    return {std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)};
}

Mat commutator_mat(const Mat& a, const Mat& b) {  // b^-1 a^-1 b a
    return mat_mul(mat_mul(mat_inv(b), mat_inv(a)), mat_mul(b, a));
}

RotBound rot_sum(const RotBound& x, const RotBound& y, int sign_y) {
    RotBound r;
    if (sign_y > 0) {
        r.lo = x.lo + y.lo;
        r.hi = x.hi + y.hi;
        if (x.exact && y.exact) r.exact = *x.exact + *y.exact;
    } else {
        r.lo = x.lo - y.hi;
        r.hi = x.hi - y.lo;
        if (x.exact && y.exact) r.exact = *x.exact - *y.exact;
    }
    if (r.exact) r.lo = r.hi = to_double(*r.exact);
    return r;
}

}  // namespace

Representation::Representation(int genus, std::vector<CircleHomeo> assignment,
                               RelatorStatus status, double tol, std::optional<long> euler)
    : genus_(genus), assignment_(std::move(assignment)), status_(status), tol_(tol),
      euler_(euler) {
    if (genus_ < 1) throw InvalidMap("representation needs genus >= 1");
    if (assignment_.size() != static_cast<size_t>(2 * genus_))
        throw InvalidMap("assignment must cover all 2g generators");
}

const CircleHomeo& Representation::image(int gen_id) const {
    if (gen_id < 0 || gen_id >= 2 * genus_)
        throw UnknownGenerator("generator id " + std::to_string(gen_id));
    return assignment_[static_cast<size_t>(gen_id)];
}

LiftedMap evaluate_word_lift(const Representation& rep, const Word& w,
                             const std::vector<long>& lift_choice) {
    if (w.genus() > 0 && w.genus() != rep.genus())
        throw MixedPresentations("word over genus " + std::to_string(w.genus()) +
                                 " against representation of genus " +
                                 std::to_string(rep.genus()));
    LiftedMap acc = LiftedMap::identity();
    bool first = true;
    for (const Letter& l : w.letters()) {
        LiftedMap base = rep.image(l.gen).lift();
        if (static_cast<size_t>(l.gen) < lift_choice.size())
            base = base.shifted(lift_choice[static_cast<size_t>(l.gen)]);
        LiftedMap fac = power(base, l.exp);
        acc = first ? fac : compose(acc, fac);
        first = false;
    }
    return acc;
}

CircleHomeo evaluate_word(const Representation& rep, const Word& w) {
    return canonicalize(evaluate_word_lift(rep, w));
}

Representation new_representation(const SurfacePresentation& pres,
                                  const std::vector<CircleHomeo>& assignment,
                                  double tol) {
    Representation raw(pres.genus, assignment, RelatorStatus::UnverifiedFree, tol,
                       std::nullopt);
    LiftedMap L = evaluate_word_lift(raw, relator(pres));
    long eu;
    try {
        eu = integer_translation_value(L, tol);
    } catch (const NotIdentityLift&) {
        throw RelatorNotSatisfied("relator does not evaluate to the identity within tol");
    }
    if (std::abs(eu) > 2L * pres.genus - 2)
        throw Error("internal: Euler number violates the Milnor-Wood bound");
    RelatorStatus st =
        L.is_exact() ? RelatorStatus::VerifiedExact : RelatorStatus::VerifiedWithinTol;
    return Representation(pres.genus, assignment, st, tol, eu);
}

Representation free_representation(const std::vector<CircleHomeo>& assignment, double tol) {
    if (assignment.size() % 2 != 0 || assignment.empty())
        throw InvalidMap("free representation needs generator pairs");
    return Representation(static_cast<int>(assignment.size()) / 2, assignment,
                          RelatorStatus::UnverifiedFree, tol, std::nullopt);
}

long euler_number(const Representation& rep) {
    if (rep.relator_status() == RelatorStatus::UnverifiedFree || !rep.cached_euler())
        throw Error("Euler number needs a verified relator");
    return *rep.cached_euler();
}

RotBound pants_euler(const Representation& rep, const Pants& pants, double tol) {
    LiftedMap A = evaluate_word_lift(rep, pants.boundary[0]);
    LiftedMap D = evaluate_word_lift(rep, pants.boundary[1]);
    LiftedMap DA = compose(D, A);
    RotBound r = rot_sum(rot_sum(translation_number(A, tol), translation_number(D, tol), 1),
                         translation_number(DA, tol), -1);
    if (r.lo > 1 + 1e-6 || r.hi < -1 - 1e-6)
        throw Error("internal: pants Euler number outside [-1, 1]");
    return r;
}

RotBound subsurface_euler(const Representation& rep, const PantsDecomposition& dec,
                          double tol) {
    RotBound sum;
    sum.exact = Rational(0);
    for (const Pants& p : dec.pants) sum = rot_sum(sum, pants_euler(rep, p, tol), 1);
    return sum;
}

Representation fuchsian_once_punctured_torus(double lambda) {
    if (!(lambda > 1)) throw InvalidMap("lambda must exceed 1");
    Mat A{lambda, 0, 0, 1 / lambda};
    Mat R = rot_mat(-kPi / 4);
    Mat B = mat_mul(mat_mul(R, A), mat_inv(R));
    Representation rep = free_representation(
        {canonicalize(LiftedMap::mobius(A)), canonicalize(LiftedMap::mobius(B))});
    Word wa(1, {{0, 1}}), wb(1, {{1, 1}});
    LiftedMap K = evaluate_word_lift(rep, commutator(wa, wb));
    DynClass dc;
    try {
        dc = classify(canonicalize(K));
    } catch (const AmbiguousAtTolerance&) {
        throw NotDiscreteRange("commutator not certifiably hyperbolic");
    }
    if (dc.tag != DynTag::Hyperbolic)
        throw NotDiscreteRange("commutator is not hyperbolic; lambda too small");
    RotBound rot = translation_number(K);
    if (!rot.exact || *rot.exact != -1)
        throw ConstructionFailed("commutator translation number is not -1");
    return rep;
}

Representation fuchsian_closed(int g) {
    if (g < 2) throw InvalidMap("genus must be >= 2");
    const double lambda = 3.0;
    Mat A{lambda, 0, 0, 1 / lambda};
    Mat Q = rot_mat(-kPi / 4);
    Mat B = mat_mul(mat_mul(Q, A), mat_inv(Q));
    Mat K = commutator_mat(A, B);

    SurfacePresentation pres(g);
    for (int dir : {1, -1}) {
        Mat E = rot_mat(dir * kPi / g);  // elliptic of angle 2*pi/g
        for (int k = 1; k < g; ++k) {
            for (int sgn : {1, -1}) {
                double target = sgn * 2 * std::cos(kPi * k / g);
                for (int psi_step = 0; psi_step < 8; ++psi_step) {
                    // rotation center at angle psi off the imaginary axis,
                    // hyperbolic distance s from i
                    double psi = psi_step * kPi / 8;
                    auto conj_at = [&](double s) {
                        Mat T = mat_mul(rot_mat(psi), Mat{std::exp(s / 2), 0, 0,
                                                          std::exp(-s / 2)});
                        return mat_mul(mat_mul(T, E), mat_inv(T));
                    };
                    auto trace_at = [&](double s) {
                        Mat P = mat_mul(K, conj_at(s));
                        return P[0] + P[3] - target;
                    };
                    double prev_s = -30, prev_v = trace_at(prev_s);
                    for (double s = prev_s + 0.05; s <= 30; s += 0.05) {
                        double v = trace_at(s);
                        if ((prev_v < 0) != (v < 0)) {
                            double lo = prev_s, hi = s;
                            for (int it = 0; it < 200; ++it) {
                                double m = (lo + hi) / 2;
                                if ((trace_at(lo) < 0) != (trace_at(m) < 0))
                                    hi = m;
                                else
                                    lo = m;
                            }
                            Mat Rp = conj_at((lo + hi) / 2);
                            std::vector<CircleHomeo> gens;
                            Mat C{1, 0, 0, 1};
                            for (int i = 0; i < g; ++i) {
                                gens.push_back(canonicalize(LiftedMap::mobius(
                                    mat_mul(mat_mul(C, A), mat_inv(C)))));
                                gens.push_back(canonicalize(LiftedMap::mobius(
                                    mat_mul(mat_mul(C, B), mat_inv(C)))));
                                C = mat_mul(C, Rp);
                            }
                            try {
                                Representation rep = new_representation(pres, gens, 1e-9);
                                if (euler_number(rep) != -(2 * g - 2)) throw Error("euler");
                                for (int gi = 0; gi < 2 * g; ++gi)
                                    if (classify(rep.image(gi)).tag != DynTag::Hyperbolic)
                                        throw Error("not hyperbolic");
                                return rep;
                            } catch (const Error&) {
                                // wrong branch of the search; keep scanning
                            }
                        }
                        prev_s = s;
                        prev_v = v;
                    }
                }
            }
        }
    }
    throw ConstructionFailed("no valid side-pairing configuration found");
}

FixedPointTable fixed_point_table(const Representation& rep,
                                  const std::vector<Word>& words, double tol) {
    FixedPointTable table;
    for (const Word& w : words)
        table.entries.emplace_back(w, classify(evaluate_word(rep, w), tol));
    return table;
}

std::optional<std::pair<Word, Word>> detect_fuchsian_torus(
    const Representation& rep, const std::vector<std::pair<Word, Word>>& pairs,
    double tol) {
    for (const auto& [u, v] : pairs) {
        long i = algebraic_intersection(u, v);
        if (i != 1 && i != -1)
            throw InvalidMap("pair must have algebraic intersection +-1");
        RotBound r = translation_number(evaluate_word_lift(rep, commutator(u, v)), tol);
        if (r.exact && is_integer(*r.exact)) {
            long val = floor_long(*r.exact);
            if (val == 1 || val == -1) return std::make_pair(u, v);
        }
    }
    return std::nullopt;
}

namespace {

// Hyperbolic fixed pair of an evaluated word, as doubles.
struct FixPair {
    double rep_pt, att_pt;
};

FixPair hyperbolic_fix(const Representation& rep, const Word& w, double tol) {
    DynClass dc = classify(evaluate_word(rep, w), tol);
    if (dc.tag != DynTag::Hyperbolic)
        throw NotHyperbolic("word '" + word_to_string(w) + "' classifies as " +
                            dyn_tag_name(dc.tag));
    return {mod1(dc.repelling.approx), mod1(dc.attracting.approx)};
}

void check_distinct(const std::vector<double>& pts, double tol) {
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j)
            if (circle_distance(pts[i], pts[j]) < tol)
                throw CoincidentFixedPoints("fixed points coincide within tolerance");
}

// A cyclic sequence of distinct points is correctly ordered iff walking it
// wraps around the circle exactly once (winding 1 forward, n-1 reversed).
bool cyclically_ordered(const std::vector<double>& pts) {
    double total = 0;
    size_t n = pts.size();
    for (size_t i = 0; i < n; ++i) total += mod1(pts[(i + 1) % n] - pts[i]);
    long w = std::lround(total);
    return w == 1 || w == static_cast<long>(n) - 1;
}

}  // namespace

bool verify_separation(const Representation& rep, const Word& a, const Word& b,
                       double tol) {
    FixPair fa = hyperbolic_fix(rep, a, tol), fb = hyperbolic_fix(rep, b, tol);
    check_distinct({fa.rep_pt, fa.att_pt, fb.rep_pt, fb.att_pt}, tol);
    bool in1 = cyclic_order(CirclePoint(fa.rep_pt), CirclePoint(fb.rep_pt),
                            CirclePoint(fa.att_pt));
    bool in2 = cyclic_order(CirclePoint(fa.rep_pt), CirclePoint(fb.att_pt),
                            CirclePoint(fa.att_pt));
    return in1 != in2;
}

bool verify_chain_order(const Representation& rep, const DirectedChain& chain,
                        double tol) {
    size_t k = chain.words.size();
    if (k != 3 && k != 5) throw InvalidMap("chain order check needs length 3 or 5");
    std::vector<FixPair> f;
    for (const Word& w : chain.words) f.push_back(hyperbolic_fix(rep, w, tol));
    std::vector<double> pts;
    if (k == 3)
        pts = {f[0].rep_pt, f[1].rep_pt, f[0].att_pt,
               f[2].rep_pt, f[1].att_pt, f[2].att_pt};
    else
        pts = {f[0].rep_pt, f[1].rep_pt, f[0].att_pt, f[2].rep_pt, f[1].att_pt,
               f[3].rep_pt, f[2].att_pt, f[4].rep_pt, f[3].att_pt, f[4].att_pt};
    check_distinct(pts, tol);
    return cyclically_ordered(pts);
}

namespace {

LiftedMap mirror_lift(const LiftedMap& f) {
    switch (f.kind()) {
        case MapKind::Rotation: {
            const RotationLift& r = f.as_rotation();
            if (r.tau.exact) return LiftedMap::rotation(Scalar(Rational(-*r.tau.exact)));
            return LiftedMap::rotation(Scalar(-r.tau.approx));
        }
        case MapKind::PL: {
            // graph of x -> -f(-x) is the pointwise negation of the graph of f
            std::vector<std::pair<Rational, Rational>> bp;
            for (const auto& [x, y] : f.as_pl().bp) bp.emplace_back(-x, -y);
            std::reverse(bp.begin(), bp.end());
            return LiftedMap::pl(std::move(bp));
        }
        case MapKind::Mobius: {
            const Mat& m = f.as_mobius().m;
            return LiftedMap::mobius({m[0], -m[1], -m[2], m[3]});
        }
        case MapKind::Composite: {
            std::vector<LiftedMap> factors;
            for (const LiftedMap& g : f.as_composite().factors)
                factors.push_back(mirror_lift(g));
            return LiftedMap::composite(std::move(factors));
        }
    }
    throw UnsupportedKind("mirror");
}

}  // namespace

CircleHomeo mirror(const CircleHomeo& f) { return canonicalize(mirror_lift(f.lift())); }

Representation mirror_representation(const Representation& rep) {
    std::vector<CircleHomeo> gens;
    for (const CircleHomeo& f : rep.assignment()) gens.push_back(mirror(f));
    if (rep.relator_status() == RelatorStatus::UnverifiedFree)
        return free_representation(gens, rep.tol());
    return new_representation(SurfacePresentation(rep.genus()), gens, rep.tol());
}

FourHoledSphere four_holed_sphere_genus2() {
    SurfacePresentation pres(2);
    Word a1 = Word::a(pres, 1), b1 = Word::b(pres, 1);
    Word a2 = Word::a(pres, 2), b2 = Word::b(pres, 2);
    FourHoledSphere s;
    // d c b a = relator^-1: each word is freely homotopic to one boundary
    // component of the complement of the two handles
    Word a = multiply(multiply(invert(b1), a1), b1);
    Word b = invert(a1);
    Word c = multiply(multiply(invert(b2), a2), b2);
    Word d = invert(a2);
    s.boundary = {a, b, c, d};

    // cut along u = ba: pants (a, b, u^-1) and (u, c, (cu)^-1), where
    // (cu)^-1 = a^-1 b^-1 c^-1 equals d in the surface group
    {
        Word u = multiply(b, a);
        PantsDecomposition dec;
        dec.genus = 2;
        dec.pants.push_back({{a, b, invert(u)}});
        dec.pants.push_back({{u, c, invert(multiply(c, u))}});
        dec.gluings.push_back({0, 2, 1, 0, GluingKind::Inverse, Word(2)});
        validate(dec);
        s.along_ba = dec;
    }
    // elementary move: cut along v = cb instead
    {
        Word v = multiply(c, b);
        PantsDecomposition dec;
        dec.genus = 2;
        dec.pants.push_back({{b, c, invert(v)}});
        dec.pants.push_back({{a, v, invert(multiply(v, a))}});
        dec.gluings.push_back({0, 2, 1, 1, GluingKind::Inverse, Word(2)});
        validate(dec);
        s.along_cb = dec;
    }
    return s;
}

}  // namespace circlerig
