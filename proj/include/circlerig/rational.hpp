#ifndef CIRCLERIG_RATIONAL_HPP
#define CIRCLERIG_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace circlerig {

using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline Rational rational_floor(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

inline long floor_long(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p()) throw std::overflow_error("rational floor out of long range");
    return r.get_si();
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
// Fractional part in [0, 1).
inline Rational rational_frac(const Rational& q) { return q - rational_floor(q); }

// Exact conversion; every finite double is a dyadic rational.
inline Rational rational_from_double(double x) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

// Parses "p/q" or "p" (used by the JSON formats).
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// A real value carried as a double, with the exact rational kept alongside
// whenever the generating data was rational.
struct Scalar {
    double approx = 0.0;
    std::optional<Rational> exact;

    Scalar() = default;
    Scalar(double v) : approx(v) {}  // NOLINT(google-explicit-constructor)
    Scalar(const Rational& q) : approx(to_double(q)), exact(q) {}  // NOLINT(google-explicit-constructor)

    bool is_exact() const { return exact.has_value(); }
};

}  // namespace circlerig

#endif
