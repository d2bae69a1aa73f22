#ifndef PSCERT_RATIONAL_HPP
#define PSCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "pscert/errors.hpp"

namespace pscert {

// Exact rational scalar. mpq_class keeps values canonical (gcd-reduced,
// positive denominator), which is the invariant everything here relies on.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw ParseError("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

// Smallest integer s with s*s >= n (n >= 0).
inline Integer isqrt_ceil(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (r * r < n) ++r;
    return r;
}

inline Integer isqrt_floor(const Integer& n) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

// Rational u with u*u >= v and u <= sqrt(v)*(1+1/256), by integer square-root
// bracketing at an adaptively chosen scale.
inline Rational sqrt_upper(const Rational& v) {
    if (v < 0) throw std::domain_error("sqrt_upper of negative value");
    if (v == 0) return 0;
    Integer scale = 1024;
    for (;;) {
        Integer t = ceil_int(v * Rational(scale * scale));
        Integer s = isqrt_ceil(t);
        if (s >= 512) {
            Rational u(s, scale);
            u.canonicalize();
            return u;
        }
        scale *= 1024;
    }
}

// Rational u with 0 <= u*u <= v and u >= sqrt(v)*(1-1/256).
inline Rational sqrt_lower(const Rational& v) {
    if (v < 0) throw std::domain_error("sqrt_lower of negative value");
    if (v == 0) return 0;
    Integer scale = 1024;
    for (;;) {
        Integer t = floor_int(v * Rational(scale * scale));
        Integer s = isqrt_floor(t);
        if (s >= 512) {
            Rational u(s, scale);
            u.canonicalize();
            return u;
        }
        scale *= 1024;
    }
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r = 1, b = base;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// Upper bound of n^(d-1/2) = n^(d-1) * sqrt(n), d >= 1.
inline Rational pow_half_upper(unsigned long n, unsigned long d) {
    if (d == 0) throw std::domain_error("pow_half_upper: d must be >= 1");
    return pow_rat(Rational(static_cast<long>(n)), d - 1) *
           sqrt_upper(Rational(static_cast<long>(n)));
}

inline double to_double(const Rational& q) { return q.get_d(); }

namespace detail {
// a1!...an!/(a1+...+an)!
inline Rational factorial_weight(const std::vector<long>& alpha) {
    Integer num = 1;
    long total = 0;
    for (long a : alpha) {
        for (long i = 2; i <= a; ++i) num *= i;
        total += a;
    }
    Integer den = 1;
    for (long i = 2; i <= total; ++i) den *= i;
    Rational w(num, den);
    w.canonicalize();
    return w;
}
}  // namespace detail

}  // namespace pscert

#endif  // PSCERT_RATIONAL_HPP
