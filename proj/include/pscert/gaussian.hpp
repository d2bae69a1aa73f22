#ifndef PSCERT_GAUSSIAN_HPP
#define PSCERT_GAUSSIAN_HPP

#include <string>

#include "pscert/rational.hpp"

namespace pscert {

// Gaussian rational: exact complex number with rational real/imaginary parts.
struct GaussRat {
    Rational re{0};
    Rational im{0};

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rational abs_sq() const { return re * re + im * im; }

    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Rational upper bound of |c|.
inline Rational abs_upper(const GaussRat& c) {
    if (c.im == 0) return abs(c.re);
    if (c.re == 0) return abs(c.im);
    return sqrt_upper(c.abs_sq());
}

inline std::string to_string(const GaussRat& c) {
    if (c.im == 0) return c.re.get_str();
    return "(" + c.re.get_str() + "," + c.im.get_str() + ")";
}

}  // namespace pscert

#endif  // PSCERT_GAUSSIAN_HPP
