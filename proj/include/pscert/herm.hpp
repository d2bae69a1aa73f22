#ifndef PSCERT_HERM_HPP
#define PSCERT_HERM_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pscert/bivar.hpp"
#include "pscert/errors.hpp"
#include "pscert/gaussian.hpp"

namespace pscert {

// Polynomial in z and zbar with Gaussian-rational coefficients,
// p(z,zbar) = sum p_kl z^k zbar^l. Real-valued iff p_kl = conj(p_lk).
class HermPoly {
  public:
    using Expo = std::pair<long, long>;  // (k, l)
    using Map = std::map<Expo, GaussRat>;

    HermPoly() = default;
    explicit HermPoly(const GaussRat& c) {
        if (!c.is_zero()) coeffs_[{0, 0}] = c;
    }
    static HermPoly monomial(const GaussRat& c, long k, long l) {
        HermPoly p;
        if (!c.is_zero()) p.coeffs_[{k, l}] = c;
        return p;
    }
    static HermPoly z() { return monomial(GaussRat(1), 1, 0); }
    static HermPoly zbar() { return monomial(GaussRat(1), 0, 1); }

    const Map& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const {
        long d = -1;
        for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
        return d;
    }
    GaussRat coeff(long k, long l) const {
        auto it = coeffs_.find({k, l});
        return it == coeffs_.end() ? GaussRat() : it->second;
    }

    void add_term(long k, long l, const GaussRat& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find({k, l});
        if (it == coeffs_.end()) {
            coeffs_[{k, l}] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    HermPoly& operator+=(const HermPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e.first, e.second, c);
        return *this;
    }
    HermPoly& operator-=(const HermPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend HermPoly operator+(HermPoly a, const HermPoly& b) { return a += b; }
    friend HermPoly operator-(HermPoly a, const HermPoly& b) { return a -= b; }
    // Commutative product (as functions of z, zbar).
    friend HermPoly operator*(const HermPoly& a, const HermPoly& b) {
        HermPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend HermPoly operator*(const GaussRat& s, const HermPoly& a) {
        HermPoly r;
        for (const auto& [e, c] : a.coeffs_) r.add_term(e.first, e.second, s * c);
        return r;
    }
    friend bool operator==(const HermPoly& a, const HermPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // pbar(z,zbar) = sum conj(p_lk) z^k zbar^l; pointwise complex conjugate.
    HermPoly conj() const {
        HermPoly r;
        for (const auto& [e, c] : coeffs_) r.coeffs_[{e.second, e.first}] = c.conj();
        return r;
    }

    bool is_real_valued() const {
        for (const auto& [e, c] : coeffs_)
            if (!(coeff(e.second, e.first) == c.conj())) return false;
        return true;
    }

    // Reports the first offending (k,l) if Hermitian symmetry fails.
    void require_real_valued() const {
        for (const auto& [e, c] : coeffs_)
            if (!(coeff(e.second, e.first) == c.conj())) throw NotRealValued(e.first, e.second);
    }

    GaussRat eval(const GaussRat& zval) const {
        GaussRat zb = zval.conj();
        long dk = 0, dl = 0;
        for (const auto& [e, c] : coeffs_) {
            dk = std::max(dk, e.first);
            dl = std::max(dl, e.second);
        }
        std::vector<GaussRat> pk(static_cast<size_t>(dk) + 1), pl(static_cast<size_t>(dl) + 1);
        pk[0] = GaussRat(1);
        pl[0] = GaussRat(1);
        for (long i = 1; i <= dk; ++i) pk[static_cast<size_t>(i)] = pk[static_cast<size_t>(i - 1)] * zval;
        for (long i = 1; i <= dl; ++i) pl[static_cast<size_t>(i)] = pl[static_cast<size_t>(i - 1)] * zb;
        GaussRat acc;
        for (const auto& [e, c] : coeffs_)
            acc += c * pk[static_cast<size_t>(e.first)] * pl[static_cast<size_t>(e.second)];
        return acc;
    }

    // Sum of coefficient moduli, rounded up; bounds ||p(a,a*)|| for ||a|| <= 1.
    Rational coeff_sum_bound() const {
        Rational s = 0;
        for (const auto& [e, c] : coeffs_) s += abs_upper(c);
        return s;
    }

  private:
    Map coeffs_;
};

// Commutative expansion of pbar * p; real-valued, pointwise |p(z)|^2.
inline HermPoly modulus_squared(const HermPoly& p) { return p.conj() * p; }

// p(x1 + i x2, x1 - i x2) for a real-valued p; exact.
inline BivarPoly herm_to_real(const HermPoly& p) {
    p.require_real_valued();
    // Expand z^k zbar^l = (x1 + i x2)^k (x1 - i x2)^l by binomials; imaginary
    // parts cancel by Hermitian symmetry.
    BivarPoly result;
    std::map<std::pair<long, long>, GaussRat> acc;
    for (const auto& [e, c] : p.terms()) {
        long k = e.first, l = e.second;
        // (x1 + i x2)^k: coefficient of x1^(k-a) x2^a is C(k,a) i^a
        std::vector<Integer> bink(static_cast<size_t>(k) + 1), binl(static_cast<size_t>(l) + 1);
        bink[0] = 1;
        for (long a = 1; a <= k; ++a)
            bink[static_cast<size_t>(a)] = bink[static_cast<size_t>(a - 1)] * (k - a + 1) / a;
        binl[0] = 1;
        for (long b = 1; b <= l; ++b)
            binl[static_cast<size_t>(b)] = binl[static_cast<size_t>(b - 1)] * (l - b + 1) / b;
        for (long a = 0; a <= k; ++a) {
            for (long b = 0; b <= l; ++b) {
                // i^a * (-i)^b = i^(a-b) with sign pattern mod 4
                long m = ((a - b) % 4 + 4) % 4;
                GaussRat unit;
                switch (m) {
                    case 0: unit = GaussRat(1); break;
                    case 1: unit = GaussRat(0, 1); break;
                    case 2: unit = GaussRat(-1); break;
                    default: unit = GaussRat(0, -1); break;
                }
                Rational mag(bink[static_cast<size_t>(a)] * binl[static_cast<size_t>(b)]);
                GaussRat term = c * unit;
                term.re *= mag;
                term.im *= mag;
                auto key = std::make_pair(k + l - a - b, a + b);
                acc[key] += term;
                if (acc[key].is_zero()) acc.erase(key);
            }
        }
    }
    for (const auto& [e, c] : acc) {
        if (!(c.im == 0))
            throw NotRealValued(e.first, e.second);  // unreachable after the symmetry check
        result.add_term(e.first, e.second, c.re);
    }
    return result;
}

// q(x1,x2) -> q((z+zbar)/2, (z-zbar)/(2i)); inverse of herm_to_real.
inline HermPoly real_to_herm(const BivarPoly& q) {
    HermPoly half_sum;  // (z+zbar)/2
    half_sum.add_term(1, 0, GaussRat(Rational(1, 2)));
    half_sum.add_term(0, 1, GaussRat(Rational(1, 2)));
    HermPoly half_diff;  // (z-zbar)/(2i) = -i(z-zbar)/2
    half_diff.add_term(1, 0, GaussRat(Rational(0), Rational(-1, 2)));
    half_diff.add_term(0, 1, GaussRat(Rational(0), Rational(1, 2)));
    auto pow = [](const HermPoly& b, unsigned long e) {
        HermPoly r(GaussRat(1)), x = b;
        unsigned long n = e;
        while (n) {
            if (n & 1) r = r * x;
            x = x * x;
            n >>= 1;
        }
        return r;
    };
    HermPoly result;
    for (const auto& [e, c] : q.terms())
        result += GaussRat(c) * (pow(half_sum, static_cast<unsigned long>(e.first)) *
                                 pow(half_diff, static_cast<unsigned long>(e.second)));
    return result;
}

// --- text format: "(re,im) * z^k zb^l" terms joined with " + " ---

inline std::string to_string(const HermPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        out << to_string(c);
        if (e.first > 0) out << " * z^" << e.first;
        if (e.second > 0) out << (e.first > 0 ? " zb^" : " * zb^") << e.second;
    }
    return out.str();
}

inline GaussRat parse_gauss(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty coefficient");
    if (tok.front() == '(') {
        size_t comma = tok.find(',');
        size_t close = tok.find(')');
        if (comma == std::string::npos || close == std::string::npos || close < comma)
            throw ParseError("bad complex coefficient: " + tok);
        return {parse_rational(tok.substr(1, comma - 1)),
                parse_rational(tok.substr(comma + 1, close - comma - 1))};
    }
    return GaussRat(parse_rational(tok));
}

inline HermPoly parse_herm(const std::string& text) {
    HermPoly p;
    std::string body = detail::strip(text);
    if (body.empty() || body == "0") return p;
    for (const std::string& raw : detail::split_terms(body)) {
        std::string term = detail::strip(raw);
        if (term.empty()) throw ParseError("empty term in polynomial: " + text);
        std::istringstream in(term);
        GaussRat coeff{Rational(1)};
        long k = 0, l = 0;
        bool saw_coeff = false;
        std::string tok;
        while (in >> tok) {
            if (tok == "*") continue;
            if (tok.rfind("zb", 0) == 0) {
                long expo = 1;
                if (tok.size() > 2) {
                    if (tok[2] != '^') throw ParseError("bad factor: " + tok);
                    expo = std::stol(tok.substr(3));
                }
                l += expo;
            } else if (tok.rfind("z", 0) == 0) {
                long expo = 1;
                if (tok.size() > 1) {
                    if (tok[1] != '^') throw ParseError("bad factor: " + tok);
                    expo = std::stol(tok.substr(2));
                }
                k += expo;
            } else {
                if (saw_coeff) throw ParseError("two coefficients in term: " + term);
                coeff = parse_gauss(tok);
                saw_coeff = true;
            }
        }
        p.add_term(k, l, coeff);
    }
    return p;
}

}  // namespace pscert

#endif  // PSCERT_HERM_HPP
