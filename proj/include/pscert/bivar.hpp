#ifndef PSCERT_BIVAR_HPP
#define PSCERT_BIVAR_HPP

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pscert/errors.hpp"
#include "pscert/rational.hpp"

namespace pscert {

// Sparse exact polynomial in R[x1,x2]. Zero coefficients are never stored.
class BivarPoly {
  public:
    using Expo = std::pair<long, long>;
    using Map = std::map<Expo, Rational>;

    BivarPoly() = default;
    explicit BivarPoly(const Rational& c) {
        if (c != 0) coeffs_[{0, 0}] = c;
    }

    static BivarPoly monomial(const Rational& c, long a1, long a2) {
        BivarPoly p;
        if (c != 0) coeffs_of(p)[{a1, a2}] = c;
        return p;
    }
    static BivarPoly x1() { return monomial(1, 1, 0); }
    static BivarPoly x2() { return monomial(1, 0, 1); }

    const Map& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    long degree() const {  // -1 for the zero polynomial
        long d = -1;
        for (const auto& [e, c] : coeffs_) d = std::max(d, e.first + e.second);
        return d;
    }

    Rational coeff(long a1, long a2) const {
        auto it = coeffs_.find({a1, a2});
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    void add_term(long a1, long a2, const Rational& c) {
        if (c == 0) return;
        auto it = coeffs_.find({a1, a2});
        if (it == coeffs_.end()) {
            coeffs_[{a1, a2}] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    BivarPoly& operator+=(const BivarPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e.first, e.second, c);
        return *this;
    }
    BivarPoly& operator-=(const BivarPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e.first, e.second, -c);
        return *this;
    }
    friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
    friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
    friend BivarPoly operator-(const BivarPoly& a) {
        BivarPoly r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = -c;
        return r;
    }
    friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
        BivarPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
        return r;
    }
    friend BivarPoly operator*(const Rational& s, const BivarPoly& a) {
        BivarPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = s * c;
        return r;
    }
    friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    BivarPoly pow(unsigned long e) const {
        BivarPoly r(Rational(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Rational eval(const Rational& v1, const Rational& v2) const {
        // Horner in x2 over cached powers of x1.
        long d1 = 0;
        for (const auto& [e, c] : coeffs_) d1 = std::max(d1, e.first);
        std::vector<Rational> p1(static_cast<size_t>(d1) + 1);
        p1[0] = 1;
        for (long i = 1; i <= d1; ++i) p1[static_cast<size_t>(i)] = p1[static_cast<size_t>(i - 1)] * v1;
        long d2 = 0;
        for (const auto& [e, c] : coeffs_) d2 = std::max(d2, e.second);
        std::vector<Rational> row(static_cast<size_t>(d2) + 1);
        for (const auto& [e, c] : coeffs_) row[static_cast<size_t>(e.second)] += c * p1[static_cast<size_t>(e.first)];
        Rational acc = 0;
        for (long j = d2; j >= 0; --j) acc = acc * v2 + row[static_cast<size_t>(j)];
        return acc;
    }

    // p(off1 + sc1*t1, off2 + sc2*t2), used to map rectangles onto [-1,1]^2.
    BivarPoly compose_affine(const Rational& off1, const Rational& sc1, const Rational& off2,
                             const Rational& sc2) const {
        BivarPoly t1 = BivarPoly(off1) + sc1 * x1();
        BivarPoly t2 = BivarPoly(off2) + sc2 * x2();
        BivarPoly r;
        for (const auto& [e, c] : coeffs_)
            r += c * (t1.pow(static_cast<unsigned long>(e.first)) *
                      t2.pow(static_cast<unsigned long>(e.second)));
        return r;
    }

  private:
    static Map& coeffs_of(BivarPoly& p) { return p.coeffs_; }
    Map coeffs_;
};

// Factorial-weighted coefficient norm: max |q_a| * a1!...an!/(a1+...+an)!.
inline Rational poly_norm(const BivarPoly& q) {
    Rational best = 0;
    for (const auto& [e, c] : q.terms()) {
        Rational w = abs(c) * detail::factorial_weight({e.first, e.second});
        if (w > best) best = w;
    }
    return best;
}

// Rational L with |q(x)-q(y)| <= L|x-y| on [-1,1]^n: upper bound of
// d^2 n^(d-1/2) ||q||, irrational factor rounded up.
inline Rational lipschitz_const(const BivarPoly& q, unsigned long n = 2) {
    long d = q.degree();
    if (d <= 0) return 0;
    return Rational(d * d) * pow_half_upper(n, static_cast<unsigned long>(d)) * poly_norm(q);
}

// --- text format: "num/den * x1^a x2^b" terms joined with " + " ---

inline std::string to_string(const BivarPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        if (!first) out << " + ";
        first = false;
        out << c.get_str();
        if (e.first > 0) out << " * x1^" << e.first;
        if (e.second > 0) out << (e.first > 0 ? " x2^" : " * x2^") << e.second;
    }
    return out.str();
}

inline BivarPoly parse_bivar(const std::string& text);

namespace detail {
inline std::vector<std::string> split_terms(const std::string& text) {
    // Split on '+' that separates monomials; a '-' directly after start/'+'
    // belongs to the coefficient.
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == '+') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    return parts;
}

inline std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\n\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\n\r");
    return s.substr(b, e - b + 1);
}
}  // namespace detail

inline BivarPoly parse_bivar(const std::string& text) {
    BivarPoly p;
    std::string body = detail::strip(text);
    if (body.empty() || body == "0") return p;
    for (const std::string& raw : detail::split_terms(body)) {
        std::string term = detail::strip(raw);
        if (term.empty()) throw ParseError("empty term in polynomial: " + text);
        std::istringstream in(term);
        Rational coeff = 1;
        long a1 = 0, a2 = 0;
        bool saw_coeff = false;
        std::string tok;
        while (in >> tok) {
            if (tok == "*") continue;
            if (tok.rfind("x1", 0) == 0 || tok.rfind("x2", 0) == 0) {
                long expo = 1;
                if (tok.size() > 2) {
                    if (tok[2] != '^') throw ParseError("bad factor: " + tok);
                    expo = std::stol(tok.substr(3));
                }
                (tok[1] == '1' ? a1 : a2) += expo;
            } else {
                if (saw_coeff) throw ParseError("two coefficients in term: " + term);
                coeff = parse_rational(tok);
                saw_coeff = true;
            }
        }
        p.add_term(a1, a2, coeff);
    }
    return p;
}

}  // namespace pscert

#endif  // PSCERT_BIVAR_HPP
