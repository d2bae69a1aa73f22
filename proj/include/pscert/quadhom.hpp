#ifndef PSCERT_QUADHOM_HPP
#define PSCERT_QUADHOM_HPP

#include <array>
#include <map>
#include <vector>

#include "pscert/rational.hpp"

namespace pscert {

// Sparse exact polynomial in R[y1..y4], homogeneous (every stored monomial
// has the same total degree). Zero coefficients are never stored.
class QuadHomPoly {
  public:
    using Expo = std::array<long, 4>;
    using Map = std::map<Expo, Rational>;

    QuadHomPoly() = default;
    explicit QuadHomPoly(const Rational& c) {
        if (c != 0) coeffs_[{0, 0, 0, 0}] = c;
    }
    static QuadHomPoly monomial(const Rational& c, const Expo& e) {
        QuadHomPoly p;
        if (c != 0) p.coeffs_[e] = c;
        return p;
    }
    static QuadHomPoly var(int i) {
        Expo e{0, 0, 0, 0};
        e[static_cast<size_t>(i)] = 1;
        return monomial(1, e);
    }
    // y1 + y2 + y3 + y4
    static QuadHomPoly sum_of_vars() {
        QuadHomPoly p;
        for (int i = 0; i < 4; ++i) p.coeffs_[QuadHomPoly::var(i).coeffs_.begin()->first] = 1;
        return p;
    }

    const Map& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    size_t term_count() const { return coeffs_.size(); }

    long degree() const {
        if (coeffs_.empty()) return -1;
        const Expo& e = coeffs_.begin()->first;
        return e[0] + e[1] + e[2] + e[3];
    }

    bool is_homogeneous() const {
        long d = -1;
        for (const auto& [e, c] : coeffs_) {
            long t = e[0] + e[1] + e[2] + e[3];
            if (d == -1) d = t;
            if (t != d) return false;
        }
        return true;
    }

    void add_term(const Expo& e, const Rational& c) {
        if (c == 0) return;
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    QuadHomPoly& operator+=(const QuadHomPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }
    QuadHomPoly& operator-=(const QuadHomPoly& o) {
        for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
        return *this;
    }
    friend QuadHomPoly operator+(QuadHomPoly a, const QuadHomPoly& b) { return a += b; }
    friend QuadHomPoly operator-(QuadHomPoly a, const QuadHomPoly& b) { return a -= b; }
    friend QuadHomPoly operator*(const QuadHomPoly& a, const QuadHomPoly& b) {
        QuadHomPoly r;
        for (const auto& [ea, ca] : a.coeffs_)
            for (const auto& [eb, cb] : b.coeffs_)
                r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]}, ca * cb);
        return r;
    }
    friend QuadHomPoly operator*(const Rational& s, const QuadHomPoly& a) {
        QuadHomPoly r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.coeffs_) r.coeffs_[e] = s * c;
        return r;
    }
    friend bool operator==(const QuadHomPoly& a, const QuadHomPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

    QuadHomPoly pow(unsigned long e) const {
        QuadHomPoly r(Rational(1)), b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    // Product with y_i for i in vars; single pass, used for the incremental
    // Polya ladder.
    QuadHomPoly mul_by_var_sum(const std::array<bool, 4>& vars) const {
        QuadHomPoly r;
        for (const auto& [e, c] : coeffs_)
            for (size_t i = 0; i < 4; ++i)
                if (vars[i]) {
                    Expo f = e;
                    ++f[i];
                    r.add_term(f, c);
                }
        return r;
    }

    std::array<bool, 4> support_vars() const {
        std::array<bool, 4> s{false, false, false, false};
        for (const auto& [e, c] : coeffs_)
            for (size_t i = 0; i < 4; ++i)
                if (e[i] > 0) s[i] = true;
        return s;
    }

    Rational eval(const std::array<Rational, 4>& y) const {
        Rational acc = 0;
        for (const auto& [e, c] : coeffs_) {
            Rational t = c;
            for (size_t i = 0; i < 4; ++i)
                t *= pow_rat(y[i], static_cast<unsigned long>(e[i]));
            acc += t;
        }
        return acc;
    }

    bool has_negative_coeff() const {
        for (const auto& [e, c] : coeffs_)
            if (c < 0) return true;
        return false;
    }

  private:
    Map coeffs_;
};

inline Rational poly_norm(const QuadHomPoly& q) {
    Rational best = 0;
    for (const auto& [e, c] : q.terms()) {
        Rational w = abs(c) * detail::factorial_weight({e[0], e[1], e[2], e[3]});
        if (w > best) best = w;
    }
    return best;
}

inline Rational lipschitz_const(const QuadHomPoly& q, unsigned long n = 4) {
    long d = q.degree();
    if (d <= 0) return 0;
    return Rational(d * d) * pow_half_upper(n, static_cast<unsigned long>(d)) * poly_norm(q);
}

}  // namespace pscert

#endif  // PSCERT_QUADHOM_HPP
