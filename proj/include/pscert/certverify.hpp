#ifndef PSCERT_CERTVERIFY_HPP
#define PSCERT_CERTVERIFY_HPP

#include <vector>

#include "pscert/bivar.hpp"
#include "pscert/certificate.hpp"
#include "pscert/herm.hpp"
#include "pscert/region.hpp"

namespace pscert {

struct VerificationReport {
    bool identity_ok = false;
    BivarPoly residual;  // expansion minus target; zero iff identity_ok
    bool weights_ok = false;
    bool constraint_match = false;
    long term_count = 0;
    long max_square_degree = 0;

    bool ok() const { return identity_ok && weights_ok && constraint_match; }
};

namespace detail {

// Dense convolution product, deliberately separate from the sparse map-based
// multiplication used by generation code.
inline BivarPoly dense_product(const BivarPoly& a, const BivarPoly& b) {
    if (a.is_zero() || b.is_zero()) return BivarPoly();
    long a1 = 0, a2 = 0, b1 = 0, b2 = 0;
    for (const auto& [e, c] : a.terms()) {
        a1 = std::max(a1, e.first);
        a2 = std::max(a2, e.second);
    }
    for (const auto& [e, c] : b.terms()) {
        b1 = std::max(b1, e.first);
        b2 = std::max(b2, e.second);
    }
    auto dense = [](const BivarPoly& p, long d1, long d2) {
        std::vector<std::vector<Rational>> m(static_cast<size_t>(d1) + 1,
                                             std::vector<Rational>(static_cast<size_t>(d2) + 1));
        for (const auto& [e, c] : p.terms())
            m[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] = c;
        return m;
    };
    auto da = dense(a, a1, a2), db = dense(b, b1, b2);
    std::vector<std::vector<Rational>> out(
        static_cast<size_t>(a1 + b1) + 1,
        std::vector<Rational>(static_cast<size_t>(a2 + b2) + 1));
    for (long i = 0; i <= a1; ++i)
        for (long j = 0; j <= a2; ++j) {
            const Rational& ca = da[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (ca == 0) continue;
            for (long s = 0; s <= b1; ++s)
                for (long t = 0; t <= b2; ++t) {
                    const Rational& cb = db[static_cast<size_t>(s)][static_cast<size_t>(t)];
                    if (cb == 0) continue;
                    out[static_cast<size_t>(i + s)][static_cast<size_t>(j + t)] += ca * cb;
                }
        }
    BivarPoly r;
    for (long i = 0; i <= a1 + b1; ++i)
        for (long j = 0; j <= a2 + b2; ++j)
            r.add_term(i, j, out[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    return r;
}

}  // namespace detail

inline VerificationReport verify_certificate(const Certificate& cert, const BivarPoly& p,
                                             const std::vector<BivarPoly>& constraints) {
    VerificationReport report;
    report.term_count = static_cast<long>(cert.terms.size());
    report.weights_ok = true;
    report.constraint_match = true;
    BivarPoly total;
    for (const CertTerm& t : cert.terms) {
        if (t.weight < 0) report.weights_ok = false;
        if (t.constraint >= 0 && static_cast<size_t>(t.constraint) >= constraints.size())
            report.constraint_match = false;
        report.max_square_degree = std::max(report.max_square_degree, t.square.degree());
        BivarPoly part = detail::dense_product(t.square, t.square);
        if (t.constraint >= 0 && static_cast<size_t>(t.constraint) < constraints.size())
            part = detail::dense_product(part, constraints[static_cast<size_t>(t.constraint)]);
        total += t.weight * part;
    }
    report.residual = total - p;
    report.identity_ok = report.residual.is_zero();
    return report;
}

inline VerificationReport verify_certificate(const Certificate& cert, const BivarPoly& p,
                                             const Region& region) {
    return verify_certificate(cert, p, region.constraints);
}

inline VerificationReport verify_certificate(const Certificate& cert, const BivarPoly& p) {
    return verify_certificate(cert, p, cert_constraints(cert));
}

inline VerificationReport verify_certificate(const Certificate& cert) {
    return verify_certificate(cert, cert.target, cert_constraints(cert));
}

// C(p,q) = sum_{k,l,s,t} l s |p_kl| |q_st|, a rational upper bound via outward
// rounding of the coefficient moduli. Contract:
// ||p(a,a*) q(a,a*) - (pq)(a,a*)|| <= C(p,q) delta whenever ||a|| <= 1 and
// ||[a,a*]|| <= delta.
inline Rational commutator_constant(const HermPoly& p, const HermPoly& q) {
    Rational left = 0, right = 0;
    for (const auto& [e, c] : p.terms()) left += Rational(e.second) * abs_upper(c);
    for (const auto& [e, c] : q.terms()) right += Rational(e.first) * abs_upper(c);
    return left * right;
}

// Rational C such that q(a,a*) >= -C delta for the certificate's target q,
// whenever g_i(a,a*) >= 0 for the certificate's constraints and ||a|| <= 1,
// ||[a,a*]|| <= delta. Accounting per term (squares are real-valued, so
// r(a,a*) is exactly self-adjoint under the a-powers-first ordering):
//   weight * r^2       : ||(r^2)(a) - r(a)* r(a)|| <= C(r,r) delta
//   weight * r^2 * g   : (r^2 g)(a) -> r(a)* g(a) r(a) via
//                        C(r, r g) + ||r(a)|| C(g, r), with
//                        ||r(a)|| <= sum of |r| coefficients.
inline Rational review_constant(const Certificate& cert) {
    std::vector<BivarPoly> gs = cert_constraints(cert);
    Rational total = 0;
    for (const CertTerm& t : cert.terms) {
        if (t.weight == 0) continue;
        HermPoly r = real_to_herm(t.square);
        if (t.constraint < 0) {
            total += t.weight * commutator_constant(r, r);
        } else {
            HermPoly g = real_to_herm(gs.at(static_cast<size_t>(t.constraint)));
            total += t.weight *
                     (commutator_constant(r, r * g) + r.coeff_sum_bound() * commutator_constant(g, r));
        }
    }
    return total;
}

}  // namespace pscert

#endif  // PSCERT_CERTVERIFY_HPP
