#ifndef PSCERT_HARNESS_HPP
#define PSCERT_HARNESS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pscert/bounds.hpp"
#include "pscert/certgen.hpp"
#include "pscert/certverify.hpp"
#include "pscert/errors.hpp"
#include "pscert/herm.hpp"
#include "pscert/region.hpp"

namespace pscert::harness {

using Mat = Eigen::MatrixXcd;
using Cpx = std::complex<double>;

inline constexpr double kTol = 1e-10;  // absorbed into every bound comparison

// --- dense numerics -------------------------------------------------------

inline double operator_norm(const Mat& m) {
    if (m.rows() == 0) return 0.0;
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(0);
}

inline double smallest_singular(const Mat& m) {
    Eigen::JacobiSVD<Mat> svd(m);
    return svd.singularValues()(svd.singularValues().size() - 1);
}

inline double self_commutator_norm(const Mat& a) {
    return operator_norm(a * a.adjoint() - a.adjoint() * a);
}

// --- reports ---------------------------------------------------------------

struct TrialReport {
    std::string label;     // spec / scenario description
    std::string quantity;  // what is measured
    double measured_norm_a = 0;
    double measured_delta = 0;
    double measured = 0;
    double bound = 0;
    double margin = 0;  // bound - measured
    bool pass = false;

    static TrialReport make(std::string label, std::string quantity, const Mat& a,
                            double measured, double bound) {
        TrialReport r;
        r.label = std::move(label);
        r.quantity = std::move(quantity);
        r.measured_norm_a = operator_norm(a);
        r.measured_delta = self_commutator_norm(a);
        r.measured = measured;
        r.bound = bound;
        r.margin = bound - measured;
        r.pass = measured <= bound + kTol;
        return r;
    }
};

inline std::string to_string(const TrialReport& r) {
    std::ostringstream out;
    out << (r.pass ? "PASS" : "FAIL") << "  " << r.quantity << "  measured=" << r.measured
        << "  bound=" << r.bound << "  margin=" << r.margin << "  |a|=" << r.measured_norm_a
        << "  delta=" << r.measured_delta << "  [" << r.label << "]";
    return out.str();
}

inline std::string trial_csv(const std::vector<TrialReport>& rows) {
    std::ostringstream out;
    out << "label,quantity,norm_a,delta,measured,bound,margin,pass\n";
    for (const TrialReport& r : rows)
        out << r.label << "," << r.quantity << "," << r.measured_norm_a << ","
            << r.measured_delta << "," << r.measured << "," << r.bound << "," << r.margin << ","
            << (r.pass ? 1 : 0) << "\n";
    return out.str();
}

// --- almost-normal matrix generation ----------------------------------------

struct AlmostNormalSpec {
    long n = 50;
    std::string kind = "normal-plus-upper-triangular";
    double delta = 1e-3;
    std::uint64_t seed = 0;
    // When set, diagonal spectra are sampled inside the region with enough
    // margin that the hole resolvent conditions hold for the perturbed matrix.
    const Region* region = nullptr;
};

namespace detail {

inline double uniform01(std::mt19937_64& eng) {
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Point in the disk of radius 1 - margin, staying margin away from each hole.
inline Cpx sample_spectrum_point(std::mt19937_64& eng, const Region* region, double margin) {
    for (int tries = 0; tries < 100000; ++tries) {
        double x = 2 * uniform01(eng) - 1, y = 2 * uniform01(eng) - 1;
        if (x * x + y * y > (1 - margin) * (1 - margin)) continue;
        bool clear = true;
        if (region) {
            for (const Hole& h : region->holes) {
                double cx = to_double(h.center.first), cy = to_double(h.center.second);
                double rr = to_double(h.radius) + margin;
                if ((x - cx) * (x - cx) + (y - cy) * (y - cy) < rr * rr) {
                    clear = false;
                    break;
                }
            }
        }
        if (clear) return {x, y};
    }
    throw InfeasibleSpec("could not sample spectrum away from the holes");
}

}  // namespace detail

inline Mat gen_almost_normal(const AlmostNormalSpec& spec) {
    if (spec.n < 1) throw InfeasibleSpec("dimension must be at least 1");
    if (spec.delta < 0) throw InfeasibleSpec("delta must be nonnegative");
    std::mt19937_64 eng(spec.seed);
    const double margin = 1.0 / 16;

    if (spec.kind == "diagonal-normal") {
        Mat a = Mat::Zero(spec.n, spec.n);
        for (long i = 0; i < spec.n; ++i)
            a(i, i) = detail::sample_spectrum_point(eng, spec.region, margin);
        return a;
    }
    if (spec.kind == "remark-r32") {
        Mat a = Mat::Zero(2, 2);
        a(0, 1) = std::sqrt(spec.delta);
        return a;
    }
    if (spec.kind == "shifted-weighted") {
        if (spec.n < 2) throw InfeasibleSpec("weighted shift needs n >= 2");
        // Squared weights ramp up then down in steps <= delta/2, so every
        // entry of the diagonal self-commutator is <= delta/2.
        Mat a = Mat::Zero(spec.n, spec.n);
        long half = spec.n / 2;
        std::vector<double> w2(static_cast<size_t>(spec.n) - 1, 0.0);
        for (long i = 0; i < spec.n - 1; ++i) {
            long ramp = std::min(i + 1, spec.n - 1 - i);
            w2[static_cast<size_t>(i)] = std::min(1.0, 0.5 * spec.delta * std::min(ramp, half));
        }
        for (long i = 0; i < spec.n - 1; ++i) a(i + 1, i) = std::sqrt(w2[static_cast<size_t>(i)]);
        return a;
    }
    if (spec.kind == "normal-plus-upper-triangular") {
        if (spec.n < 2) throw InfeasibleSpec("need n >= 2 to produce a nonzero commutator");
        Mat d = Mat::Zero(spec.n, spec.n);
        for (long i = 0; i < spec.n; ++i)
            d(i, i) = detail::sample_spectrum_point(eng, spec.region, margin);
        Mat t = Mat::Zero(spec.n, spec.n);
        for (long i = 0; i < spec.n; ++i)
            for (long j = i + 1; j < spec.n; ++j)
                t(i, j) = Cpx(2 * detail::uniform01(eng) - 1, 2 * detail::uniform01(eng) - 1);
        t /= operator_norm(t);
        // Keep the perturbation below half the spectral margin so ||a|| <= 1
        // and the hole resolvent conditions survive the perturbation.
        double t_max = margin / 2;
        if (self_commutator_norm(d + t_max * t) < spec.delta)
            throw InfeasibleSpec("cannot reach the requested delta at this margin");
        double lo = 0, hi = t_max;
        for (int it = 0; it < 200; ++it) {
            double mid = (lo + hi) / 2;
            double c = self_commutator_norm(d + mid * t);
            if (c > spec.delta)
                hi = mid;
            else
                lo = mid;
            if (c <= spec.delta && c > spec.delta / 2) {
                lo = mid;
                break;
            }
        }
        return d + lo * t;
    }
    throw InfeasibleSpec("unknown construction kind: " + spec.kind);
}

// --- polynomial evaluation with the fixed ordering ---------------------------

// p(a,a*) = sum p_kl a^k (a*)^l.
inline Mat apply_poly(const HermPoly& p, const Mat& a) {
    const long n = a.rows();
    Mat astar = a.adjoint();
    long dk = 0, dl = 0;
    for (const auto& [e, c] : p.terms()) {
        dk = std::max(dk, e.first);
        dl = std::max(dl, e.second);
    }
    std::vector<Mat> pk(static_cast<size_t>(dk) + 1), pl(static_cast<size_t>(dl) + 1);
    pk[0] = Mat::Identity(n, n);
    pl[0] = Mat::Identity(n, n);
    for (long i = 1; i <= dk; ++i) pk[static_cast<size_t>(i)] = pk[static_cast<size_t>(i - 1)] * a;
    for (long i = 1; i <= dl; ++i)
        pl[static_cast<size_t>(i)] = pl[static_cast<size_t>(i - 1)] * astar;
    Mat out = Mat::Zero(n, n);
    for (const auto& [e, c] : p.terms())
        out += Cpx(to_double(c.re), to_double(c.im)) * pk[static_cast<size_t>(e.first)] *
               pl[static_cast<size_t>(e.second)];
    return out;
}

// 1/||(a - lambda)^{-1}||; a hole (lambda, R) is admissible for a iff the
// returned value is >= R.
inline double resolvent_radius(const Mat& a, Cpx lambda) {
    Mat shifted = a - lambda * Mat::Identity(a.rows(), a.cols());
    double s = smallest_singular(shifted);
    if (s < 1e-13) throw SingularPoint("lambda is (numerically) an eigenvalue");
    return s;
}

inline void require_resolvent_conditions(const Mat& a, const Region& region) {
    for (const Hole& h : region.holes) {
        Cpx lambda(to_double(h.center.first), to_double(h.center.second));
        double r;
        try {
            r = resolvent_radius(a, lambda);
        } catch (const SingularPoint&) {
            throw ResolventConditionFailed("hole center is an eigenvalue of a");
        }
        if (r + kTol < to_double(h.radius))
            throw ResolventConditionFailed("smallest singular value of a - lambda is below the hole radius");
    }
}

// --- norm bound (certificate-backed) ----------------------------------------

// Certificate data for the bound ||p(a,a*)|| <= sqrt(P^2 + eps P + C'' delta):
// q = P^2 + eps P - |p|^2 is strictly positive on S (min >= eps P), its
// certificate gives q(a,a*) >= -review_constant * delta, and the regrouping of
// |p|^2(a,a*) into p(a,a*)* p(a,a*) costs commutator_constant(pbar, p) delta.
struct NormBoundCert {
    Rational p_max;        // certified upper bound of |p| on S
    Rational eps;
    Certificate cert;      // certificate of q
    Rational c_second;     // C'' = review_constant(cert) + commutator_constant(pbar, p)
};

inline NormBoundCert make_norm_bound_cert(const HermPoly& p, const Region& region,
                                          const Rational& eps, const GenConfig& cfg = {}) {
    NormBoundCert nb;
    nb.p_max = certified_max_abs(p, region, Rational(1, 64)).value;
    // Any eps > 0 keeps the bound sound; a larger one only loosens it while
    // widening the positivity margin of q. Retry with doubled eps when
    // certificate generation fails at the requested margin.
    std::exception_ptr last;
    for (Rational e = eps; e <= 64 * eps + 2; e *= 2) {
        nb.eps = e;
        HermPoly q = HermPoly(GaussRat(nb.p_max * nb.p_max + e * nb.p_max)) - modulus_squared(p);
        BivarPoly q_real = herm_to_real(q);
        std::optional<Certificate> radial = generate_radial_certificate(q_real, region);
        if (radial) {
            nb.cert = *radial;
        } else {
            try {
                nb.cert = generate_certificate(q_real, region, cfg);
            } catch (const SearchExhausted&) {
                last = std::current_exception();
                continue;
            } catch (const TermBudgetExceeded&) {
                last = std::current_exception();
                continue;
            } catch (const BudgetExceeded&) {
                last = std::current_exception();
                continue;
            } catch (const NonpositiveLowerBound&) {
                last = std::current_exception();
                continue;
            }
        }
        nb.c_second = review_constant(nb.cert) + commutator_constant(p.conj(), p);
        return nb;
    }
    std::rethrow_exception(last);
}

inline TrialReport check_norm_bound(const HermPoly& p, const Mat& a, const Region& region,
                                    const NormBoundCert& nb, const std::string& label = "") {
    require_resolvent_conditions(a, region);
    double measured = operator_norm(apply_poly(p, a));
    double delta = self_commutator_norm(a);
    double bound = std::sqrt(
        to_double(nb.p_max * nb.p_max + nb.eps * nb.p_max) + to_double(nb.c_second) * delta);
    return TrialReport::make(label, "operator norm of p(a,a*)", a, measured, bound);
}

// min-eigenvalue soundness of a certificate: q(a,a*) >= -review_constant(cert) delta
// whenever the constraints are operator-nonnegative.
inline TrialReport check_review_bound(const Certificate& cert, const Rational& constant,
                                      const Mat& a, const std::string& label = "") {
    HermPoly q = real_to_herm(cert.target);
    Mat qa = apply_poly(q, a);
    Mat herm = (qa + qa.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Mat> es(herm);
    double min_eig = es.eigenvalues()(0);
    double delta = self_commutator_norm(a);
    // measured = -min eig, bound = C delta; pass iff min eig >= -C delta - tol
    return TrialReport::make(label, "negative part of q(a,a*)", a, -min_eig,
                             to_double(constant) * delta);
}

// Convenience overload; prefer the precomputed-constant form when running many
// trials against one certificate (the exact constant is the expensive part).
inline TrialReport check_review_bound(const Certificate& cert, const Mat& a,
                                      const std::string& label = "") {
    return check_review_bound(cert, review_constant(cert), a, label);
}

// --- pseudospectrum ----------------------------------------------------------

// Obvious branch: whenever |mu| >= ||p(a,a*)|| + kappa, the resolvent norm is
// at most 1/kappa, with no certificate needed.
inline TrialReport pseudospec_point_obvious(const HermPoly& p, const Mat& a, Cpx mu, double kappa,
                                            const std::string& label = "") {
    Mat pa = apply_poly(p, a);
    double pnorm = operator_norm(pa);
    if (std::abs(mu) + kTol < pnorm + kappa)
        throw HypothesisViolation("mu is not outside the ||p(a,a*)|| + kappa disk");
    Mat shifted = pa - mu * Mat::Identity(a.rows(), a.cols());
    double measured = 1.0 / smallest_singular(shifted);
    return TrialReport::make(label, "resolvent norm at mu", a, measured, 1.0 / kappa);
}

// Certificate branch: q = |p - mu|^2 - kappa^2 + gamma must be strictly
// positive on S; then ||(p(a,a*) - mu)^{-1}|| <= (kappa^2 - gamma - C' delta)^{-1/2}.
inline TrialReport pseudospec_point_certified(const HermPoly& p, const Mat& a,
                                              const Region& region, const GaussRat& mu,
                                              const Rational& kappa, const Rational& gamma,
                                              const GenConfig& cfg = {},
                                              const std::string& label = "") {
    require_resolvent_conditions(a, region);
    HermPoly pm = p - HermPoly(mu);
    HermPoly q = modulus_squared(pm) + HermPoly(GaussRat(gamma - kappa * kappa));
    BivarPoly q_real = herm_to_real(q);
    std::optional<Certificate> radial = generate_radial_certificate(q_real, region);
    Certificate cert = radial ? *radial : generate_certificate(q_real, region, cfg);
    Rational c_prime = review_constant(cert) + commutator_constant(pm.conj(), pm);
    double delta = self_commutator_norm(a);
    double slack = to_double(kappa * kappa - gamma) - to_double(c_prime) * delta;
    if (to_double(gamma) + to_double(c_prime) * delta >= to_double(kappa * kappa) / 2)
        throw DeltaTooLarge("gamma + C' delta exceeds kappa^2 / 2");
    Mat shifted = apply_poly(pm, a);
    double measured = 1.0 / smallest_singular(shifted);
    return TrialReport::make(label, "resolvent norm at mu", a, measured, 1.0 / std::sqrt(slack));
}

struct ContainmentReport {
    long scanned = 0;
    long inside_pseudospec = 0;
    long violations = 0;
    double kappa_prime = 0;
    bool pass = false;
};

// Dense sample of p(S): image of the region's inside grid points.
inline std::vector<Cpx> sample_image(const HermPoly& p, const Region& region, long m = 120) {
    std::vector<Cpx> img;
    for (long i = -m; i <= m; ++i) {
        for (long j = -m; j <= m; ++j) {
            double x = static_cast<double>(i) / m, y = static_cast<double>(j) / m;
            bool inside = true;
            for (const BivarPoly& g : region.constraints) {
                double v = 0;
                for (const auto& [e, c] : g.terms())
                    v += to_double(c) * std::pow(x, static_cast<double>(e.first)) *
                         std::pow(y, static_cast<double>(e.second));
                if (v < 0) {
                    inside = false;
                    break;
                }
            }
            if (!inside) continue;
            GaussRat val = p.eval(GaussRat(Rational(i, m), Rational(j, m)));
            img.emplace_back(to_double(val.re), to_double(val.im));
        }
    }
    return img;
}

// sigma_{kappa'}(p(a,a*)) subset O_kappa(p(S)) on a grid_n x grid_n scan of the
// rectangle enclosing the relevant compact set.
inline ContainmentReport pseudospec_containment(const HermPoly& p, const Mat& a,
                                                const Region& region, double kappa,
                                                double kappa_prime, long grid_n = 200) {
    ContainmentReport rep;
    rep.kappa_prime = kappa_prime;
    std::vector<Cpx> image = sample_image(p, region);
    Mat pa = apply_poly(p, a);
    double r = operator_norm(pa) + kappa + 0.5;
    Mat id = Mat::Identity(a.rows(), a.cols());
    for (long i = 0; i < grid_n; ++i) {
        for (long j = 0; j < grid_n; ++j) {
            Cpx mu(-r + 2 * r * (i + 0.5) / grid_n, -r + 2 * r * (j + 0.5) / grid_n);
            ++rep.scanned;
            double smin = smallest_singular(pa - mu * id);
            if (smin >= kappa_prime) continue;  // mu outside sigma_{kappa'}
            ++rep.inside_pseudospec;
            double dist = std::numeric_limits<double>::infinity();
            for (const Cpx& w : image) dist = std::min(dist, std::abs(mu - w));
            if (dist > kappa + kTol) ++rep.violations;
        }
    }
    rep.pass = rep.violations == 0;
    return rep;
}

// --- structural corollaries --------------------------------------------------

// (i) the imaginary part of p(a,a*); (ii) distance of p(a,a*)*p(a,a*) and
// p(a,a*)p(a,a*)* from 1; (iii) when the gamma bound is < 1, distance to the
// unitary u = p(a,a*)(p(a,a*)*p(a,a*))^{-1/2}.
inline std::vector<TrialReport> structure_defects(const HermPoly& p, const Mat& a,
                                                  const Region& region, const Rational& eps,
                                                  const GenConfig& cfg = {},
                                                  bool require_unitary = false) {
    require_resolvent_conditions(a, region);
    std::vector<TrialReport> reports;
    Mat pa = apply_poly(p, a);
    double delta = self_commutator_norm(a);

    // (i) imaginary part: Im p = -i/2 (p - pbar) is real-valued.
    HermPoly imp = GaussRat(Rational(0), Rational(-1, 2)) * (p - p.conj());
    Mat im_part = (pa - pa.adjoint()) / Cpx(0, 2);
    if (imp.is_zero()) {
        reports.push_back(TrialReport::make("Im p = 0", "norm of Im p(a,a*)", a,
                                            operator_norm(im_part), 0.0));
    } else {
        NormBoundCert nb = make_norm_bound_cert(imp, region, eps, cfg);
        reports.push_back(check_norm_bound(imp, a, region, nb, "imaginary part"));
        reports.back().quantity = "norm of Im p(a,a*)";
        reports.back().measured = operator_norm(im_part);
        reports.back().margin = reports.back().bound - reports.back().measured;
        reports.back().pass = reports.back().measured <= reports.back().bound + kTol;
    }

    // (ii) unitary defect: f = |p|^2 - 1 is real-valued; bound ||f(a,a*)||,
    // then regroup to the two operator products.
    HermPoly f = modulus_squared(p) - HermPoly(GaussRat(1));
    HermPoly pbar = p.conj();
    Rational regroup = std::max(commutator_constant(pbar, p), commutator_constant(p, pbar));
    double gamma;
    if (f.is_zero()) {
        gamma = to_double(regroup) * delta;
    } else {
        NormBoundCert nbf = make_norm_bound_cert(f, region, eps, cfg);
        gamma = std::sqrt(to_double(nbf.p_max * nbf.p_max + nbf.eps * nbf.p_max) +
                          to_double(nbf.c_second) * delta) +
                to_double(regroup) * delta;
    }
    Mat id = Mat::Identity(a.rows(), a.cols());
    reports.push_back(TrialReport::make("unitary defect p*p", "norm of p(a,a*)*p(a,a*) - 1", a,
                                        operator_norm(pa.adjoint() * pa - id), gamma));
    reports.push_back(TrialReport::make("unitary defect pp*", "norm of p(a,a*)p(a,a*)* - 1", a,
                                        operator_norm(pa * pa.adjoint() - id), gamma));

    // (iii) nearest-unitary distance, valid only for gamma < 1.
    if (gamma >= 1) {
        if (require_unitary) throw GammaTooLarge("unitary-part bound requires gamma < 1");
        TrialReport skip = TrialReport::make("unitary part skipped (gamma >= 1)",
                                             "distance to unitary", a, 0.0, 0.0);
        skip.pass = false;
        reports.push_back(skip);
        return reports;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(pa.adjoint() * pa);
    Eigen::VectorXd ev = es.eigenvalues();
    Eigen::VectorXd inv_sqrt(ev.size());
    for (long i = 0; i < ev.size(); ++i) {
        if (ev(i) <= 0) throw GammaTooLarge("p(a,a*) is singular; no polar unitary part");
        inv_sqrt(i) = 1.0 / std::sqrt(ev(i));
    }
    Mat u = pa * (es.eigenvectors() * inv_sqrt.asDiagonal() * es.eigenvectors().adjoint());
    double dist_bound = std::sqrt(1 + gamma) * (1 / std::sqrt(1 - gamma) - 1);
    reports.push_back(TrialReport::make("polar unitary part", "distance to unitary", a,
                                        operator_norm(pa - u), dist_bound));
    reports.push_back(TrialReport::make("polar unitary part", "norm of u*u - 1", a,
                                        operator_norm(u.adjoint() * u - id), 0.0));
    return reports;
}

// Almost-multiplicativity: ||p(a,a*)q(a,a*) - (pq)(a,a*)|| <= C(p,q) delta.
inline TrialReport appr_mult_check(const HermPoly& p, const HermPoly& q, const Mat& a,
                                   const std::string& label = "") {
    double measured = operator_norm(apply_poly(p, a) * apply_poly(q, a) - apply_poly(p * q, a));
    double delta = self_commutator_norm(a);
    double bound = to_double(commutator_constant(p, q)) * delta;
    return TrialReport::make(label, "multiplication defect", a, measured, bound);
}

// --- the no-uniform-constant demonstration ----------------------------------

struct R32Report {
    long truncation = 0;      // J
    double norm_pa = 0;       // ||p(a,a*)|| = sqrt(delta)/eps exactly
    double p_max_estimate = 0;
    double ratio = 0;         // norm_pa / p_max_estimate
    TrialReport norm_trial;
    TrialReport pmax_trial;
};

// p = (z + z^2 q)/eps with q = -zbar sum_{j<=J} (1-zzbar)^j, so that
// p(z,zbar) = z (1-zzbar)^{J+1} / eps and p(a,a*) = a/eps on the 2x2 matrix
// a = [[0, sqrt(delta)],[0,0]] (a^2 = 0 kills every z^{2+s} zbar^t monomial).
inline R32Report counterexample_r32(double delta, double eps) {
    if (!(delta > 0 && delta < 1) || !(eps > 0 && eps < 1))
        throw HypothesisViolation("need 0 < delta < 1 and 0 < eps < 1");
    R32Report rep;
    // least J with (1 - eps^2)^{J+1} <= eps: truncation error of -1/z on |z| >= eps
    long J = 0;
    while (std::pow(1 - eps * eps, static_cast<double>(J + 1)) > eps) ++J;
    rep.truncation = J;

    Rational reps(eps);  // exact binary value of eps
    HermPoly p;  // z (1 - zzbar)^{J+1} / eps = sum_i binom(J+1,i) (-1)^i z^{i+1} zbar^i / eps
    Integer binom = 1;
    for (long i = 0; i <= J + 1; ++i) {
        Rational coeff = Rational(binom) / reps;
        if (i % 2 == 1) coeff = -coeff;
        p.add_term(i + 1, i, GaussRat(coeff));
        binom = binom * (J + 1 - i) / (i + 1);
    }

    Mat a = gen_almost_normal({2, "remark-r32", delta, 0, nullptr});
    rep.norm_pa = operator_norm(apply_poly(p, a));
    double expected = std::sqrt(delta) / eps;
    rep.norm_trial = TrialReport::make("closed-form norm", "norm of p(a,a*)", a,
                                       std::abs(rep.norm_pa - expected), 0.0);

    // |p| is radial: r (1-r^2)^{J+1} / eps; sample densely over [0,1].
    double pmax = 0;
    const long samples = 200000;
    for (long i = 0; i <= samples; ++i) {
        double r = static_cast<double>(i) / samples;
        pmax = std::max(pmax, r * std::pow(1 - r * r, static_cast<double>(J + 1)) / eps);
    }
    rep.p_max_estimate = pmax;
    rep.ratio = rep.norm_pa / pmax;
    rep.pmax_trial = TrialReport::make("max of |p| over the disk", "p_max estimate", a, pmax,
                                       2 + eps * eps + 1e-2);
    return rep;
}

}  // namespace pscert::harness

#endif  // PSCERT_HARNESS_HPP
