#ifndef PSCERT_CERTGEN_HPP
#define PSCERT_CERTGEN_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pscert/bivar.hpp"
#include "pscert/bounds.hpp"
#include "pscert/certificate.hpp"
#include "pscert/errors.hpp"
#include "pscert/quadhom.hpp"
#include "pscert/region.hpp"

namespace pscert {

struct GenConfig {
    std::string mode = "search";
    long eval_cap = 10'000'000;        // grid evaluations per certified bound
    long n_cap = 500;                  // largest admissible Polya exponent
    unsigned long term_budget = 1'000'000;  // gamma-substitution raw terms
};

struct HoleTerms {
    Rational c;  // weight of every hole term
    long k = 0;  // squares are (1-g_i)^k
};

struct HoleReduction {
    BivarPoly phat;
    HoleTerms ht;
    Rational pstar_box;  // certified lower bound of phat on [-1,1]^2
};

namespace detail {

inline double eval_d(const BivarPoly& p, double x1, double x2) {
    double acc = 0;
    for (const auto& [e, c] : p.terms())
        acc += c.get_d() * std::pow(x1, static_cast<int>(e.first)) *
               std::pow(x2, static_cast<int>(e.second));
    return acc;
}

inline double eval_d(const QuadHomPoly& p, const std::array<double, 4>& y) {
    double acc = 0;
    for (const auto& [e, c] : p.terms()) {
        double t = c.get_d();
        for (size_t i = 0; i < 4; ++i) t *= std::pow(y[i], static_cast<int>(e[i]));
        acc += t;
    }
    return acc;
}

// c * sum_i (1-g_i)^(2k) g_i over the region's (scaled) constraints.
inline BivarPoly hole_term_sum(const Region& region, const Rational& c, long k) {
    BivarPoly sum;
    if (c == 0) return sum;
    for (const BivarPoly& g : region.constraints) {
        BivarPoly one_minus = BivarPoly(Rational(1)) - g;
        sum += one_minus.pow(static_cast<unsigned long>(2 * k)) * g;
    }
    return c * sum;
}

// (y1+y2+y3+y4)^(dh-2) * (y1+y2-y3-y4)^2, the phi-kernel correction factor.
inline QuadHomPoly correction_kernel(long dh) {
    QuadHomPoly w = QuadHomPoly::var(0) + QuadHomPoly::var(1) - QuadHomPoly::var(2) -
                    QuadHomPoly::var(3);
    return QuadHomPoly::sum_of_vars().pow(static_cast<unsigned long>(dh - 2)) * (w * w);
}

inline Integer binomial(long n, long k) {
    Integer r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - i + 1;
        r /= i;
    }
    return r;
}

// Deterministic quasi-random simplex points: three sorted uniforms from a
// fixed LCG, successive differences.
class SimplexSampler {
  public:
    explicit SimplexSampler(std::uint64_t seed = 0x5c3b1e4du) : state_(seed) {}
    std::array<double, 4> next() {
        double u[3] = {uniform(), uniform(), uniform()};
        if (u[0] > u[1]) std::swap(u[0], u[1]);
        if (u[1] > u[2]) std::swap(u[1], u[2]);
        if (u[0] > u[1]) std::swap(u[0], u[1]);
        return {u[0], u[1] - u[0], u[2] - u[1], 1.0 - u[2]};
    }

  private:
    double uniform() {
        state_ = state_ * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<double>(state_ >> 11) * (1.0 / 9007199254740992.0);
    }
    std::uint64_t state_;
};

}  // namespace detail

// Rational upper bound of the hole-term coefficient c0 d^2 2^(d-1/2) ||p||.
inline Rational hole_term_coefficient(const BivarPoly& p, const Region& region) {
    long d = p.degree();
    if (d <= 0) return 0;
    return region.c0_bound * Rational(d * d) *
           pow_half_upper(2, static_cast<unsigned long>(d)) * poly_norm(p);
}

// Subtracts c * sum (1-g_i)^(2k) g_i from p so that the remainder phat is at
// least pstar/2 on the whole box [-1,1]^2. Closed-form constants, or the
// smallest (k, c) ladder rung whose remainder certifies.
inline HoleReduction hole_reduction(const BivarPoly& p, const Region& region,
                                    const Rational& pstar, const GenConfig& cfg) {
    if (pstar <= 0)
        throw NonpositiveLowerBound("hole reduction needs a positive certified minimum");
    long m = static_cast<long>(region.constraint_count());
    if (cfg.mode == "paper") {
        Rational c = hole_term_coefficient(p, region);
        long k = 0;
        if (c > 0) {
            // least k with (2k+1) pstar >= 2 m c
            Rational need = (Rational(2 * m) * c / pstar - 1) / 2;
            Integer ki = ceil_int(need);
            if (ki > 0) k = ki.get_si();
        }
        return {p - detail::hole_term_sum(region, c, k), {c, k}, pstar / 2};
    }

    Rational threshold = pstar / 2;
    double thr_d = threshold.get_d() * 0.999;
    // Rung order: k = 0 with growing c, then c = 0 (no hole terms at all),
    // then higher k. A constraint-free certificate beats raising k, which
    // doubles degrees; within a k column, the smallest sufficient c wins
    // (higher columns admit fractional c — small c keeps the lift's norm,
    // and with it the Polya exponent, low).
    std::vector<std::pair<long, Rational>> rungs;
    for (long c = 1; c <= 1024; c *= 2) rungs.emplace_back(0, Rational(c));
    rungs.emplace_back(0, Rational(0));
    for (long k = 1; k <= 12; ++k)
        for (Rational c(1, 32); c <= 1024; c *= 2) rungs.emplace_back(k, c);
    auto float_min = [](const BivarPoly& phat) {
        double fmin = detail::eval_d(phat, -1, -1);
        for (int i = -50; i <= 50; ++i)
            for (int j = -50; j <= 50; ++j)
                fmin = std::min(fmin, detail::eval_d(phat, i / 50.0, j / 50.0));
        return fmin;
    };
    for (const auto& [k, c] : rungs) {
        BivarPoly phat = p - detail::hole_term_sum(region, c, k);
        // cheap float screen before the certified grid
        if (float_min(phat) < thr_d) continue;
        try {
            CertifiedBound b = certified_min(phat, nullptr, pstar / 4, cfg.eval_cap);
            if (b.value >= threshold) return {phat, {c, k}, b.value};
        } catch (const BudgetExceeded&) {
            // this rung needs a finer grid than the budget allows; move on
        }
    }
    // No rung certifies pstar/2, but any positive certified box minimum keeps
    // the rest of the pipeline sound (the threshold is only the closed-form
    // target). Revisit the rungs ordered by their sampled minimum and take
    // the first that certifies positive.
    std::vector<std::pair<double, size_t>> order;
    for (size_t r = 0; r < rungs.size(); ++r) {
        BivarPoly phat = p - detail::hole_term_sum(region, rungs[r].second, rungs[r].first);
        double fmin = float_min(phat);
        if (fmin > 0) order.emplace_back(fmin, r);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    if (order.size() > 8) order.resize(8);
    for (const auto& [fmin, r] : order) {
        const auto& [k, c] = rungs[r];
        BivarPoly phat = p - detail::hole_term_sum(region, c, k);
        try {
            CertifiedBound b = certified_min(phat, nullptr, pstar / 4, cfg.eval_cap);
            if (b.value > 0) return {phat, {c, k}, b.value};
        } catch (const BudgetExceeded&) {
        }
    }
    throw SearchExhausted("no (k, c) rung kept the reduced polynomial above pstar/2");
}

// Homogeneous 4-variable lift: substituting y_i := gamma_i(x) recovers phat.
inline QuadHomPoly square_lift(const BivarPoly& phat) {
    long dh = std::max<long>(phat.degree(), 0);
    QuadHomPoly u = QuadHomPoly::var(0) - QuadHomPoly::var(1);
    QuadHomPoly v = QuadHomPoly::var(2) - QuadHomPoly::var(3);
    QuadHomPoly s = QuadHomPoly::sum_of_vars();
    std::vector<QuadHomPoly> up(static_cast<size_t>(dh) + 1), vp = up, sp = up;
    up[0] = vp[0] = sp[0] = QuadHomPoly(Rational(1));
    for (long i = 1; i <= dh; ++i) {
        up[static_cast<size_t>(i)] = up[static_cast<size_t>(i - 1)] * u;
        vp[static_cast<size_t>(i)] = vp[static_cast<size_t>(i - 1)] * v;
        sp[static_cast<size_t>(i)] = sp[static_cast<size_t>(i - 1)] * s;
    }
    QuadHomPoly r;
    for (const auto& [e, c] : phat.terms())
        r += (pow_rat(Rational(2), static_cast<unsigned long>(e.first + e.second)) * c) *
             (up[static_cast<size_t>(e.first)] * vp[static_cast<size_t>(e.second)] *
              sp[static_cast<size_t>(dh - e.first - e.second)]);
    return r;
}

// Closed-form kernel correction weight 2^(4 dh - 4) dh^4 ||p1||^2 / pstar_box.
inline Rational correction_weight(const QuadHomPoly& p1, const Rational& pstar_box) {
    long dh = p1.degree();
    Rational nrm = poly_norm(p1);
    return pow_rat(Rational(2), static_cast<unsigned long>(4 * dh - 4)) *
           pow_rat(Rational(dh), 4) * nrm * nrm / pstar_box;
}

// p2 = p1 + A * (sum y)^(dh-2) (y1+y2-y3-y4)^2 with the closed-form A; the
// added term is in the kernel of the gamma-substitution, and the result is
// at least pstar_box/2 on the simplex.
inline QuadHomPoly add_correction(const QuadHomPoly& p1, const Rational& pstar_box) {
    if (pstar_box <= 0)
        throw NonpositiveLowerBound("correction needs a positive box lower bound");
    long dh = p1.degree();
    if (dh < 2) return p1;
    return p1 + correction_weight(p1, pstar_box) * detail::correction_kernel(dh);
}

// Minimal-weight variant: samples the simplex to estimate the smallest kernel
// weight keeping p2 above ~3/4 pstar_box, instead of the closed-form weight
// (which inflates the Polya exponent far beyond reach). Soundness does not
// rest on the estimate: the Polya expansion and the final identity check do.
inline std::pair<QuadHomPoly, Rational> add_correction_search(const QuadHomPoly& p1,
                                                              const Rational& pstar_box) {
    if (pstar_box <= 0)
        throw NonpositiveLowerBound("correction needs a positive box lower bound");
    long dh = p1.degree();
    if (dh < 2) return {p1, 0};
    double target = pstar_box.get_d() * 0.8;
    detail::SimplexSampler sampler;
    double need = 0;
    for (int t = 0; t < 30000; ++t) {
        std::array<double, 4> y = sampler.next();
        double v = detail::eval_d(p1, y);
        if (v >= target) continue;
        double w = y[0] + y[1] - y[2] - y[3];
        double w2 = w * w;
        if (w2 < 1e-12) continue;  // near the kernel's zero set p1 is already large
        need = std::max(need, (target - v) / w2);
    }
    if (need == 0) return {p1, 0};
    Rational a(ceil_int(Rational(need * 1.25) * 1024), 1024);
    a.canonicalize();
    return {p1 + a * detail::correction_kernel(dh), a};
}

struct PositiveComb {
    long n = 0;                 // Polya exponent
    QuadHomPoly expanded;       // (sum of mask vars)^n * p2
    std::array<bool, 4> mask{}; // multiplier variables
};

struct PolyaOptions {
    bool strict = false;  // require every mask-supported monomial present and > 0
    std::optional<std::array<bool, 4>> mask;  // defaults to the support of p2
};

// Least admissible exponent from the d(d-1)||f|| / (2 f_*) - d bound.
inline long polya_prop_exponent(const QuadHomPoly& f, const Rational& fstar) {
    if (fstar <= 0) throw NonpositiveLowerBound("Polya bound needs a positive simplex minimum");
    long d = std::max<long>(f.degree(), 0);
    Rational bound = Rational(d * (d - 1)) * poly_norm(f) / (2 * fstar) - d;
    Integer n = floor_int(bound) + 1;
    return n > 0 ? n.get_si() : 0;
}

// Least admissible exponent from the 2 dh (dh-1) ||p2|| / pstar_box - dh bound
// (the larger of the two variants; see polya_prop_exponent for the other).
inline Rational polya_pipeline_bound(const QuadHomPoly& p2, const Rational& pstar_box) {
    long dh = std::max<long>(p2.degree(), 0);
    return Rational(2 * dh * (dh - 1)) * poly_norm(p2) / pstar_box - dh;
}

inline PositiveComb polya_expand(const QuadHomPoly& p2, const Rational& pstar_box,
                                 const GenConfig& cfg, const PolyaOptions& opt = {}) {
    PositiveComb out;
    out.mask = opt.mask ? *opt.mask : p2.support_vars();
    if (p2.is_zero()) return out;
    long mask_size = 0;
    for (bool b : out.mask) mask_size += b;

    if (cfg.mode == "paper") {
        if (pstar_box <= 0)
            throw NonpositiveLowerBound("Polya bound needs a positive box lower bound");
        Integer n = floor_int(polya_pipeline_bound(p2, pstar_box)) + 1;
        if (n < 0) n = 0;
        if (n > cfg.n_cap)
            throw BudgetExceeded("closed-form Polya exponent " + n.get_str() +
                                 " exceeds the exponent cap");
        out.n = n.get_si();
        QuadHomPoly mult;
        for (int i = 0; i < 4; ++i)
            if (out.mask[static_cast<size_t>(i)]) mult += QuadHomPoly::var(i);
        out.expanded = mask_size == 0
                           ? p2
                           : mult.pow(static_cast<unsigned long>(out.n)) * p2;
        if (out.expanded.has_negative_coeff())
            throw NegativeCoefficientAtBound(
                "expansion at the closed-form exponent has a negative coefficient");
        return out;
    }

    QuadHomPoly cur = p2;
    long d = std::max<long>(p2.degree(), 0);
    for (long n = 0; n <= cfg.n_cap; ++n) {
        bool ok = !cur.has_negative_coeff();
        if (ok && opt.strict) {
            // every degree-(n+d) monomial in the mask variables, all positive
            Integer expect = detail::binomial(n + d + mask_size - 1, mask_size - 1);
            ok = Integer(static_cast<long>(cur.term_count())) == expect;
        }
        if (ok) {
            out.n = n;
            out.expanded = cur;
            return out;
        }
        if (mask_size == 0) break;
        cur = cur.mul_by_var_sum(out.mask);
    }
    throw SearchExhausted("no admissible Polya exponent within the cap");
}

// Certified statement "the closed-form pipeline exponent exceeds threshold"
// without expanding the (possibly astronomically large) lift. Chain:
// max over the simplex of p1 is >= pstar_box (attained over V), any
// homogeneous f satisfies max_simplex f <= (#monomials) ||f||, so
// ||p1|| >= pstar_box / C; the corrected polynomial evaluated at e_1 is
// p1(e_1) + A >= A - sum_i |phat_i0| 2^i, which lower-bounds ||p2||.
inline bool paper_polya_exceeds(const BivarPoly& phat, const Rational& pstar_box,
                                const Rational& threshold) {
    long dh = phat.degree();
    if (dh < 2) return false;
    Rational ccount(detail::binomial(dh + 3, 3));
    Rational nrm1_lb = pstar_box / ccount;
    Rational a_lb = pow_rat(Rational(2), static_cast<unsigned long>(4 * dh - 4)) *
                    pow_rat(Rational(dh), 4) * nrm1_lb * nrm1_lb / pstar_box;
    Rational corner_slack = 0;  // |p1(e_1)| <= sum_i |phat_i0| 2^i
    for (const auto& [e, c] : phat.terms())
        if (e.second == 0)
            corner_slack += abs(c) * pow_rat(Rational(2), static_cast<unsigned long>(e.first));
    if (a_lb <= corner_slack) return false;
    Rational n_lb = Rational(2 * dh * (dh - 1)) * (a_lb - corner_slack) / pstar_box - dh;
    return n_lb > threshold;
}

// Rewrites each monomial b * gamma1^a1 .. gamma4^a4 through the identity
// 8 gamma = (1 +- x)^2 + x_other^2 + g0, yielding weighted squares with an
// optional single g0 factor. g0 must be the unscaled disk constraint.
inline std::vector<CertTerm> gamma_substitute(const PositiveComb& comb, const Region& region,
                                              unsigned long term_budget = 1'000'000) {
    if (region.constraints.empty() || !(region.constraints[0] == detail::disk_constraint()))
        throw HypothesisViolation("gamma substitution requires the unscaled disk constraint");

    // key: exponents of (1+x1), (1-x1), (1+x2), (1-x2) inside the square,
    // then of x2 and x1, then the total g0 power.
    using Key = std::array<long, 7>;
    std::map<Key, Rational> merged;

    for (const auto& [alpha, b] : comb.expanded.terms()) {
        long tot = alpha[0] + alpha[1] + alpha[2] + alpha[3];
        Rational base = b / pow_rat(Rational(8), static_cast<unsigned long>(tot));
        // per gamma factor, distribute alpha[t] among square / cross / g0
        struct Frame {
            long a, w;
        };
        std::array<Frame, 4> pick{};
        auto recurse = [&](auto&& self, size_t t, const Rational& coef) -> void {
            if (t == 4) {
                if (merged.size() > term_budget)
                    throw TermBudgetExceeded(
                        "gamma substitution exceeded the term budget; lower the degree or "
                        "use search mode");
                Key key{pick[0].a, pick[1].a, pick[2].a, pick[3].a,
                        pick[0].w + pick[1].w, pick[2].w + pick[3].w, 0};
                for (size_t i = 0; i < 4; ++i)
                    key[6] += alpha[i] - pick[i].a - pick[i].w;
                merged[key] += coef;
                return;
            }
            for (long a = 0; a <= alpha[t]; ++a) {
                Integer ca = detail::binomial(alpha[t], a);
                for (long w = 0; w <= alpha[t] - a; ++w) {
                    pick[t] = {a, w};
                    Rational mult(ca * detail::binomial(alpha[t] - a, w));
                    self(self, t + 1, coef * mult);
                }
            }
        };
        recurse(recurse, 0, base);
    }

    // expand each distinct square once, then merge by (square, constraint)
    BivarPoly g0 = detail::disk_constraint();
    BivarPoly splus1 = BivarPoly(Rational(1)) + BivarPoly::x1();
    BivarPoly sminus1 = BivarPoly(Rational(1)) - BivarPoly::x1();
    BivarPoly splus2 = BivarPoly(Rational(1)) + BivarPoly::x2();
    BivarPoly sminus2 = BivarPoly(Rational(1)) - BivarPoly::x2();
    std::map<std::pair<BivarPoly::Map, int>, Rational> final_merge;
    std::map<std::pair<BivarPoly::Map, int>, BivarPoly> squares;
    for (const auto& [key, w] : merged) {
        if (w == 0) continue;
        BivarPoly sq = splus1.pow(static_cast<unsigned long>(key[0])) *
                       sminus1.pow(static_cast<unsigned long>(key[1])) *
                       splus2.pow(static_cast<unsigned long>(key[2])) *
                       sminus2.pow(static_cast<unsigned long>(key[3])) *
                       BivarPoly::monomial(1, key[5], key[4]) *
                       g0.pow(static_cast<unsigned long>(key[6] / 2));
        int constraint = key[6] % 2 ? 0 : -1;
        auto fk = std::make_pair(sq.terms(), constraint);
        final_merge[fk] += w;
        squares.emplace(fk, sq);
    }
    std::vector<CertTerm> terms;
    for (const auto& [fk, w] : final_merge)
        if (w != 0) terms.push_back({w, squares.at(fk), fk.second});
    return terms;
}

// Image of the lift under y_i -> gamma_i(x); used for kernel checks and the
// generator's self-verification.
inline BivarPoly gamma_image(const QuadHomPoly& p) {
    std::array<BivarPoly, 4> g{
        Rational(1, 4) * (BivarPoly(Rational(1)) + BivarPoly::x1()),
        Rational(1, 4) * (BivarPoly(Rational(1)) - BivarPoly::x1()),
        Rational(1, 4) * (BivarPoly(Rational(1)) + BivarPoly::x2()),
        Rational(1, 4) * (BivarPoly(Rational(1)) - BivarPoly::x2())};
    BivarPoly r;
    for (const auto& [e, c] : p.terms()) {
        BivarPoly t(c);
        for (size_t i = 0; i < 4; ++i)
            t = t * g[i].pow(static_cast<unsigned long>(e[i]));
        r += t;
    }
    return r;
}

namespace detail {

inline Certificate attempt_certificate(const BivarPoly& p, const Region& region,
                                       const GenConfig& cfg, const Rational& pstar,
                                       bool allow_bumps = true) {
    HoleReduction hr = hole_reduction(p, region, pstar, cfg);
    // The closed-form kernel weight can push the Polya exponent far past any
    // cap; when that is certifiable from norms alone, skip the (potentially
    // enormous) lift and report the overflow directly.
    if (cfg.mode == "paper" && paper_polya_exceeds(hr.phat, hr.pstar_box, Rational(cfg.n_cap)))
        throw BudgetExceeded("closed-form Polya exponent exceeds the exponent cap");
    QuadHomPoly p1 = square_lift(hr.phat);
    QuadHomPoly p2;
    Rational corr;
    PositiveComb comb;
    PolyaOptions popt;
    popt.mask = {true, true, true, true};  // the multiplier must map to 1 under phi
    if (cfg.mode == "paper") {
        p2 = add_correction(p1, hr.pstar_box);
        corr = p1.degree() < 2 ? Rational(0) : correction_weight(p1, hr.pstar_box);
        comb = polya_expand(p2, hr.pstar_box, cfg, popt);
    } else {
        std::tie(p2, corr) = add_correction_search(p1, hr.pstar_box);
        long dh = p1.degree();
        // keep the gamma substitution within reach: cap the Polya search so
        // the positive combination's degree stays substitutable; the caller
        // retries with a weaker pstar, which admits smaller hole coefficients
        // and with them a far smaller Polya exponent
        constexpr long comb_degree_cap = 14;
        if (dh > comb_degree_cap)
            throw TermBudgetExceeded("lift degree too high for substitution");
        GenConfig capped = cfg;
        capped.n_cap = std::min(cfg.n_cap, comb_degree_cap - std::max(dh, 0L));
        for (int bump = 0;; ++bump) {
            try {
                comb = polya_expand(p2, hr.pstar_box, capped, popt);
                break;
            } catch (const SearchExhausted&) {
                if (!allow_bumps || bump >= 4 || dh < 2) throw;
                corr = corr > 0 ? 4 * corr : std::max(hr.pstar_box, Rational(1));
                p2 = p1 + corr * detail::correction_kernel(dh);
            }
        }
    }

    std::vector<CertTerm> terms = gamma_substitute(comb, region, cfg.term_budget);
    if (hr.ht.c > 0)
        for (size_t i = 0; i < region.constraints.size(); ++i) {
            BivarPoly one_minus = BivarPoly(Rational(1)) - region.constraints[i];
            terms.push_back({hr.ht.c, one_minus.pow(static_cast<unsigned long>(hr.ht.k)),
                             static_cast<int>(i)});
        }

    Certificate cert;
    cert.target = p;
    cert.holes = region.holes;
    cert.scales = region.scales;
    cert.params = {cfg.mode, hr.ht.c, hr.ht.k, comb.n, corr, pstar, hr.pstar_box};
    cert.terms = terms;

    BivarPoly total;
    for (const CertTerm& t : cert.terms) {
        BivarPoly part = t.weight * (t.square * t.square);
        if (t.constraint >= 0) part = part * region.constraints[static_cast<size_t>(t.constraint)];
        total += part;
    }
    if (!(total == p)) throw SelfVerificationFailed("generated terms do not re-expand to the target");
    return cert;
}

}  // namespace detail

// Direct certificate for radial targets q(x) = f(x1^2 + x2^2) positive on the
// closed unit disk, bypassing the homogenization pipeline: expand f in the
// Bernstein basis of [0,1], raising the degree until every coefficient is
// nonnegative (guaranteed to terminate for f strictly positive on [0,1]).
// Each basis element s^k (1-s)^(D-k) splits into weighted squares
// (x1^a x2^(k-a) g0^(b/2))^2 — times g0 once more when b = D-k is odd. The
// representation uses only the disk constraint, so it is valid on any region.
// Returns nullopt when q is not radial or the degree cap is hit.
inline std::optional<Certificate> generate_radial_certificate(const BivarPoly& q,
                                                              const Region& region,
                                                              long degree_cap = 64) {
    long d = q.degree();
    if (d < 0) return std::nullopt;
    std::vector<Rational> f(static_cast<size_t>(d / 2) + 1);
    for (size_t j = 0; j < f.size(); ++j) f[j] = q.coeff(2 * static_cast<long>(j), 0);
    {
        BivarPoly s = BivarPoly::monomial(1, 2, 0) + BivarPoly::monomial(1, 0, 2);
        BivarPoly acc, sp{Rational(1)};
        for (size_t j = 0; j < f.size(); ++j) {
            acc += f[j] * sp;
            sp = sp * s;
        }
        if (!(acc == q)) return std::nullopt;
    }
    long n = static_cast<long>(f.size()) - 1;
    for (long D = n; D <= degree_cap; ++D) {
        std::vector<Rational> gamma(static_cast<size_t>(D) + 1);
        Rational gmin;
        bool ok = true;
        for (long k = 0; k <= D && ok; ++k) {
            Rational g = 0;
            for (long i = 0; i <= std::min(k, n); ++i)
                g += f[static_cast<size_t>(i)] * Rational(detail::binomial(k, i)) /
                     Rational(detail::binomial(D, i));
            if (g < 0) ok = false;
            gamma[static_cast<size_t>(k)] = g;
            if (k == 0 || g < gmin) gmin = g;
        }
        if (!ok) continue;
        // q(x) = sum_k gamma_k binom(D,k) s^k g0^(D-k) with every gamma_k >= 0
        // and q >= gmin on the disk (the basis sums to 1).
        Certificate cert;
        cert.target = q;
        cert.holes = region.holes;
        cert.scales = region.scales;
        cert.params = {"radial", Rational(0), 0, D, Rational(0), gmin, gmin};
        BivarPoly g0 = detail::disk_constraint();
        std::vector<BivarPoly> g0p(static_cast<size_t>(D / 2) + 1);
        g0p[0] = BivarPoly(Rational(1));
        for (size_t i = 1; i < g0p.size(); ++i) g0p[i] = g0p[i - 1] * g0;
        for (long k = 0; k <= D; ++k) {
            if (gamma[static_cast<size_t>(k)] == 0) continue;
            long b = D - k;
            Rational wk = gamma[static_cast<size_t>(k)] * Rational(detail::binomial(D, k));
            for (long a = 0; a <= k; ++a) {
                BivarPoly sq = BivarPoly::monomial(1, a, k - a) * g0p[static_cast<size_t>(b / 2)];
                cert.terms.push_back(
                    {wk * Rational(detail::binomial(k, a)), sq, b % 2 == 1 ? 0 : -1});
            }
        }
        BivarPoly total;
        for (const CertTerm& t : cert.terms) {
            BivarPoly part = t.weight * (t.square * t.square);
            if (t.constraint == 0) part = part * g0;
            total += part;
        }
        if (!(total == q))
            throw SelfVerificationFailed("radial terms do not re-expand to the target");
        return cert;
    }

    // Disk-wide Bernstein expansion failed. When the region is an annulus
    // (single hole centered at the origin), expand instead over the radial
    // range [a, 1] with a = R^2, in the basis (s-a)^k (1-s)^(D-k). Even
    // powers of either factor fold into the square; an odd power of (s-a)
    // attaches the hole constraint, an odd power of (1-s) the disk
    // constraint, and the odd-odd case splits exactly via
    //   (s-a)(1-s) (1-a) = (1-s)^2 (s-a) + (s-a)^2 (1-s).
    if (region.holes.size() != 1) return std::nullopt;
    const Hole& h = region.holes[0];
    if (h.center.first != 0 || h.center.second != 0 || h.radius >= 1) return std::nullopt;
    Rational a = h.radius * h.radius;
    Rational width = 1 - a;
    Rational scale1 = region.scales.at(1);
    // Coefficients of f in powers of t = (s-a)/(1-a).
    std::vector<Rational> ft(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Rational b = 0;
        Rational apow = 1;
        for (size_t j = i; j < f.size(); ++j) {
            b += f[j] * Rational(detail::binomial(static_cast<long>(j), static_cast<long>(i))) *
                 apow;
            apow *= a;
        }
        Rational wpow = 1;
        for (size_t m = 0; m < i; ++m) wpow *= width;
        ft[i] = b * wpow;
    }
    for (long D = n; D <= degree_cap; ++D) {
        std::vector<Rational> gamma(static_cast<size_t>(D) + 1);
        Rational gmin;
        bool ok = true;
        for (long k = 0; k <= D && ok; ++k) {
            Rational g = 0;
            for (long i = 0; i <= std::min(k, n); ++i)
                g += ft[static_cast<size_t>(i)] * Rational(detail::binomial(k, i)) /
                     Rational(detail::binomial(D, i));
            if (g < 0) ok = false;
            gamma[static_cast<size_t>(k)] = g;
            if (k == 0 || g < gmin) gmin = g;
        }
        if (!ok) continue;
        Certificate cert;
        cert.target = q;
        cert.holes = region.holes;
        cert.scales = region.scales;
        cert.params = {"radial", Rational(0), 0, D, Rational(0), gmin, gmin};
        BivarPoly sp =
            BivarPoly::monomial(1, 2, 0) + BivarPoly::monomial(1, 0, 2) + BivarPoly(-a);
        BivarPoly g0 = detail::disk_constraint();
        std::vector<BivarPoly> spp(static_cast<size_t>(D) / 2 + 2), g0p(spp.size());
        spp[0] = BivarPoly(Rational(1));
        g0p[0] = BivarPoly(Rational(1));
        for (size_t i = 1; i < spp.size(); ++i) {
            spp[i] = spp[i - 1] * sp;
            g0p[i] = g0p[i - 1] * g0;
        }
        Rational wD = 1;
        for (long m = 0; m < D; ++m) wD *= width;
        for (long k = 0; k <= D; ++k) {
            if (gamma[static_cast<size_t>(k)] == 0) continue;
            long b = D - k;
            Rational w = gamma[static_cast<size_t>(k)] * Rational(detail::binomial(D, k)) / wD;
            auto sq = [&](long ke, long be) {
                return spp[static_cast<size_t>(ke)] * g0p[static_cast<size_t>(be)];
            };
            if (k % 2 == 0 && b % 2 == 0) {
                cert.terms.push_back({w, sq(k / 2, b / 2), -1});
            } else if (k % 2 == 1 && b % 2 == 0) {
                cert.terms.push_back({w / scale1, sq((k - 1) / 2, b / 2), 1});
            } else if (k % 2 == 0) {
                cert.terms.push_back({w, sq(k / 2, (b - 1) / 2), 0});
            } else {
                cert.terms.push_back({w / (width * scale1), sq((k - 1) / 2, (b + 1) / 2), 1});
                cert.terms.push_back({w / width, sq((k + 1) / 2, (b - 1) / 2), 0});
            }
        }
        BivarPoly total;
        for (const CertTerm& t : cert.terms) {
            BivarPoly part = t.weight * (t.square * t.square);
            if (t.constraint >= 0)
                part = part * region.constraints[static_cast<size_t>(t.constraint)];
            total += part;
        }
        if (!(total == q))
            throw SelfVerificationFailed("radial terms do not re-expand to the target");
        return cert;
    }
    return std::nullopt;
}

inline Certificate generate_certificate(const BivarPoly& p, const Region& region,
                                        const GenConfig& cfg) {
    // certified positive minimum over the region, coarse-to-fine gap ladder
    Rational scale = poly_norm(p);
    if (scale == 0) throw NonpositiveLowerBound("the zero polynomial is not positive");
    Rational pstar;
    bool have_pstar = false;
    Rational gap = scale / 100;
    for (int round = 0; round < 4 && !have_pstar; ++round, gap /= 4) {
        try {
            CertifiedBound b = certified_min(p, &region, gap, cfg.eval_cap);
            if (b.value > 0) {
                pstar = b.value;
                have_pstar = true;
            }
        } catch (const BudgetExceeded&) {
            break;
        }
    }
    if (!have_pstar)
        throw NonpositiveLowerBound("no positive certified lower bound on the region");

    if (cfg.mode == "paper") return detail::attempt_certificate(p, region, cfg, pstar);

    // Any positive certified lower bound is admissible as pstar. A weaker
    // one relaxes the box threshold pstar/2, letting smaller hole
    // coefficients through, which keeps the lift's norm and the Polya
    // exponent small. Try the sharp bound first, then weaken geometrically;
    // only after the whole ladder fails do we retry with correction-weight
    // escalation, which tends to produce much larger certificates.
    std::exception_ptr last;
    for (bool allow_bumps : {false, true}) {
        for (long shift : {1L, 8L, 64L, 512L}) {
            try {
                return detail::attempt_certificate(p, region, cfg, pstar / shift, allow_bumps);
            } catch (const SearchExhausted&) {
                last = std::current_exception();
            } catch (const TermBudgetExceeded&) {
                last = std::current_exception();
            } catch (const BudgetExceeded&) {
                last = std::current_exception();
            }
        }
    }
    std::rethrow_exception(last);
}

}  // namespace pscert

#endif  // PSCERT_CERTGEN_HPP
