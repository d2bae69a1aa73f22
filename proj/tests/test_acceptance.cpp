// Acceptance gate: one line per criterion, "criterion N: PASS" or
// "criterion N: FAIL (reason)". Exit status is the number of failures.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "pscert/bounds.hpp"
#include "pscert/certgen.hpp"
#include "pscert/certverify.hpp"
#include "pscert/harness.hpp"
#include "pscert/region.hpp"

using namespace pscert;
namespace hn = pscert::harness;

namespace {

int g_failures = 0;

void report(int n, bool pass, const std::string& why = "") {
    if (pass) {
        std::printf("criterion %d: PASS\n", n);
    } else {
        ++g_failures;
        std::printf("criterion %d: FAIL%s\n", n, why.empty() ? "" : (" (" + why + ")").c_str());
    }
    std::fflush(stdout);
}

void run(int n, const std::function<void()>& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report(n, false, std::string("exception: ") + e.what());
    }
}

struct Check {
    bool ok = true;
    std::string why;
    void require(bool cond, const std::string& msg) {
        if (!cond && ok) {
            ok = false;
            why = msg;
        }
    }
};

std::vector<BivarPoly> fixtures() {
    return {parse_bivar("1"),
            parse_bivar("3 + -1 * x1^2"),
            parse_bivar("2 + 1 * x2^2"),
            parse_bivar("3 + -1 * x1^1 x2^1"),
            parse_bivar("2 + -1 * x1^2 + -1 * x2^2"),
            parse_bivar("5/2 + -1 * x1^2 + -1 * x2^2")};
}

std::vector<Region> regions() {
    return {normalize_constraints(build_region({})),
            normalize_constraints(build_region({{{Rational(1, 2), Rational(0)}, Rational(1, 4)}})),
            normalize_constraints(
                build_region({{{Rational(1, 2), Rational(0)}, Rational(1, 4)},
                              {{Rational(-1, 2), Rational(0)}, Rational(1, 4)}}))};
}

// 1. Every fixture certifies on every region within 60 seconds, and the
//    certificate verifies exactly with nonnegative weights.
void criterion1() {
    Check c;
    GenConfig cfg;
    for (const Region& region : regions()) {
        for (const BivarPoly& p : fixtures()) {
            auto t0 = std::chrono::steady_clock::now();
            Certificate cert = generate_certificate(p, region, cfg);
            double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            c.require(secs <= 60.0, "generation exceeded 60s for " + to_string(p));
            VerificationReport rep = verify_certificate(cert, p, region);
            c.require(rep.ok(), "verification failed for " + to_string(p));
            for (const CertTerm& t : cert.terms)
                c.require(t.weight >= 0, "negative weight for " + to_string(p));
        }
    }
    report(1, c.ok, c.why);
}

// 2. The positivization exponent ladder reproduces the worked example:
//    nonnegativity at N = 1, strict positivity at N = 3, and the closed-form
//    exponent bound also gives 3.
void criterion2() {
    Check c;
    QuadHomPoly f = QuadHomPoly::var(0) * QuadHomPoly::var(0) -
                    QuadHomPoly::var(0) * QuadHomPoly::var(1) +
                    QuadHomPoly::var(1) * QuadHomPoly::var(1);
    GenConfig cfg;
    PolyaOptions opt;
    opt.mask = {{true, true, false, false}};
    c.require(polya_expand(f, Rational(1, 4), cfg, opt).n == 1, "nonneg exponent != 1");
    opt.strict = true;
    c.require(polya_expand(f, Rational(1, 4), cfg, opt).n == 3, "strict exponent != 3");
    c.require(polya_prop_exponent(f, Rational(1, 4)) == 3, "closed-form exponent != 3");
    report(2, c.ok, c.why);
}

// 3. Closed-form mode: wherever its exponent fits under a 10^4 cap the
//    certificate verifies and the searched exponent never exceeds it; where it
//    does not fit, the overflow is predicted from norms alone.
void criterion3() {
    Check c;
    int successes = 0;
    Region disk = regions()[0];
    for (const BivarPoly& p : fixtures()) {
        GenConfig paper;
        paper.mode = "paper";
        paper.n_cap = 10000;
        try {
            Certificate pc = generate_certificate(p, disk, paper);
            ++successes;
            c.require(verify_certificate(pc, p, disk).ok(),
                      "closed-form certificate failed to verify for " + to_string(p));
            Certificate sc = generate_certificate(p, disk, GenConfig{});
            c.require(sc.params.n <= pc.params.n,
                      "searched exponent exceeds the closed form for " + to_string(p));
        } catch (const BudgetExceeded&) {
            Rational pstar = certified_min(p, &disk, Rational(1, 100)).value;
            HoleReduction hr = hole_reduction(p, disk, pstar, paper);
            c.require(paper_polya_exceeds(hr.phat, hr.pstar_box, Rational(10000)),
                      "overflow not certified from norms for " + to_string(p));
        }
    }
    c.require(successes >= 1, "closed-form mode never succeeded");
    report(3, c.ok, c.why);
}

// 4. Exterior distance bound: across five regions (including an overlapping
//    hole pair), at least 10^4 exterior sample points satisfy
//    dist(x, S) <= c0 * max_i(-g_i(x)).
void criterion4() {
    Check c;
    std::vector<std::vector<Hole>> hole_sets{
        {},
        {{{Rational(1, 2), Rational(0)}, Rational(1, 4)}},
        {{{Rational(1, 2), Rational(0)}, Rational(1, 4)},
         {{Rational(-1, 2), Rational(0)}, Rational(1, 4)}},
        {{{Rational(11, 40), Rational(0)}, Rational(1, 2)},
         {{Rational(-11, 40), Rational(0)}, Rational(1, 2)}},
        {{{Rational(0), Rational(0)}, Rational(7, 8)}}};
    long exterior_total = 0;
    for (const auto& holes : hole_sets) {
        Region r = normalize_constraints(build_region(holes));
        std::vector<std::pair<double, double>> inside;
        const long m = 160;
        for (long i = -m; i <= m; ++i)
            for (long j = -m; j <= m; ++j)
                if (classify_point(r, {Rational(i, m), Rational(j, m)}).inside)
                    inside.emplace_back(double(i) / m, double(j) / m);
        c.require(!inside.empty(), "no inside sample");
        double c0 = to_double(r.c0_bound);
        const long g = 60;  // exterior grid over [-3/2, 3/2]^2
        for (long i = -g; i <= g; ++i) {
            for (long j = -g; j <= g; ++j) {
                RatPoint x{Rational(i, 40), Rational(j, 40)};
                auto cls = classify_point(r, x);
                if (cls.inside) continue;
                ++exterior_total;
                double xd = double(i) / 40, yd = double(j) / 40;
                double dist = 1e300;
                for (const auto& [px, py] : inside)
                    dist = std::min(dist, std::hypot(px - xd, py - yd));
                if (dist > c0 * (-to_double(cls.margin)) + 2.0 / m)
                    c.require(false, "distance bound violated at a grid point");
            }
        }
    }
    c.require(exterior_total >= 10000, "fewer than 10^4 exterior samples");
    report(4, c.ok, c.why);
}

// 5. Certificate soundness on matrices: the certified targets stay almost
//    positive, min eig q(a,a*) >= -review_constant * delta - 1e-10, across
//    100 seeds and three commutator scales.
void criterion5() {
    Check c;
    Region disk = regions()[0];
    Region two = regions()[2];
    std::vector<Certificate> certs{
        generate_certificate(parse_bivar("3 + -1 * x1^2"), disk, GenConfig{}),
        generate_certificate(parse_bivar("2 + -1 * x1^2 + -1 * x2^2"), two, GenConfig{})};
    for (const Certificate& cert : certs) {
        Rational constant = review_constant(cert);
        for (double delta : {1e-2, 1e-3, 1e-4}) {
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                hn::Mat a = hn::gen_almost_normal(
                    {50, "normal-plus-upper-triangular", delta, seed, nullptr});
                hn::TrialReport t = hn::check_review_bound(cert, constant, a);
                c.require(t.pass, "review bound violated at delta " + std::to_string(delta) +
                                      " seed " + std::to_string(seed));
            }
            if (!c.ok) break;
        }
        if (!c.ok) break;
    }
    report(5, c.ok, c.why);
}

// 6. Certified operator-norm bounds hold on the full ensemble, and the norm
//    excess over the normal-case value scales linearly in delta: a least
//    squares fit of excess against delta has intercept <= 1e-6.
void criterion6() {
    Check c;
    Region disk = regions()[0];
    std::vector<double> xs, ys;
    for (const char* txt : {"1 * z^2", "1 * z^2 zb^1"}) {
        HermPoly p = parse_herm(txt);
        hn::NormBoundCert nb = hn::make_norm_bound_cert(p, disk, Rational(1, 10));
        c.require(verify_certificate(nb.cert).ok(), "norm-bound certificate failed to verify");
        double base = std::sqrt(to_double(nb.p_max * nb.p_max + nb.eps * nb.p_max));
        for (double delta : {1e-2, 1e-3, 1e-4}) {
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                hn::Mat a = hn::gen_almost_normal(
                    {50, "normal-plus-upper-triangular", delta, seed, nullptr});
                hn::TrialReport t = hn::check_norm_bound(p, a, disk, nb);
                c.require(t.pass, std::string("norm bound violated for ") + txt);
                xs.push_back(hn::self_commutator_norm(a));
                ys.push_back(std::max(0.0, t.measured - base));
            }
        }
    }
    // least squares intercept of excess vs delta
    double n = static_cast<double>(xs.size()), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    c.require(denom > 0, "degenerate regression");
    double slope = (n * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / n;
    c.require(intercept <= 1e-6, "excess-vs-delta intercept " + std::to_string(intercept));
    report(6, c.ok, c.why);
}

// 7. No uniform constant: the truncated-inverse construction keeps
//    ||p(a,a*)|| = sqrt(delta)/eps exactly while the certified sup bound on
//    |p| stays near 2, so the ratio diverges as delta -> 0.
void criterion7() {
    Check c;
    hn::R32Report rep = hn::counterexample_r32(1e-4, 0.1);
    c.require(std::abs(rep.norm_pa - 0.1) < 1e-12, "||p(a,a*)|| != sqrt(delta)/eps");
    c.require(rep.norm_trial.pass, "norm trial failed");
    c.require(rep.pmax_trial.pass, "sup-bound trial failed");
    c.require(rep.p_max_estimate <= 2.0 + 0.01 + 1e-2, "sup bound drifted above 2 + eps^2");
    c.require(rep.ratio >= 0.04, "ratio did not reach sqrt(delta)/(3 eps)");
    report(7, c.ok, c.why);
}

// 8. Pseudospectrum: for p = z^2, every mu on the circle |mu| = 3/2 admits the
//    resolvent bound 1/kappa at kappa = 1/2, and a 200x200 scan finds no point
//    with resolvent norm > 1/kappa' outside the kappa-fattened image of the
//    region.
void criterion8() {
    Check c;
    Region disk = regions()[0];
    HermPoly p = parse_herm("1 * z^2");
    hn::Mat a = hn::gen_almost_normal({50, "normal-plus-upper-triangular", 1e-4, 0, nullptr});
    for (int k = 0; k < 32; ++k) {
        double th = 2 * M_PI * k / 32;
        hn::TrialReport t =
            hn::pseudospec_point_obvious(p, a, std::polar(1.5, th), 0.5);
        c.require(t.pass, "resolvent bound violated at a circle point");
    }
    hn::ContainmentReport cr = hn::pseudospec_containment(p, a, disk, 0.5, 0.25, 200);
    c.require(cr.scanned == 200 * 200, "scan size mismatch");
    c.require(cr.pass, "pseudospectrum escaped the fattened image");
    c.require(cr.inside_pseudospec > 0, "empty pseudospectrum sample");
    report(8, c.ok, c.why);
}

// 9. Targets that vanish on the region are refused, not certified.
void criterion9() {
    Check c;
    Region two = regions()[2];
    BivarPoly zero_on_circles = two.constraints[1] * two.constraints[2];
    bool threw = false;
    try {
        generate_certificate(zero_on_circles, two, GenConfig{});
    } catch (const NonpositiveLowerBound&) {
        threw = true;
    }
    c.require(threw, "nonpositive target was not refused");
    report(9, c.ok, c.why);
}

// 10. The substitution algebra is exact: the four quarter-substitution
//     identities hold as polynomial identities, and the correction kernel is
//     invisible to the substitution.
void criterion10() {
    Check c;
    BivarPoly one(Rational(1));
    BivarPoly g0 = detail::disk_constraint();
    BivarPoly x1 = BivarPoly::x1(), x2 = BivarPoly::x2();
    std::vector<BivarPoly> gamma{Rational(1, 4) * (one + x1), Rational(1, 4) * (one - x1),
                                 Rational(1, 4) * (one + x2), Rational(1, 4) * (one - x2)};
    std::vector<BivarPoly> sq{one + x1, one - x1, one + x2, one - x2};
    std::vector<BivarPoly> other{x2, x2, x1, x1};
    for (size_t i = 0; i < 4; ++i) {
        BivarPoly lhs = Rational(8) * gamma[i];
        BivarPoly rhs = sq[i] * sq[i] + other[i] * other[i] + g0;
        c.require(lhs == rhs, "quarter-substitution identity failed");
    }
    c.require((gamma[0] + gamma[1] + gamma[2] + gamma[3]) == one, "gammas do not sum to 1");
    for (long dh : {2L, 3L, 4L, 6L})
        c.require(gamma_image(detail::correction_kernel(dh)).is_zero(),
                  "correction kernel is visible to the substitution");
    BivarPoly p = parse_bivar("3 + -1 * x1^2 + 1 * x1^1 x2^1");
    c.require(gamma_image(square_lift(p)) == p, "substitution does not invert the lift");
    report(10, c.ok, c.why);
}

}  // namespace

int main() {
    run(1, criterion1);
    run(2, criterion2);
    run(3, criterion3);
    run(4, criterion4);
    run(5, criterion5);
    run(6, criterion6);
    run(7, criterion7);
    run(8, criterion8);
    run(9, criterion9);
    run(10, criterion10);
    return g_failures;
}
