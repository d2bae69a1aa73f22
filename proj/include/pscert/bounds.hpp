#ifndef PSCERT_BOUNDS_HPP
#define PSCERT_BOUNDS_HPP

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "pscert/bivar.hpp"
#include "pscert/errors.hpp"
#include "pscert/herm.hpp"
#include "pscert/rational.hpp"
#include "pscert/region.hpp"

namespace pscert {

enum class BoundDomain { box, region, disk };

struct CertifiedBound {
    Rational value;
    bool is_lower = true;
    BoundDomain domain = BoundDomain::box;
    Rational grid_step;
    long evaluations = 0;
    bool budget_hit = false;
};

namespace detail {

// Certified Lipschitz constant on [-1,1]^2 from coefficient-gradient sums:
// |d p/d x_i| <= sum |c_a| a_i there. Often much tighter than the
// d^2 n^(d-1/2) ||p|| bound; we take the smaller of the two.
inline Rational grid_lipschitz(const BivarPoly& p) {
    Rational l1 = 0, l2 = 0;
    for (const auto& [e, c] : p.terms()) {
        l1 += abs(c) * e.first;
        l2 += abs(c) * e.second;
    }
    Rational grad = sqrt_upper(l1 * l1 + l2 * l2);
    Rational elem = lipschitz_const(p, 2);
    return elem > 0 && elem < grad ? elem : grad;
}

// Exact evaluator of an integer-scaled polynomial on the grid {i/M : -M..M}^2.
// value(i,j) = p(i/M, j/M) * scale(), all arithmetic in integers; rows are
// swept by forward differences (deg(x1) additions per point).
class IntGridPoly {
  public:
    IntGridPoly(const BivarPoly& p, long m) : m_(m) {
        for (const auto& [e, c] : p.terms()) {
            d1_ = std::max(d1_, e.first);
            d2_ = std::max(d2_, e.second);
        }
        Integer den = 1;
        for (const auto& [e, c] : p.terms())
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
        Integer mz(m);
        std::vector<Integer> mpow(static_cast<size_t>(d1_ + d2_) + 1);
        mpow[0] = 1;
        for (long k = 1; k <= d1_ + d2_; ++k) mpow[static_cast<size_t>(k)] = mpow[static_cast<size_t>(k - 1)] * mz;
        scale_ = Rational(den * mpow[static_cast<size_t>(d1_ + d2_)]);
        // sc[a][b] = c_ab * den * M^(d2-b); rows then apply M^(d1-a).
        sc_.assign(static_cast<size_t>(d1_) + 1,
                   std::vector<Integer>(static_cast<size_t>(d2_) + 1, Integer(0)));
        for (const auto& [e, c] : p.terms()) {
            Integer ci = Integer(c.get_num()) * (den / Integer(c.get_den()));
            sc_[static_cast<size_t>(e.first)][static_cast<size_t>(e.second)] =
                ci * mpow[static_cast<size_t>(d2_ - e.second)];
        }
        m1pow_.assign(static_cast<size_t>(d1_) + 1, Integer(1));
        for (long k = 1; k <= d1_; ++k) m1pow_[static_cast<size_t>(k)] = m1pow_[static_cast<size_t>(k - 1)] * mz;
    }

    const Rational& scale() const { return scale_; }

    // Prepare the forward-difference state for row j (value at i = -M).
    void start_row(long j) {
        // row coefficients in i: ra[a] = M^(d1-a) * sum_b sc[a][b] j^b
        std::vector<Integer> ra(static_cast<size_t>(d1_) + 1);
        Integer jz(j);
        for (long a = 0; a <= d1_; ++a) {
            Integer acc = sc_[static_cast<size_t>(a)][static_cast<size_t>(d2_)];
            for (long b = d2_ - 1; b >= 0; --b)
                acc = acc * jz + sc_[static_cast<size_t>(a)][static_cast<size_t>(b)];
            ra[static_cast<size_t>(a)] = acc * m1pow_[static_cast<size_t>(d1_ - a)];
        }
        // seed values at i = -M .. -M + d1, then the difference table
        std::vector<Integer> seed(static_cast<size_t>(d1_) + 1);
        for (long r = 0; r <= d1_; ++r) {
            Integer iz(-m_ + r);
            Integer acc = ra[static_cast<size_t>(d1_)];
            for (long a = d1_ - 1; a >= 0; --a) acc = acc * iz + ra[static_cast<size_t>(a)];
            seed[static_cast<size_t>(r)] = acc;
        }
        diff_ = seed;
        for (long lvl = 1; lvl <= d1_; ++lvl)
            for (long r = d1_; r >= lvl; --r)
                diff_[static_cast<size_t>(r)] -= diff_[static_cast<size_t>(r - 1)];
        pos_ = -m_;
    }

    const Integer& current() const { return diff_[0]; }
    long current_i() const { return pos_; }

    void advance() {
        for (long k = 0; k < d1_; ++k) diff_[static_cast<size_t>(k)] += diff_[static_cast<size_t>(k + 1)];
        ++pos_;
    }

  private:
    long m_;
    long d1_ = 0, d2_ = 0;
    Rational scale_;
    std::vector<std::vector<Integer>> sc_;
    std::vector<Integer> m1pow_;
    std::vector<Integer> diff_;
    long pos_ = 0;
};

}  // namespace detail

// Certified lower bound of p over the box [-1,1]^2 or over a validated
// region: uniform grid with Lipschitz-relaxed membership, grid minimum
// shifted down by the Lipschitz slack. The grid is refined through a doubling
// ladder and the best level is kept, so tightening target_gap never loosens
// the bound.
inline CertifiedBound certified_min(const BivarPoly& p, const Region* region,
                                    const Rational& target_gap, long eval_cap = 10'000'000) {
    if (target_gap <= 0) throw std::invalid_argument("target_gap must be positive");
    Rational lip_p = detail::grid_lipschitz(p);
    std::vector<Rational> lip_g;
    Rational tight_factor = 1;  // bound >= true min - lip_p * h * tight_factor
    if (region) {
        Rational max_lg = 0;
        for (const BivarPoly& g : region->constraints) {
            lip_g.push_back(detail::grid_lipschitz(g));
            max_lg = std::max(max_lg, lip_g.back());
        }
        tight_factor += region->c0_bound * max_lg;
    }

    CertifiedBound out;
    out.domain = region ? BoundDomain::region : BoundDomain::box;
    long evaluations = 0;
    bool have = false;
    Rational best;

    long m_target = 4;
    if (lip_p > 0) {
        Integer need = ceil_int(lip_p * tight_factor / target_gap);
        if (need > 1'000'000'000) throw BudgetExceeded("required grid is absurdly fine");
        m_target = std::max<long>(4, need.get_si());
    }

    for (long m = 4;; m *= 2) {
        if (m > m_target) m = m_target;
        long pts = (2 * m + 1) * (2 * m + 1);
        if (evaluations + pts > eval_cap) {
            out.budget_hit = true;
            break;
        }
        detail::IntGridPoly ev(p, m);
        std::vector<detail::IntGridPoly> gev;
        std::vector<Integer> gthr;  // keep the point iff g_int >= gthr
        if (region) {
            for (size_t k = 0; k < region->constraints.size(); ++k) {
                gev.emplace_back(region->constraints[k], m);
                gthr.push_back(floor_int(-lip_g[k] * Rational(1, m) * gev.back().scale()));
            }
        }
        bool row_have = false;
        Integer grid_min;
        for (long j = -m; j <= m; ++j) {
            ev.start_row(j);
            for (auto& g : gev) g.start_row(j);
            for (long i = -m; i <= m; ++i) {
                bool keep = true;
                for (size_t k = 0; k < gev.size() && keep; ++k)
                    keep = gev[k].current() >= gthr[k];
                if (keep && (!row_have || ev.current() < grid_min)) {
                    grid_min = ev.current();
                    row_have = true;
                }
                if (i < m) {
                    ev.advance();
                    for (auto& g : gev) g.advance();
                }
            }
        }
        evaluations += pts;
        if (row_have) {
            Rational bound = Rational(grid_min) / ev.scale() - lip_p * Rational(1, m);
            if (!have || bound > best) {
                best = bound;
                have = true;
            }
            out.grid_step = Rational(1, m);
        }
        if (m == m_target) break;
    }
    if (!have) throw BudgetExceeded("no kept grid point within evaluation budget");
    out.value = best;
    out.evaluations = evaluations;
    return out;
}

// Certified upper bound of |p| over a region (pass the disk as a hole-free
// region): certified_min of -(|p|^2 realified), then outward rational sqrt.
inline CertifiedBound certified_max_abs(const HermPoly& p, const Region& region,
                                        const Rational& target_gap, long eval_cap = 10'000'000) {
    BivarPoly neg_mod_sq = -herm_to_real(modulus_squared(p));
    Rational inner_gap = target_gap * target_gap;  // sqrt(t^2 + g^2) <= t + g
    CertifiedBound low = certified_min(neg_mod_sq, &region, inner_gap, eval_cap);
    CertifiedBound out;
    out.is_lower = false;
    out.domain = region.holes.empty() ? BoundDomain::disk : BoundDomain::region;
    out.grid_step = low.grid_step;
    out.evaluations = low.evaluations;
    out.budget_hit = low.budget_hit;
    Rational max_sq = -low.value;
    out.value = max_sq <= 0 ? Rational(0) : sqrt_upper(max_sq);
    return out;
}

// Certified lower bound over the simplex of phat's homogenization plus the
// kernel correction A*(y1+y2-y3-y4)^2. On the simplex that function reduces,
// in coordinates a = 2(y1-y2), b = 2(y3-y4), w = y1+y2-y3-y4, to
// phat(a,b) + A*w^2 over {|a| <= 1+w, |b| <= 1-w}; minimizing over w first
// leaves a 2D problem on the diamond |a|+|b| <= 2.
inline CertifiedBound certified_simplex_min(const BivarPoly& phat, const Rational& corr_weight,
                                            const Rational& target_gap,
                                            long eval_cap = 10'000'000) {
    if (target_gap <= 0) throw std::invalid_argument("target_gap must be positive");
    // t-coordinates: a = 2 t1, b = 2 t2 over [-1,1]^2.
    BivarPoly q = phat.compose_affine(0, 2, 0, 2);
    Rational lip_q = detail::grid_lipschitz(q);
    Rational lip = lip_q + 6 * corr_weight;  // penalty gradient is at most 4*sqrt(2)*A

    CertifiedBound out;
    out.domain = BoundDomain::box;  // stands for the simplex reduction domain
    long evaluations = 0;
    bool have = false;
    Rational best;

    long m_target = 4;
    if (lip > 0) {
        Integer need = ceil_int(3 * lip / target_gap);
        if (need > 1'000'000'000) throw BudgetExceeded("required grid is absurdly fine");
        m_target = std::max<long>(4, need.get_si());
    }

    Integer a_num(corr_weight.get_num()), a_den(corr_weight.get_den());
    for (long m = 4;; m *= 2) {
        if (m > m_target) m = m_target;
        long pts = (2 * m + 1) * (2 * m + 1);
        if (evaluations + pts > eval_cap) {
            out.budget_hit = true;
            break;
        }
        detail::IntGridPoly ev(q, m);
        // combined scale: q_int * a_den * M^2 + scale_q * a_num * excess^2
        Integer mm(m);
        Integer m2 = mm * mm;
        Integer s_q = Integer(ev.scale().get_num());  // scale() is integral
        Rational full_scale = ev.scale() * Rational(a_den * m2);
        bool row_have = false;
        Integer grid_min;
        for (long j = -m; j <= m; ++j) {
            ev.start_row(j);
            for (long i = -m; i <= m; ++i) {
                if (std::labs(i) + std::labs(j) <= m + 2) {  // relaxed diamond
                    Integer v = ev.current() * a_den * m2;
                    long ea = 2 * std::labs(i) - m, eb = 2 * std::labs(j) - m;
                    if (ea > 0) v += s_q * a_num * Integer(ea) * Integer(ea);
                    if (eb > 0) v += s_q * a_num * Integer(eb) * Integer(eb);
                    if (!row_have || v < grid_min) {
                        grid_min = v;
                        row_have = true;
                    }
                }
                if (i < m) ev.advance();
            }
        }
        evaluations += pts;
        if (row_have) {
            Rational bound = Rational(grid_min) / full_scale - lip * Rational(1, m);
            if (!have || bound > best) {
                best = bound;
                have = true;
            }
            out.grid_step = Rational(1, m);
        }
        if (m == m_target) break;
    }
    if (!have) throw BudgetExceeded("no kept grid point within evaluation budget");
    out.value = best;
    out.evaluations = evaluations;
    return out;
}

}  // namespace pscert

#endif  // PSCERT_BOUNDS_HPP
