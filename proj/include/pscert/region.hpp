#ifndef PSCERT_REGION_HPP
#define PSCERT_REGION_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pscert/bivar.hpp"
#include "pscert/errors.hpp"
#include "pscert/rational.hpp"

namespace pscert {

using RatPoint = std::pair<Rational, Rational>;

struct Hole {
    RatPoint center;
    Rational radius;
};

// Unit disk minus open disks, S = {x : g_i(x) >= 0}. Constraints are stored
// with their scales applied; scales are 1 until normalize_constraints.
struct Region {
    std::vector<Hole> holes;
    std::vector<BivarPoly> constraints;  // g_0 = 1-|x|^2 first, then holes
    std::vector<Rational> scales;
    Rational c0_bound;
    RatPoint witness;

    size_t constraint_count() const { return constraints.size(); }
};

struct PointClass {
    bool inside;
    Rational margin;  // min_i g_i(x)
};

inline PointClass classify_point(const Region& region, const RatPoint& x) {
    Rational margin;
    bool first = true;
    for (const BivarPoly& g : region.constraints) {
        Rational v = g.eval(x.first, x.second);
        if (first || v < margin) margin = v;
        first = false;
    }
    return {margin >= 0, margin};
}

namespace detail {

inline Rational dist_sq(const RatPoint& a, const RatPoint& b) {
    Rational dx = a.first - b.first, dy = a.second - b.second;
    return dx * dx + dy * dy;
}

inline BivarPoly disk_constraint() {
    // 1 - x1^2 - x2^2
    BivarPoly g(Rational(1));
    g.add_term(2, 0, -1);
    g.add_term(0, 2, -1);
    return g;
}

inline BivarPoly hole_constraint(const Hole& h) {
    // |x - center|^2 - r^2
    BivarPoly g;
    g.add_term(2, 0, 1);
    g.add_term(0, 2, 1);
    g.add_term(1, 0, -2 * h.center.first);
    g.add_term(0, 1, -2 * h.center.second);
    g.add_term(0, 0, h.center.first * h.center.first + h.center.second * h.center.second -
                         h.radius * h.radius);
    return g;
}

// ~720 exact rational points on the circle, via the tangent half-angle
// parametrization over two charts.
inline std::vector<RatPoint> circle_sample(const RatPoint& center, const Rational& r) {
    std::vector<RatPoint> pts;
    pts.reserve(724);
    for (int chart = 0; chart < 2; ++chart) {
        for (int j = -180; j <= 180; ++j) {
            Rational t(j, 180);
            Rational den = 1 + t * t;
            Rational cx = (1 - t * t) / den;
            Rational cy = 2 * t / den;
            if (chart == 1) cx = -cx;
            pts.emplace_back(center.first + r * cx, center.second + r * cy);
        }
    }
    return pts;
}

struct CirclePairInfo {
    bool intersecting = false;  // transversally
    Rational cos_angle;         // |cos phi| for intersecting pairs
};

inline CirclePairInfo classify_circle_pair(const RatPoint& c1, const Rational& r1,
                                           const RatPoint& c2, const Rational& r2) {
    Rational d2 = dist_sq(c1, c2);
    Rational sum = (r1 + r2) * (r1 + r2);
    Rational diff = (r1 - r2) * (r1 - r2);
    CirclePairInfo info;
    if (d2 >= sum || d2 <= diff) return info;  // disjoint, nested, or tangent
    info.intersecting = true;
    Rational c = (r1 * r1 + r2 * r2 - d2) / (2 * r1 * r2);
    info.cos_angle = abs(c);
    return info;
}

}  // namespace detail

// Rational upper bound for the Lojasiewicz constant of the constraint system:
// 1/R_min when all circle pairs are disjoint or tangent, otherwise
// (sqrt(2)+1)/(R_min^2 sin(phi_min/2)) rounded outward.
inline Rational lojasiewicz_c0(const std::vector<Hole>& holes) {
    std::vector<std::pair<RatPoint, Rational>> circles;
    circles.push_back({{Rational(0), Rational(0)}, Rational(1)});
    for (const Hole& h : holes) circles.push_back({h.center, h.radius});
    Rational r_min = 1;
    for (const Hole& h : holes) r_min = std::min(r_min, h.radius);
    std::optional<Rational> max_cos;  // |cos phi| of the minimal angle
    for (size_t i = 0; i < circles.size(); ++i)
        for (size_t j = i + 1; j < circles.size(); ++j) {
            auto info = detail::classify_circle_pair(circles[i].first, circles[i].second,
                                                     circles[j].first, circles[j].second);
            if (info.intersecting && (!max_cos || info.cos_angle > *max_cos))
                max_cos = info.cos_angle;
        }
    if (!max_cos) return 1 / r_min;
    // sin(phi/2)^2 = (1 - |cos phi|)/2 is rational; bound below.
    Rational sin_half_lb = sqrt_lower((1 - *max_cos) / 2);
    Rational sqrt2p1_ub = sqrt_upper(Rational(2)) + 1;
    return sqrt2p1_ub / (r_min * r_min * sin_half_lb);
}

inline Region build_region(const std::vector<Hole>& holes) {
    for (const Hole& h : holes) {
        if (h.radius <= 0) throw std::invalid_argument("hole radius must be positive");
        Rational center_sq = h.center.first * h.center.first + h.center.second * h.center.second;
        if (center_sq >= (1 + h.radius) * (1 + h.radius))
            throw RedundantHole("hole does not intersect the closed unit disk");
    }
    // No hole disk may be contained in the union of the others: exact check
    // for single containment, certified boundary sampling for overlaps.
    for (size_t i = 0; i < holes.size(); ++i) {
        for (size_t j = 0; j < holes.size(); ++j) {
            if (i == j) continue;
            Rational d2 = detail::dist_sq(holes[i].center, holes[j].center);
            if (holes[j].radius >= holes[i].radius &&
                d2 <= (holes[j].radius - holes[i].radius) * (holes[j].radius - holes[i].radius))
                throw HypothesisViolation("hole " + std::to_string(i) +
                                          " is contained in hole " + std::to_string(j));
        }
        if (holes.size() >= 3) {
            bool all_covered = true;
            for (const RatPoint& p : detail::circle_sample(holes[i].center, holes[i].radius)) {
                bool covered = false;
                for (size_t j = 0; j < holes.size() && !covered; ++j) {
                    if (i == j) continue;
                    covered = detail::dist_sq(p, holes[j].center) <=
                              holes[j].radius * holes[j].radius;
                }
                if (!covered) {
                    all_covered = false;
                    break;
                }
            }
            if (all_covered)
                throw HypothesisViolation("hole " + std::to_string(i) +
                                          " appears covered by the union of the other holes");
        }
    }

    Region region;
    region.holes = holes;
    region.constraints.push_back(detail::disk_constraint());
    for (const Hole& h : holes) region.constraints.push_back(detail::hole_constraint(h));
    region.scales.assign(region.constraints.size(), Rational(1));

    // Witness search: grid with Lipschitz exclusion at each level.
    Rational max_lip = 0;
    for (const BivarPoly& g : region.constraints)
        max_lip = std::max(max_lip, lipschitz_const(g, 2));
    bool found = false;
    for (long m = 4; m <= 256 && !found; m *= 2) {
        Rational h(1, m);  // grid step 1/m over [-1,1]
        Rational best_margin;
        bool have_margin = false;
        for (long i = -m; i <= m && !found; ++i) {
            for (long j = -m; j <= m; ++j) {
                RatPoint x{Rational(i, m), Rational(j, m)};
                auto cls = classify_point(region, x);
                if (cls.inside) {
                    region.witness = x;
                    found = true;
                    break;
                }
                if (!have_margin || cls.margin > best_margin) {
                    best_margin = cls.margin;
                    have_margin = true;
                }
            }
        }
        // Every point of [-1,1]^2 is within h*sqrt(2)/2 <= h of a grid point,
        // so min_i g_i < best_margin + L*h everywhere.
        if (!found && have_margin && best_margin < -max_lip * h)
            throw EmptyRegion("region is empty (certified by grid exclusion)");
    }
    if (!found)
        throw EmptyRegion("no witness point found at the finest grid level (inconclusive)");

    region.c0_bound = lojasiewicz_c0(holes);
    return region;
}

// Scales s_i so that 0 <= g_i <= 1 on S; adjusts c0_bound so the Lojasiewicz
// contract holds for the scaled constraints.
inline Region normalize_constraints(const Region& region) {
    Region out = region;
    Rational min_scale = 1;
    for (size_t i = 1; i < out.constraints.size(); ++i) {
        const Hole& h = out.holes[i - 1];
        Rational center_sq = h.center.first * h.center.first + h.center.second * h.center.second;
        // max of |x-center|^2 over the disk is (1+|center|)^2, attained
        // antipodally; round the scale down so g_i <= 1 stays certified.
        Rational center_abs_ub = sqrt_upper(center_sq);
        Rational max_val = 1 + 2 * center_abs_ub + center_sq - h.radius * h.radius;
        Rational s = 1 / max_val;
        if (s > 1) s = 1;
        Rational ratio = s / out.scales[i];
        out.scales[i] = s;
        out.constraints[i] = ratio * out.constraints[i];
        min_scale = std::min(min_scale, s);
    }
    out.c0_bound = region.c0_bound / min_scale;
    return out;
}

// --- region file format: one "(cx, cy, r)" triple per line ---

inline std::string to_string_region(const Region& region) {
    std::ostringstream out;
    for (const Hole& h : region.holes)
        out << "(" << h.center.first.get_str() << ", " << h.center.second.get_str() << ", "
            << h.radius.get_str() << ")\n";
    return out.str();
}

inline std::vector<Hole> parse_holes(const std::string& text) {
    std::vector<Hole> holes;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = detail::strip(line);
        if (line.empty() || line[0] == '#') continue;
        if (line.front() != '(' || line.back() != ')')
            throw ParseError("bad hole triple: " + line);
        std::string body = line.substr(1, line.size() - 2);
        std::vector<std::string> parts;
        std::string cur;
        for (char ch : body) {
            if (ch == ',') {
                parts.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(ch);
            }
        }
        parts.push_back(cur);
        if (parts.size() != 3) throw ParseError("bad hole triple: " + line);
        holes.push_back({{parse_rational(detail::strip(parts[0])),
                          parse_rational(detail::strip(parts[1]))},
                         parse_rational(detail::strip(parts[2]))});
    }
    return holes;
}

}  // namespace pscert

#endif  // PSCERT_REGION_HPP
