#ifndef TILTSTAB_POLYGON_HPP
#define TILTSTAB_POLYGON_HPP

#include <algorithm>
#include <vector>

#include "bounds.hpp"
#include "walls.hpp"

namespace tiltstab {

struct HalfPlanePoint {
    QuadNumber x, y;
    bool operator==(const HalfPlanePoint&) const = default;
};

// Chain O = P0, P1, ..., Pn = P with every edge going up and edge direction
// ratios x/y strictly decreasing (convexity of the closed polygon).
struct ConvexChain {
    std::vector<HalfPlanePoint> vertices;

    bool is_valid() const {
        if (vertices.size() < 2) return false;
        if (!vertices.front().x.is_zero() || !vertices.front().y.is_zero()) return false;
        for (size_t i = 1; i < vertices.size(); ++i) {
            QuadNumber dy = vertices[i].y - vertices[i - 1].y;
            if (dy.sign() <= 0) return false;
        }
        for (size_t i = 2; i < vertices.size(); ++i) {
            QuadNumber ax = vertices[i - 1].x - vertices[i - 2].x;
            QuadNumber ay = vertices[i - 1].y - vertices[i - 2].y;
            QuadNumber bx = vertices[i].x - vertices[i - 1].x;
            QuadNumber by = vertices[i].y - vertices[i - 1].y;
            if (!((ax * by - bx * ay).sign() > 0)) return false;  // ratio must drop
        }
        return true;
    }
};

inline QuadNumber club_sum(const ConvexChain& chain) {
    if (!chain.is_valid()) throw std::invalid_argument("invalid chain");
    QuadNumber total;
    for (size_t i = 1; i < chain.vertices.size(); ++i)
        total += club(chain.vertices[i].x - chain.vertices[i - 1].x,
                      chain.vertices[i].y - chain.vertices[i - 1].y);
    return total;
}

struct ClubMax {
    QuadNumber value;
    ConvexChain witness;
};

namespace detail {

// signed area of (b-a) x (c-a)
inline QuadNumber cross(const HalfPlanePoint& a, const HalfPlanePoint& b, const HalfPlanePoint& c) {
    return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

inline bool in_triangle(const HalfPlanePoint& p, const HalfPlanePoint& a, const HalfPlanePoint& b,
                        const HalfPlanePoint& c) {
    int s1 = cross(a, b, p).sign(), s2 = cross(b, c, p).sign(), s3 = cross(c, a, p).sign();
    bool has_pos = s1 > 0 || s2 > 0 || s3 > 0;
    bool has_neg = s1 < 0 || s2 < 0 || s3 < 0;
    return !(has_pos && has_neg);
}

// intersection of lines p1+t(p2-p1) and q1+s(q2-q1); empty when parallel
inline std::optional<HalfPlanePoint> line_intersection(const HalfPlanePoint& p1, const HalfPlanePoint& p2,
                                                       const HalfPlanePoint& q1, const HalfPlanePoint& q2) {
    QuadNumber dx1 = p2.x - p1.x, dy1 = p2.y - p1.y;
    QuadNumber dx2 = q2.x - q1.x, dy2 = q2.y - q1.y;
    QuadNumber det = dx1 * dy2 - dx2 * dy1;
    if (det.is_zero()) return std::nullopt;
    QuadNumber t = ((q1.x - p1.x) * dy2 - (q1.y - p1.y) * dx2) / det;
    return HalfPlanePoint{p1.x + t * dx1, p1.y + t * dy1};
}

inline bool lex_less(const ConvexChain& a, const ConvexChain& b) {
    auto key = [](const HalfPlanePoint& p) { return std::pair<QuadNumber, QuadNumber>{p.x, p.y}; };
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    for (size_t i = 0; i < a.vertices.size(); ++i) {
        if (a.vertices[i] == b.vertices[i]) continue;
        return key(a.vertices[i]) < key(b.vertices[i]);
    }
    return false;
}

}  // namespace detail

// Maximum of club_sum over convex chains O -> ... -> P inside triangle OQP.
// The club weight is piecewise affine in the interior vertex on each ratio
// sector of each edge, so the maximum over chains with one interior vertex is
// attained at Q, at a sector-ray crossing of the boundary segments, or at an
// intersection of two sector rays; that finite set plus the direct edge is
// enumerated here. The brute-force oracle below tests this completeness.
inline ClubMax maximize_club_path(const HalfPlanePoint& P, const HalfPlanePoint& Q) {
    if (Q.y.sign() <= 0 || P.y <= Q.y) throw std::invalid_argument("triangle needs y_p > y_q > 0");
    if (!(P.x * Q.y < Q.x * P.y)) throw std::invalid_argument("needs x_p/y_p < x_q/y_q");
    HalfPlanePoint O{QuadNumber(0), QuadNumber(0)};

    std::vector<HalfPlanePoint> candidates{Q};

    // sector rays from O: x/y = -n/2 for ratios between the OP and OQ edges
    auto o_ray_range = [&]() {
        long long lo = 1;
        QuadNumber rq = Q.x / Q.y;
        if (rq < QuadNumber(Rational(-1, 2))) lo = (QuadNumber(-2) * rq).floor().convert_to<long long>();
        QuadNumber rp = P.x / P.y;
        long long hi = (QuadNumber(-2) * rp).floor().convert_to<long long>() + 1;
        return std::pair<long long, long long>{std::max(1LL, lo), hi};
    }();
    // sector rays through P: (x_p-x)/(y_p-y) = -n/2
    auto p_ray_range = [&]() {
        QuadNumber r1 = (P.x - Q.x) / (P.y - Q.y);
        QuadNumber r2 = P.x / P.y;
        QuadNumber worst = std::min(r1, r2);
        long long hi = (QuadNumber(-2) * worst).floor().convert_to<long long>() + 1;
        return std::pair<long long, long long>{1, hi};
    }();

    auto o_ray_point = [&](long long n) {
        return HalfPlanePoint{QuadNumber(Rational(-n, 2)), QuadNumber(1)};
    };
    auto p_ray_point = [&](long long n) {
        return HalfPlanePoint{P.x + QuadNumber(Rational(n, 2)), P.y - QuadNumber(1)};
    };

    auto push = [&](const std::optional<HalfPlanePoint>& pt) {
        if (pt) candidates.push_back(*pt);
    };
    for (long long n = o_ray_range.first; n <= o_ray_range.second; ++n) {
        push(detail::line_intersection(O, o_ray_point(n), O, Q));
        push(detail::line_intersection(O, o_ray_point(n), Q, P));
        for (long long m = p_ray_range.first; m <= p_ray_range.second; ++m)
            push(detail::line_intersection(O, o_ray_point(n), P, p_ray_point(m)));
    }
    for (long long m = p_ray_range.first; m <= p_ray_range.second; ++m) {
        push(detail::line_intersection(P, p_ray_point(m), O, Q));
        push(detail::line_intersection(P, p_ray_point(m), Q, P));
    }

    ClubMax best{club_sum({{O, P}}), {{O, P}}};
    for (const auto& p1 : candidates) {
        if (p1.y.sign() <= 0 || p1.y >= P.y) continue;
        if (!detail::in_triangle(p1, O, Q, P)) continue;
        ConvexChain chain{{O, p1, P}};
        if (!chain.is_valid()) continue;
        QuadNumber v = club_sum(chain);
        if (v > best.value || (v == best.value && detail::lex_less(chain, best.witness)))
            best = {v, chain};
    }
    return best;
}

// Oracle: exhaust convex chains whose interior vertices lie on the (1/D)
// lattice inside the triangle. Budget-guarded; only for testing.
inline QuadNumber brute_force_club_max(const HalfPlanePoint& P, const HalfPlanePoint& Q,
                                       long long grid_denominator, int max_interior) {
    if (grid_denominator < 1 || grid_denominator > 16 || max_interior < 0 || max_interior > 2)
        throw std::invalid_argument("oversize grid");
    if (!P.x.is_rational() || !P.y.is_rational() || !Q.x.is_rational() || !Q.y.is_rational())
        throw std::invalid_argument("oracle needs rational corners");
    HalfPlanePoint O{QuadNumber(0), QuadNumber(0)};
    Rational D(grid_denominator);

    Rational xmin = std::min({Rational(0), P.x.to_rational(), Q.x.to_rational()});
    Rational xmax = std::max({Rational(0), P.x.to_rational(), Q.x.to_rational()});
    Rational ymax = P.y.to_rational();

    std::vector<HalfPlanePoint> grid;
    for (BigInt j = 1; Rational(j) / D < ymax; ++j)
        for (BigInt i = floor_rat(xmin * D); Rational(i) <= xmax * D; ++i) {
            HalfPlanePoint pt{QuadNumber(Rational(i) / D), QuadNumber(Rational(j) / D)};
            if (detail::in_triangle(pt, O, Q, P)) grid.push_back(pt);
        }

    QuadNumber best = club_sum({{O, P}});
    auto consider = [&](const ConvexChain& c) {
        if (!c.is_valid()) return;
        QuadNumber v = club_sum(c);
        if (v > best) best = v;
    };
    if (max_interior >= 1)
        for (const auto& p1 : grid) consider({{O, p1, P}});
    if (max_interior >= 2)
        for (const auto& p1 : grid)
            for (const auto& p2 : grid) {
                if (!(p2.y > p1.y)) continue;
                consider({{O, p1, p2, P}});
            }
    return best;
}

// End-to-end h^0/r bound for the pushforward of a slope-mu bundle: either the
// single Brill-Noether factor bound, or the triangle maximization with the
// apex from the slope-range tables. Normalized to r = 1 by homogeneity.
inline QuadNumber clifford_via_polygon(const Rational& mu) {
    BnRange range = bn_range_iota(mu);  // also validates the domain
    HalfPlanePoint P{QuadNumber(mu - 50), QuadNumber(20)};
    if (range.status == BnRange::Status::semistable) return club(P.x, P.y);
    auto [xq, yq] = q_corner(mu, Rational(1));
    return maximize_club_path(P, {xq, yq}).value;
}

}  // namespace tiltstab

#endif
