#ifndef TILTSTAB_WALLS_HPP
#define TILTSTAB_WALLS_HPP

#include <algorithm>
#include <array>
#include <cstdlib>
#include <vector>

#include "stab.hpp"

namespace tiltstab {

inline long long gamma_scan_horizon() {
    if (const char* env = std::getenv("TILTSTAB_SCAN_HORIZON")) {
        long long h = std::atoll(env);
        if (h > 0) return h;
    }
    return 64;
}

// Crossings of the line x = s*y + alpha with the region x <= Gamma(y):
// beta2 = min{y > 0 | Gamma(y) >= s*y + alpha} and beta1 = max{y < 0 | ...}.
// Gamma is linear on each unit interval with an upward jump at each integer,
// so a unit-interval scan finds the extremal crossing exactly.
inline std::pair<QuadNumber, QuadNumber> gamma_line_intersections(const Rational& s,
                                                                  const QuadNumber& alpha) {
    long long horizon = gamma_scan_horizon();
    auto line = [&](const QuadNumber& y) { return QuadNumber(s) * y + alpha; };

    std::optional<QuadNumber> beta2;
    for (long long k = 0; k <= horizon && !beta2; ++k) {
        Rational kk(k);
        if (k >= 1 && gamma_curve(QuadNumber(kk)) >= line(QuadNumber(kk))) {
            beta2 = QuadNumber(kk);
            break;
        }
        // interior of (k, k+1): (k+1/2-s)*y >= (k^2+k)/2 + 1/4 + alpha
        Rational c1 = kk + Rational(1, 2) - s;
        QuadNumber c0 = QuadNumber((kk * kk + kk) / 2 + Rational(1, 4)) + alpha;
        if (c1 > 0) {
            QuadNumber y = c0 / QuadNumber(c1);
            if (y > QuadNumber(kk) && y < QuadNumber(kk + 1)) beta2 = y;
        }
    }
    if (!beta2) throw std::runtime_error("unbounded");

    std::optional<QuadNumber> beta1;
    for (long long k = -1; k >= -horizon && !beta1; --k) {
        Rational kk(k);
        Rational c1 = kk + Rational(1, 2) - s;
        QuadNumber c0 = QuadNumber((kk * kk + kk) / 2 + Rational(1, 4)) + alpha;
        if (c1 < 0) {
            // satisfied for y <= y*
            QuadNumber y = c0 / QuadNumber(c1);
            if (y > QuadNumber(kk) && y < QuadNumber(kk + 1)) beta1 = y;
        }
        if (!beta1 && gamma_curve(QuadNumber(kk)) >= line(QuadNumber(kk))) beta1 = QuadNumber(kk);
    }
    if (!beta1) throw std::runtime_error("unbounded");
    return {*beta1, *beta2};
}

// The wall-width budget for a pushforward from a degree-5 section curve.
inline bool width_constraint(const QuadNumber& beta1, const QuadNumber& beta2) {
    return beta2 - beta1 <= QuadNumber(5);
}

struct FirstWall {
    bool semistable = false;  // no wall: Brill-Noether semistable everywhere
    QuadNumber alpha;         // meaningful only when !semistable
};

inline QuadNumber mu_semistable_threshold() { return sqrt2_multiple(30, -20); }   // 30 - 20*sqrt(2)
inline QuadNumber mu_branch_threshold() { return sqrt2_multiple(10, 20); }        // 10 + 20*sqrt(2)

// Largest alpha at which the pushforward of a slope-mu bundle can be
// destabilized; below the sqrt(2) threshold no wall exists at all.
inline FirstWall first_wall_alpha_max(const QuadNumber& mu) {
    if (mu.sign() <= 0 || mu > QuadNumber(40)) throw std::domain_error("mu out of range");
    if (mu <= mu_semistable_threshold()) return {true, QuadNumber(0)};
    QuadNumber mu2 = mu * mu;
    if (mu <= QuadNumber(10))
        return {false, QuadNumber(3) * mu / QuadNumber(20) - mu2 / QuadNumber(400) - QuadNumber(Rational(1, 4))};
    if (mu < QuadNumber(30)) throw std::domain_error("mu out of range");
    QuadNumber linear = QuadNumber(3) * mu / QuadNumber(20) - QuadNumber(3);
    if (mu <= mu_branch_threshold()) {
        QuadNumber curved = mu / QuadNumber(5) - mu2 / QuadNumber(400) - QuadNumber(Rational(5, 4));
        return {false, std::max(linear, curved)};
    }
    return {false, linear};
}

struct BnRange {
    enum class Status { semistable, bounded };
    Status status = Status::bounded;
    QuadNumber upper;  // bound on nu+_BN
    QuadNumber lower;  // bound on nu-_BN
};

// Brill-Noether slope range of the HN factors of the pushforward of a
// slope-mu semistable bundle from the degree-20 curve.
inline BnRange bn_range_iota(const Rational& mu) {
    if (mu <= 0 || (mu > 10 && mu < 30) || mu > 40)
        throw std::domain_error("mu must lie in (0,10] or [30,40]");
    QuadNumber muq{mu};
    if (muq <= mu_semistable_threshold()) return {BnRange::Status::semistable, {}, {}};
    if (mu <= 10)
        return {BnRange::Status::bounded, QuadNumber(Rational(1, 2) - 5 / mu),
                QuadNumber((490 - 9 * mu) / (2 * mu - 200))};
    if (muq <= mu_branch_threshold())
        return {BnRange::Status::bounded, QuadNumber(Rational(3, 2) - 25 / mu),
                QuadNumber((450 - 7 * mu) / (2 * mu - 200))};
    if (mu <= 39)
        return {BnRange::Status::bounded, QuadNumber((23 * mu - 610) / (12 * mu - 140)),
                QuadNumber(Rational(-3, 2))};
    return {BnRange::Status::bounded, QuadNumber(mu / 8 - 4), QuadNumber(Rational(-3, 2))};
}

// Apex Q of the triangle bounding the HN polygon: the ray from the origin
// with ratio nu+ meets the ray from P = ((mu-50)r, 20r) with ratio nu-.
inline std::pair<QuadNumber, QuadNumber> q_corner(const Rational& mu, const Rational& r) {
    if (r <= 0) throw std::domain_error("r must be positive");
    BnRange range = bn_range_iota(mu);
    if (range.status == BnRange::Status::semistable) throw std::domain_error("degenerate triangle");
    QuadNumber xp{(mu - 50) * r}, yp{20 * r};
    QuadNumber y = (xp - range.lower * yp) / (range.upper - range.lower);
    return {range.upper * y, y};
}

// Numerical destabilizer candidates at p: lattice splittings v = v1 + v2 with
// equal tilt slope, both twisted ch1 inside [0, ch1^beta(v)], and both
// discriminants in [0, disc(v)]. Proportional splittings carry no wall and
// are dropped. For threefold input ch3 plays no role in the wall and is set
// to 0 on the subobject side.
inline std::vector<std::pair<ChernVector, ChernVector>> destabilizer_search(const ChernVector& v,
                                                                            const TiltPoint& p,
                                                                            long long max_rank) {
    if (max_rank < 1) throw std::invalid_argument("max_rank must be >= 1");
    if (!stability_region(v.variety, p)) throw std::invalid_argument("invalid tilt point");
    Rational d = v.deg();
    QuadNumber a_total = twisted_component(v, p.beta, 1);
    if (a_total.sign() <= 0) throw std::invalid_argument("needs positive twisted ch1");
    Rational disc_v = discriminant(v);

    // ch1 step: the quintic has Pic = Z*H, so a lives in degree*Z there; on
    // the surface full Z is permitted. ch2 contracts to half-integers.
    long long a_step = v.variety.dim == 3 ? v.variety.degree : 1;

    auto make = [&](const Rational& r, const Rational& a, const Rational& b,
                    const Rational* c_total) {
        if (v.variety.dim == 3) return ChernVector(v.variety, r, a, b, c_total ? *c_total : Rational(0));
        return ChernVector(v.variety, r, a, b);
    };

    std::vector<std::pair<ChernVector, ChernVector>> out;
    for (long long r1 = -max_rank; r1 <= max_rank; ++r1) {
        Rational rr1(r1);
        // twisted ch1 window: a1 in [beta*d*r1, beta*d*r1 + a_total]
        QuadNumber lo = p.beta * QuadNumber(d * rr1);
        QuadNumber hi = lo + a_total;
        BigInt a_lo = (lo / QuadNumber(a_step)).floor();
        BigInt a_hi = (hi / QuadNumber(a_step)).floor() + 1;
        for (BigInt ai = a_lo; ai <= a_hi; ++ai) {
            Rational a1 = Rational(ai) * a_step;
            QuadNumber a1_tw = QuadNumber(a1) - p.beta * QuadNumber(d * rr1);
            if (a1_tw.sign() < 0 || a1_tw > a_total) continue;
            // equal tilt slope: (b1 - alpha d r1) * a_total = (b - alpha d r) * a1_tw
            QuadNumber b1q = p.alpha * QuadNumber(d * rr1) +
                             (QuadNumber(v.b) - p.alpha * QuadNumber(d * v.r)) * a1_tw / a_total;
            if (!b1q.is_rational()) continue;
            Rational b1 = b1q.to_rational();
            Rational twice = 2 * b1;
            if (den(twice) != 1) continue;  // b must be a half-integer
            if (v.variety.dim == 3) {
                // parity: 2*ch2 = c^2 (mod 2) for ch1 = c*H
                BigInt c = num(a1) / v.variety.degree;
                if ((num(twice) - c) % 2 != 0) continue;
            }
            Rational r2 = v.r - rr1, a2 = v.a - a1, b2 = v.b - b1;
            // drop proportional splittings: no wall there
            if (rr1 * v.a == v.r * a1 && rr1 * v.b == v.r * b1 && a1 * v.b == v.a * b1) continue;
            ChernVector v1 = make(rr1, a1, b1, nullptr);
            Rational c2 = v.variety.dim == 3 ? v.ch3() : Rational(0);
            ChernVector v2 = make(r2, a2, b2, &c2);
            Rational d1 = discriminant(v1), d2 = discriminant(v2);
            if (d1 < 0 || d2 < 0 || d1 > disc_v || d2 > disc_v) continue;
            // canonical orientation so the swapped pair is not listed twice
            auto key = [&](const ChernVector& w) { return std::array<Rational, 3>{w.r, w.a, w.b}; };
            if (key(v2) < key(v1)) std::swap(v1, v2);
            out.emplace_back(std::move(v1), std::move(v2));
        }
    }
    auto lex = [](const std::pair<ChernVector, ChernVector>& l, const std::pair<ChernVector, ChernVector>& r) {
        auto k = [](const ChernVector& w) { return std::array<Rational, 3>{w.r, w.a, w.b}; };
        return std::array<std::array<Rational, 3>, 2>{k(l.first), k(l.second)} <
               std::array<std::array<Rational, 3>, 2>{k(r.first), k(r.second)};
    };
    std::sort(out.begin(), out.end(), lex);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace tiltstab

#endif
