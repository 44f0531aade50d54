#ifndef TILTSTAB_BOUNDS_HPP
#define TILTSTAB_BOUNDS_HPP

#include <vector>

#include "chern.hpp"

namespace tiltstab {

// One piece: c2*x^2 + c1*x + c0 on an interval with open/closed ends.
struct BoundPiece {
    Rational lo, hi;
    bool lo_open = false, hi_open = false;
    Rational c2, c1, c0;

    bool contains(const Rational& x) const {
        if (x < lo || (lo_open && x == lo)) return false;
        if (x > hi || (hi_open && x == hi)) return false;
        return true;
    }
    Rational eval(const Rational& x) const { return c2 * x * x + c1 * x + c0; }
};

// Piecewise bound; overlapping pieces are merged with the combine mode
// (min for "moreover the stronger bound", max for rows of max{...}).
struct PiecewiseBound {
    enum class Combine { min_of, max_of };
    Combine combine = Combine::min_of;
    std::vector<BoundPiece> pieces;

    Rational eval(const Rational& x) const {
        bool found = false;
        Rational best;
        for (const auto& p : pieces) {
            if (!p.contains(x)) continue;
            Rational v = p.eval(x);
            if (!found) { best = v; found = true; continue; }
            if (combine == Combine::min_of ? v < best : v > best) best = v;
        }
        if (!found) throw std::domain_error("value out of bound domain");
        return best;
    }

    // Limit from the left: pieces whose interior lies left of x and whose
    // closure reaches x.
    Rational eval_left_limit(const Rational& x) const {
        bool found = false;
        Rational best;
        for (const auto& p : pieces) {
            if (!(p.lo < x && x <= p.hi)) continue;
            Rational v = p.eval(x);
            if (!found) { best = v; found = true; continue; }
            if (combine == Combine::min_of ? v < best : v > best) best = v;
        }
        if (!found) throw std::domain_error("no piece to the left");
        return best;
    }
};

namespace detail {

inline const PiecewiseBound& bg_quintic_table() {
    static const PiecewiseBound t{PiecewiseBound::Combine::min_of,
        {
            {Rational(0), Rational(1, 4), false, false, Rational(0), Rational(-1, 2), Rational(0)},
            {Rational(1, 4), Rational(3, 4), false, false, Rational(0), Rational(1, 2), Rational(-1, 4)},
            {Rational(3, 4), Rational(1), false, false, Rational(0), Rational(3, 2), Rational(-1)},
            // stronger parabola near the ends
            {Rational(0), Rational(1, 10), false, false, Rational(3, 2), Rational(-1), Rational(0)},
            {Rational(9, 10), Rational(1), false, false, Rational(3, 2), Rational(-1), Rational(0)},
        }};
    return t;
}

inline const PiecewiseBound& bg_s25_table() {
    static const PiecewiseBound t{PiecewiseBound::Combine::min_of,
        {
            {Rational(0), Rational(1, 10), true, false, Rational(3, 2), Rational(-1), Rational(0)},
            {Rational(1, 10), Rational(1, 4), false, false, Rational(0), Rational(-4, 15), Rational(-7, 120)},
            {Rational(1, 4), Rational(3, 4), false, false, Rational(0), Rational(1, 2), Rational(-1, 4)},
            {Rational(3, 4), Rational(9, 10), false, false, Rational(0), Rational(19, 15), Rational(-33, 40)},
            {Rational(9, 10), Rational(1), false, true, Rational(3, 2), Rational(-1), Rational(0)},
        }};
    return t;
}

inline const PiecewiseBound& clifford_table() {
    static const PiecewiseBound t{PiecewiseBound::Combine::max_of,
        {
            {Rational(0), Rational(2), true, true, Rational(0), Rational(1, 41), Rational(40, 41)},
            {Rational(2), Rational(5, 2), false, true, Rational(0), Rational(4, 125), Rational(24, 25)},
            {Rational(2), Rational(5, 2), false, true, Rational(0), Rational(33, 1240), Rational(241, 248)},
            {Rational(5, 2), Rational(10, 3), false, true, Rational(0), Rational(3, 65), Rational(12, 13)},
            {Rational(5, 2), Rational(10, 3), false, true, Rational(0), Rational(19, 612), Rational(295, 306)},
            {Rational(10, 3), Rational(5), false, true, Rational(0), Rational(2, 25), Rational(4, 5)},
            {Rational(10, 3), Rational(5), false, true, Rational(0), Rational(7, 170), Rational(193, 204)},
            {Rational(5), Rational(10), false, false, Rational(0), Rational(1, 5), Rational(0)},
            {Rational(5), Rational(10), false, false, Rational(0), Rational(9, 124), Rational(55, 62)},
            {Rational(30), Rational(37), false, false, Rational(0), Rational(2, 5), Rational(-4)},
            {Rational(37), Rational(40), false, false, Rational(0), Rational(11, 15), Rational(-49, 3)},
        }};
    return t;
}

inline const PiecewiseBound& clifford_envelope_table() {
    static const PiecewiseBound t{PiecewiseBound::Combine::max_of,
        {
            {Rational(2), Rational(5), false, false, Rational(0), Rational(7, 120), Rational(109, 120)},
            {Rational(5), Rational(10), false, false, Rational(0), Rational(3, 20), Rational(1, 2)},
            {Rational(35), Rational(38), true, false, Rational(0), Rational(23, 45), Rational(-71, 9)},
            {Rational(38), Rational(40), true, false, Rational(0), Rational(11, 15), Rational(-49, 3)},
        }};
    return t;
}

}  // namespace detail

// Upper bound for Hch2/(H^3 rk) of a slope-stable sheaf on the quintic, as a
// function of x = H^2 ch1/(H^3 rk). Symmetric in x <-> -x.
inline Rational bg_bound_quintic(const Rational& x) {
    Rational ax = abs_rat(x);
    if (ax > 1) throw std::domain_error("|x| must be <= 1");
    return detail::bg_quintic_table().eval(ax);
}

// Same shape of bound for the degree-10 surface, x in (0,1).
inline Rational bg_bound_s25(const Rational& x) {
    if (x <= 0 || x >= 1) throw std::domain_error("x must lie in (0,1)");
    return detail::bg_s25_table().eval(x);
}

// h^0/r bound for semistable bundles on the degree-20 genus-41 curve; the
// table proves nothing on (10,30) and we refuse to extrapolate there.
inline Rational clifford_c225(const Rational& mu) {
    if (mu <= 0 || (mu > 10 && mu < 30) || mu > 40)
        throw std::domain_error("mu must lie in (0,10] or [30,40]");
    return detail::clifford_table().eval(mu);
}

// Left limit of the table row ending at mu (the open-circle figure values).
inline Rational clifford_c225_left_limit(const Rational& mu) {
    return detail::clifford_table().eval_left_limit(mu);
}

// Simplified linear envelope dominating clifford_c225 on [2,10] u (35,40].
inline Rational clifford_envelope(const Rational& mu) {
    if (mu < 2 || (mu > 10 && mu <= 35) || mu > 40)
        throw std::domain_error("mu must lie in [2,10] or (35,40]");
    return detail::clifford_envelope_table().eval(mu);
}

// The classical h^0/r <= 1 + mu/2 on a genus-g curve.
inline Rational classical_clifford(const Rational& mu, long long g) {
    if (mu < 0 || mu > Rational(g)) throw std::domain_error("mu must lie in [0,g]");
    return 1 + mu / 2;
}

// Section-count weight of an edge vector (x,y) with y > 0:
//   y/2 + x                                  when x/y > -1/2
//   y/(4n)                                   when x/y = -n/2
//   (2n+1)/(4n^2+4n+2)*y + x/(2n^2+2n+1)     when -(n+1)/2 < x/y < -n/2
inline QuadNumber club(const QuadNumber& x, const QuadNumber& y) {
    if (y.sign() <= 0) throw std::invalid_argument("club needs y > 0");
    QuadNumber ratio = x / y;
    if (ratio > QuadNumber(Rational(-1, 2))) return y / QuadNumber(2) + x;
    QuadNumber t = QuadNumber(-2) * ratio;  // >= 1
    BigInt n = t.floor();
    if (t == QuadNumber(Rational(n))) return y / QuadNumber(Rational(4 * n));
    Rational nn(n);
    Rational den = 2 * nn * nn + 2 * nn + 1;
    return QuadNumber((2 * nn + 1) / (2 * den)) * y + x / QuadNumber(den);
}

// Section bound r + club(ch2, Hch1) for a Brill-Noether semistable object on
// the degree-4 del Pezzo; a = 0 degenerates to the first case r + ch2.
inline Rational bn_section_bound_s22(const ChernVector& v) {
    if (v.variety.name != "s22") throw std::invalid_argument("needs an s22 vector");
    if (v.a < 0) throw std::invalid_argument("needs Hch1 >= 0");
    if (v.a == 0) return v.r + v.b;
    return v.r + club(QuadNumber(v.b), QuadNumber(v.a)).to_rational();
}

}  // namespace tiltstab

#endif
