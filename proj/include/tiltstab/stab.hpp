#ifndef TILTSTAB_STAB_HPP
#define TILTSTAB_STAB_HPP

#include <optional>
#include <utility>

#include "chern.hpp"

namespace tiltstab {

// Finite value or +infinity (the zero-denominator convention for slopes).
struct Slope {
    std::optional<QuadNumber> value;  // nullopt = +infinity

    static Slope infinity() { return {std::nullopt}; }
    static Slope finite(QuadNumber v) { return {std::move(v)}; }
    bool is_infinite() const { return !value.has_value(); }
    const QuadNumber& get() const { return value.value(); }

    bool operator==(const Slope&) const = default;
};

struct TiltPoint {
    QuadNumber alpha;
    QuadNumber beta;
};

// Locus u*x + v*y = w in the plane with x = ch2-coordinate, y = ch1-coordinate,
// normalized so the first nonzero of (u, v) is 1.
struct Wall {
    QuadNumber u, v, w;

    Wall(QuadNumber u0, QuadNumber v0, QuadNumber w0) : u(std::move(u0)), v(std::move(v0)), w(std::move(w0)) {
        if (u.is_zero() && v.is_zero()) throw std::invalid_argument("degenerate wall");
        const QuadNumber& lead = u.is_zero() ? v : u;
        w /= lead;
        v /= lead;
        u /= lead;
    }

    bool contains(const QuadNumber& x, const QuadNumber& y) const { return u * x + v * y == w; }
    bool operator==(const Wall&) const = default;
};

inline Slope mu_slope(const ChernVector& v) {
    if (v.r == 0) return Slope::infinity();
    return Slope::finite(QuadNumber(v.a / (v.deg() * v.r)));
}

// nu_{alpha,beta,H} = (ch2 - alpha*deg*ch0) / ch1^{beta H}
inline Slope tilt_slope(const ChernVector& v, const TiltPoint& p) {
    QuadNumber denom = twisted_component(v, p.beta, 1);
    if (denom.is_zero()) return Slope::infinity();
    QuadNumber numer = QuadNumber(v.b) - p.alpha * QuadNumber(v.deg() * v.r);
    return Slope::finite(numer / denom);
}

// The (alpha', beta) convention: nu' = nu_{(alpha'^2+beta^2)/2, beta} - beta.
inline Slope tilt_slope_primed(const ChernVector& v, const QuadNumber& alpha_prime, const QuadNumber& beta) {
    if (alpha_prime.sign() <= 0) throw std::invalid_argument("alpha' must be positive");
    QuadNumber alpha = (alpha_prime * alpha_prime + beta * beta) / QuadNumber(2);
    Slope s = tilt_slope(v, {alpha, beta});
    if (s.is_infinite()) return s;
    return Slope::finite(s.get() - beta);
}

inline Slope bn_slope(const ChernVector& v) {
    if (v.a == 0) return Slope::infinity();
    return Slope::finite(QuadNumber(v.b / v.a));
}

// H-discriminant (ch1)^2 - 2 ch0 * ch2, twist-invariant.
inline Rational discriminant(const ChernVector& v) {
    return v.a * v.a - 2 * v.deg() * v.r * v.b;
}

// Q_{alpha,beta} = (2 alpha - beta^2) Delta + 4 (ch2^b)^2 - 6 ch1^b ch3^b
inline QuadNumber q_form(const ChernVector& v, const TiltPoint& p) {
    if (v.variety.dim != 3) throw std::invalid_argument("q_form needs a threefold");
    QuadNumber delta{discriminant(v)};
    QuadNumber c1 = twisted_component(v, p.beta, 1);
    QuadNumber c2 = twisted_component(v, p.beta, 2);
    QuadNumber c3 = twisted_component(v, p.beta, 3);
    return (QuadNumber(2) * p.alpha - p.beta * p.beta) * delta + QuadNumber(4) * c2 * c2 -
           QuadNumber(6) * c1 * c3;
}

inline QuadNumber collinear_det3(const QuadNumber& a1, const QuadNumber& b1, const QuadNumber& c1,
                                 const QuadNumber& a2, const QuadNumber& b2, const QuadNumber& c2,
                                 const QuadNumber& a3, const QuadNumber& b3, const QuadNumber& c3) {
    return a1 * (b2 * c3 - b3 * c2) - b1 * (a2 * c3 - a3 * c2) + c1 * (a2 * b3 - a3 * b2);
}

// det(1 alpha beta; deg*r_E ch2_E ch1_E; deg*r_F ch2_F ch1_F); zero iff the
// tilt point and both character points sit on one wall.
inline QuadNumber collinear_det(const TiltPoint& p, const ChernVector& e, const ChernVector& f) {
    return collinear_det3(QuadNumber(1), p.alpha, p.beta,
                          QuadNumber(e.deg() * e.r), QuadNumber(e.b), QuadNumber(e.a),
                          QuadNumber(f.deg() * f.r), QuadNumber(f.b), QuadNumber(f.a));
}

// det(1 alpha beta; 1 alpha0 beta0; deg*r ch2 ch1)
inline QuadNumber collinear_det(const TiltPoint& p, const ChernVector& e, const TiltPoint& p0) {
    return collinear_det3(QuadNumber(1), p.alpha, p.beta,
                          QuadNumber(1), p0.alpha, p0.beta,
                          QuadNumber(e.deg() * e.r), QuadNumber(e.b), QuadNumber(e.a));
}

// Verifies ch1^{beta} * Q_{alpha0,beta0} == ch1^{beta0} * Q_{alpha,beta} on a
// wall. The inputs must be collinear with p_H(v).
inline bool wall_q_identity(const ChernVector& v, const TiltPoint& p0, const TiltPoint& p1) {
    QuadNumber det = collinear_det3(QuadNumber(1), p1.alpha, p1.beta,
                                    QuadNumber(1), p0.alpha, p0.beta,
                                    QuadNumber(v.deg() * v.r), QuadNumber(v.b), QuadNumber(v.a));
    if (!det.is_zero()) throw std::invalid_argument("tilt points not on a common wall");
    QuadNumber lhs = twisted_component(v, p1.beta, 1) * q_form(v, p0);
    QuadNumber rhs = twisted_component(v, p0.beta, 1) * q_form(v, p1);
    return lhs == rhs;
}

inline Wall wall_through(const QuadNumber& x1, const QuadNumber& y1, const QuadNumber& x2,
                         const QuadNumber& y2) {
    if (x1 == x2 && y1 == y2) throw std::invalid_argument("coincident points");
    QuadNumber u = y2 - y1;
    QuadNumber v = x1 - x2;
    QuadNumber w = u * x1 + v * y1;
    return Wall(u, v, w);
}

// Piecewise-linear lower boundary of the S22 stability region:
// Gamma(x) = x^2/2 - gamma(x) with gamma 1-periodic, = t^2/2 - t/2 + 1/4 on
// (0,1) and 0 at integers. Linear on each unit interval, value k^2/2 at x=k.
inline QuadNumber gamma_curve(const QuadNumber& beta) {
    BigInt k = beta.floor();
    QuadNumber kq{Rational(k)};
    if (beta == kq) return kq * kq / QuadNumber(2);
    // (k + 1/2) x - (k^2 + k)/2 - 1/4
    QuadNumber slope = kq + QuadNumber(Rational(1, 2));
    QuadNumber off = (kq * kq + kq) / QuadNumber(2) + QuadNumber(Rational(1, 4));
    return slope * beta - off;
}

inline bool stability_region(const Variety& variety, const TiltPoint& p) {
    if (variety.name == "s22") return p.alpha > gamma_curve(p.beta);
    return p.alpha > p.beta * p.beta / QuadNumber(2);
}

// Integer beta0 placing the twisted Brill-Noether ratio ch2^{b0}/ch1^{b0} in
// [-1/2, 1/2]; the smaller integer wins when two qualify.
inline BigInt choose_integer_beta0(const ChernVector& v) {
    if (v.variety.dim != 3) throw std::invalid_argument("needs a threefold");
    Rational delta = discriminant(v);
    if (delta < 0) throw std::invalid_argument("negative discriminant");
    QuadNumber center;
    if (v.r != 0) {
        Rational dr = v.deg() * v.r;
        Rational under = delta / (dr * dr) + Rational(1, 4);
        auto roots = solve_quadratic(Rational(1), Rational(0), -under);
        QuadNumber root = roots.back();  // +sqrt(under)
        QuadNumber base{v.a / dr};
        center = v.r > 0 ? base - root : base + root;
    } else {
        if (v.a == 0) throw std::invalid_argument("zero ch0 and ch1");
        // the window ch2^{b0}/ch1^{b0} in [-1/2,1/2] forces b0 near ch2/ch1
        center = QuadNumber(v.b / v.a);
    }
    QuadNumber half{Rational(1, 2)};
    BigInt lo = (center - half).floor();
    std::optional<BigInt> best;
    for (BigInt n = lo; n <= lo + 2; ++n) {
        QuadNumber nq{Rational(n)};
        if (nq < center - half || nq > center + half) continue;
        Rational a0 = v.a - Rational(n) * v.deg() * v.r;
        Rational nn(n);
        Rational b0 = v.b - nn * v.a + nn * nn * v.deg() * v.r / 2;
        if (a0 == 0) {
            // both twisted components vanish: the ratio degenerates to 0
            if (b0 != 0) continue;
        } else {
            Rational ratio = b0 / a0;
            if (ratio < Rational(-1, 2) || ratio > Rational(1, 2)) continue;
        }
        // two integers can qualify when the ratio hits +-1/2 exactly; the
        // twist closest to zero (then the smaller one) wins
        auto key = [](const BigInt& m) { return std::pair<BigInt, BigInt>{abs(m), m}; };
        if (!best || key(n) < key(*best)) best = n;
    }
    if (!best) throw std::invalid_argument("no valid integer beta0");
    return *best;
}

// Central charge Z_{alpha,beta,H} = -(ch2 - alpha*deg*ch0) + i*ch1^{beta H}.
inline std::pair<QuadNumber, QuadNumber> central_charge(const ChernVector& v, const TiltPoint& p) {
    QuadNumber re = -(QuadNumber(v.b) - p.alpha * QuadNumber(v.deg() * v.r));
    QuadNumber im = twisted_component(v, p.beta, 1);
    return {re, im};
}

// Z^{a,b}_{alpha,beta,H} = (-ch3^b + b*ch2^b + a*ch1^b) + i(ch2^b - alpha^2/2*ch0)
inline std::pair<QuadNumber, QuadNumber> central_charge_ab(const ChernVector& v, const QuadNumber& alpha,
                                                           const QuadNumber& beta, const QuadNumber& a,
                                                           const QuadNumber& b) {
    if (v.variety.dim != 3) throw std::invalid_argument("needs a threefold");
    QuadNumber c1 = twisted_component(v, beta, 1);
    QuadNumber c2 = twisted_component(v, beta, 2);
    QuadNumber c3 = twisted_component(v, beta, 3);
    QuadNumber re = -c3 + b * c2 + a * c1;
    QuadNumber im = c2 - alpha * alpha / QuadNumber(2) * QuadNumber(v.deg() * v.r);
    return {re, im};
}

// Z_{beta,t,H} = (-ch3^b + t^2/2*ch1^b) + i(t*ch2^b - 5t^3/6*ch0)
inline std::pair<QuadNumber, QuadNumber> central_charge_large_volume(const ChernVector& v,
                                                                     const QuadNumber& beta,
                                                                     const QuadNumber& t) {
    if (v.variety.dim != 3) throw std::invalid_argument("needs a threefold");
    QuadNumber c1 = twisted_component(v, beta, 1);
    QuadNumber c2 = twisted_component(v, beta, 2);
    QuadNumber c3 = twisted_component(v, beta, 3);
    QuadNumber re = -c3 + t * t / QuadNumber(2) * c1;
    QuadNumber im = t * c2 - QuadNumber(5) * t * t * t / QuadNumber(6) * QuadNumber(v.deg() * v.r);
    return {re, im};
}

// alpha^2 + (beta - floor(beta) - 1/2)^2 > 1/4  and  a > alpha^2/6 + |b|*alpha/2
inline bool family_params_valid(const QuadNumber& alpha, const QuadNumber& beta, const QuadNumber& a,
                                const QuadNumber& b) {
    QuadNumber frac = beta - QuadNumber(Rational(beta.floor())) - QuadNumber(Rational(1, 2));
    if (!(alpha * alpha + frac * frac > QuadNumber(Rational(1, 4)))) return false;
    QuadNumber abs_b = b.sign() < 0 ? -b : b;
    return a > alpha * alpha / QuadNumber(6) + abs_b * alpha / QuadNumber(2);
}

}  // namespace tiltstab

#endif
