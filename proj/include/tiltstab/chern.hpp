#ifndef TILTSTAB_CHERN_HPP
#define TILTSTAB_CHERN_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "quad.hpp"

namespace tiltstab {

// Polarized geometry preset. Chern data everywhere are the H-contracted
// numbers (H^n ch0, H^{n-1} ch1, H^{n-2} ch2, ch3), never classes.
struct Variety {
    std::string name;
    int dim = 3;
    long long degree = 0;              // H^n
    Rational canonical_multiple;       // K = k*H
    Rational chi_structure_sheaf;      // chi(O)
    std::optional<long long> curve_genus;

    bool operator==(const Variety& o) const { return name == o.name; }

    static const Variety& quintic() {
        static const Variety v{"quintic", 3, 5, Rational(0), Rational(0), std::nullopt};
        return v;
    }
    // Degree-4 del Pezzo, intersection of two quadrics.
    static const Variety& s22() {
        static const Variety v{"s22", 2, 4, Rational(-1), Rational(1), std::nullopt};
        return v;
    }
    // Intersection of a quadric and a quintic.
    static const Variety& s25() {
        static const Variety v{"s25", 2, 10, Rational(2), Rational(15), std::nullopt};
        return v;
    }
    // Genus-41 curve cut out by two quadrics and a quintic.
    static const Variety& c225() {
        static const Variety v{"c225", 1, 20, Rational(), Rational(), 41};
        return v;
    }

    static const Variety& by_name(const std::string& n) {
        if (n == "quintic") return quintic();
        if (n == "s22") return s22();
        if (n == "s25") return s25();
        if (n == "c225") return c225();
        throw std::invalid_argument("unknown variety: " + n);
    }
};

struct ChernVector {
    Variety variety;
    Rational r;  // ch0
    Rational a;  // H^{n-1} ch1
    Rational b;  // H^{n-2} ch2
    std::optional<Rational> c;  // ch3, present iff dim == 3

    ChernVector(Variety v, Rational r0, Rational a1, Rational b2,
                std::optional<Rational> c3 = std::nullopt)
        : variety(std::move(v)), r(std::move(r0)), a(std::move(a1)), b(std::move(b2)), c(std::move(c3)) {
        if (variety.dim == 3 && !c) throw std::invalid_argument("threefold vector needs ch3");
        if (variety.dim == 2 && c) throw std::invalid_argument("surface vector has no ch3");
    }

    Rational deg() const { return Rational(variety.degree); }
    Rational ch3() const { return c.value(); }

    bool operator==(const ChernVector& o) const {
        return variety == o.variety && r == o.r && a == o.a && b == o.b && c == o.c;
    }

    // Point (ch2/(deg*ch0), ch1/(deg*ch0)) in the wall-and-chamber plane.
    std::pair<Rational, Rational> plane_point() const {
        if (r == 0) throw std::invalid_argument("plane point needs ch0 != 0");
        return {b / (deg() * r), a / (deg() * r)};
    }
};

inline ChernVector quintic_vec(Rational r, Rational a, Rational b, Rational c) {
    return ChernVector(Variety::quintic(), std::move(r), std::move(a), std::move(b), std::move(c));
}
inline ChernVector s22_vec(Rational r, Rational a, Rational b) {
    return ChernVector(Variety::s22(), std::move(r), std::move(a), std::move(b));
}
inline ChernVector s25_vec(Rational r, Rational a, Rational b) {
    return ChernVector(Variety::s25(), std::move(r), std::move(a), std::move(b));
}

// ch(E(mH)) from ch(E): the multiplicative twist by e^{mH}.
inline ChernVector twist_by_line_bundle(const ChernVector& v, long long m) {
    Rational mm(m);
    Rational d = v.deg();
    Rational a = v.a + mm * d * v.r;
    Rational b = v.b + mm * v.a + mm * mm * d * v.r / 2;
    if (v.variety.dim == 3) {
        Rational c = v.ch3() + mm * v.b + mm * mm * v.a / 2 + mm * mm * mm * d * v.r / 6;
        return ChernVector(v.variety, v.r, a, b, c);
    }
    return ChernVector(v.variety, v.r, a, b);
}

// i-th twisted component ch_i^{beta H}, as an H-contracted number.
inline QuadNumber twisted_component(const ChernVector& v, const QuadNumber& beta, int i) {
    if (i < 0 || i > v.variety.dim) throw std::invalid_argument("component out of range");
    QuadNumber d{v.deg()}, r{v.r}, a{v.a}, b{v.b};
    switch (i) {
        case 0: return r;
        case 1: return a - beta * d * r;
        case 2: return b - beta * a + beta * beta * d * r / QuadNumber(2);
        default: {
            QuadNumber c{v.ch3()};
            return c - beta * b + beta * beta * a / QuadNumber(2) - beta * beta * beta * d * r / QuadNumber(6);
        }
    }
}

// Sign pattern of ch of the shifted derived dual E^vee[1].
inline ChernVector dual(const ChernVector& v) {
    if (v.variety.dim == 3) return ChernVector(v.variety, v.r, -v.a, v.b, -v.ch3());
    return ChernVector(v.variety, v.r, -v.a, v.b);
}

inline Rational euler_char(const ChernVector& v) {
    if (v.variety.dim == 3) {
        if (v.variety.name != "quintic") throw std::invalid_argument("unknown threefold");
        // td2 = (5/6) H^2, td1 = td3 = 0.
        return v.ch3() + Rational(5, 6) * v.a;
    }
    if (v.variety.name != "s22" && v.variety.name != "s25")
        throw std::invalid_argument("unknown surface");
    return v.b - v.variety.canonical_multiple / 2 * v.a + v.r * v.variety.chi_structure_sheaf;
}

// ch of the pushforward to `surface` of a rank-r slope-mu sheaf on a curve
// in |mH|: (0, m*deg*r, r*mu - r*m^2*deg/2).
inline ChernVector pushforward_curve_sheaf(const Variety& surface, long long m, const Rational& r,
                                           const Rational& mu) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    if (r <= 0) throw std::invalid_argument("rank must be positive");
    Rational d(surface.degree);
    Rational mm(m);
    return ChernVector(surface, Rational(0), mm * d * r, r * mu - r * mm * mm * d / 2);
}

// Character of E|_Y for Y in |2H| on the quintic; target is the S_{2,5} preset.
inline ChernVector restrict_to_divisor(const ChernVector& v, long long m) {
    if (m != 2) throw std::invalid_argument("only restriction to |2H| is supported");
    if (v.variety.dim != 3) throw std::invalid_argument("restriction needs a threefold vector");
    return s25_vec(v.r, 2 * v.a, 2 * v.b);
}

}  // namespace tiltstab

#endif
