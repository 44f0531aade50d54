#ifndef TILTSTAB_QUAD_HPP
#define TILTSTAB_QUAD_HPP

#include <cmath>
#include <compare>
#include <cstdint>
#include <vector>

#include "rational.hpp"

namespace tiltstab {

// Element a + b*sqrt(d) of a real quadratic field Q[sqrt(d)].
// Canonical form: d square-free; b == 0 implies d == 0.
class QuadNumber {
  public:
    QuadNumber() : a_(0), b_(0), d_(0) {}
    QuadNumber(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT(google-explicit-constructor)
    QuadNumber(long long a) : a_(a), b_(0), d_(0) {}            // NOLINT(google-explicit-constructor)

    QuadNumber(Rational a, Rational b, BigInt d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 0) throw std::invalid_argument("negative radicand");
        auto [s, sf] = square_free_split(d_);
        b_ *= Rational(s);
        d_ = sf;
        if (d_ <= 1) {  // sqrt(0)=0, sqrt(1)=1
            if (d_ == 1) a_ += b_;
            b_ = 0;
            d_ = 0;
        }
        if (b_ == 0) d_ = 0;
    }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_coeff() const { return b_; }
    const BigInt& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    // Throws when both operands carry distinct nonzero radicands.
    static BigInt common_radicand(const QuadNumber& x, const QuadNumber& y) {
        if (x.b_ == 0) return y.d_;
        if (y.b_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::invalid_argument("mixed radicands");
        return x.d_;
    }

    int sign() const {
        if (b_ == 0) return sign_of(a_);
        if (a_ == 0) return sign_of(b_);
        int sa = sign_of(a_), sb = sign_of(b_);
        if (sa == sb) return sa;
        // a and b*sqrt(d) compete: compare a^2 with b^2*d.
        Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
        if (lhs == rhs) return 0;
        return lhs > rhs ? sa : sb;
    }

    QuadNumber operator-() const { QuadNumber r; r.a_ = -a_; r.b_ = -b_; r.d_ = d_; return r; }

    friend QuadNumber operator+(const QuadNumber& x, const QuadNumber& y) {
        BigInt d = common_radicand(x, y);
        QuadNumber r;
        r.a_ = x.a_ + y.a_;
        r.b_ = x.b_ + y.b_;
        r.d_ = r.b_ == 0 ? BigInt(0) : d;
        return r;
    }
    friend QuadNumber operator-(const QuadNumber& x, const QuadNumber& y) { return x + (-y); }

    friend QuadNumber operator*(const QuadNumber& x, const QuadNumber& y) {
        BigInt d = common_radicand(x, y);
        QuadNumber r;
        r.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(d);
        r.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        r.d_ = r.b_ == 0 ? BigInt(0) : d;
        return r;
    }

    friend QuadNumber operator/(const QuadNumber& x, const QuadNumber& y) {
        if (y.is_zero()) throw std::invalid_argument("division by zero");
        BigInt d = common_radicand(x, y);
        // 1/(a+b*sqrt d) = (a-b*sqrt d)/(a^2-b^2 d); the norm is nonzero for
        // square-free d.
        Rational nrm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);
        QuadNumber conj;
        conj.a_ = y.a_ / nrm;
        conj.b_ = -y.b_ / nrm;
        conj.d_ = conj.b_ == 0 ? BigInt(0) : d;
        return x * conj;
    }

    QuadNumber& operator+=(const QuadNumber& o) { return *this = *this + o; }
    QuadNumber& operator-=(const QuadNumber& o) { return *this = *this - o; }
    QuadNumber& operator*=(const QuadNumber& o) { return *this = *this * o; }
    QuadNumber& operator/=(const QuadNumber& o) { return *this = *this / o; }

    friend bool operator==(const QuadNumber& x, const QuadNumber& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }

    friend std::strong_ordering operator<=>(const QuadNumber& x, const QuadNumber& y) {
        int s = (x - y).sign();
        if (s < 0) return std::strong_ordering::less;
        if (s > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    double to_double() const {
        double v = tiltstab::to_double(a_);
        if (b_ != 0) v += tiltstab::to_double(b_) * std::sqrt(d_.convert_to<double>());
        return v;
    }

    // Requires a rational value.
    Rational to_rational() const {
        if (b_ != 0) throw std::invalid_argument("irrational value");
        return a_;
    }

    BigInt floor() const {
        if (b_ == 0) return floor_rat(a_);
        BigInt n = BigInt(std::floor(to_double()));
        while (*this < QuadNumber(Rational(n))) --n;
        while (*this >= QuadNumber(Rational(n + 1))) ++n;
        return n;
    }

    std::string str() const {
        std::string s = tiltstab::to_string(a_);
        if (b_ != 0) {
            s += (b_ > 0 ? "+" : "");
            s += tiltstab::to_string(b_) + "*sqrt(" + d_.str() + ")";
        }
        return s;
    }

  private:
    Rational a_, b_;
    BigInt d_;
};

inline QuadNumber quad(long long a_num, long long a_den, long long b_num, long long b_den, long long d) {
    return QuadNumber(Rational(a_num, a_den), Rational(b_num, b_den), BigInt(d));
}

inline QuadNumber sqrt2_multiple(const Rational& a, const Rational& b) {
    return QuadNumber(a, b, BigInt(2));
}

// Real roots of A x^2 + B x + C, ascending; a double root appears twice.
// A == 0 falls back to the linear equation.
inline std::vector<QuadNumber> solve_quadratic(const Rational& A, const Rational& B, const Rational& C) {
    if (A == 0) {
        if (B == 0) {
            if (C == 0) throw std::invalid_argument("degenerate");
            return {};
        }
        return {QuadNumber(-C / B)};
    }
    Rational disc = B * B - 4 * A * C;
    if (disc < 0) return {};
    // sqrt(p/q) = sqrt(p*q)/q = (s/q) * sqrt(d)
    BigInt pq = num(disc) * den(disc);
    auto [s, d] = square_free_split(pq);
    Rational root_rat(s, den(disc));  // rational part of sqrt(disc) when d<=1
    QuadNumber sq = (d <= 1) ? QuadNumber(root_rat * Rational(d))
                             : QuadNumber(Rational(0), root_rat, d);
    QuadNumber half_b(-B / (2 * A));
    QuadNumber spread = sq / QuadNumber(2 * A);
    QuadNumber r1 = half_b - spread, r2 = half_b + spread;
    if (r1 > r2) std::swap(r1, r2);
    return {r1, r2};
}

}  // namespace tiltstab

#endif
