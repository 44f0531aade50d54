#ifndef TILTSTAB_RATIONAL_HPP
#define TILTSTAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <stdexcept>
#include <string>

namespace tiltstab {

using BigInt = boost::multiprecision::cpp_int;

// Reduced fraction with positive denominator; cpp_rational keeps both
// invariants canonically.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return numerator(r); }
inline BigInt den(const Rational& r) { return denominator(r); }

inline int sign_of(const Rational& r) { return r.sign(); }

inline Rational rat(long long n, long long d = 1) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Rational(n, d);
}

// Parses "p/q" or "p".
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt p(s.substr(0, slash));
        BigInt q(s.substr(slash + 1));
        if (q == 0) throw std::invalid_argument("zero denominator");
        if (q < 0) { p = -p; q = -q; }
        return Rational(p, q);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + s);
    }
}

inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt floor_rat(const Rational& r) { return floor_div(num(r), den(r)); }

inline Rational abs_rat(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Largest s with n = s^2 * d, d square-free. Returns {s, d}. n >= 0.
inline std::pair<BigInt, BigInt> square_free_split(BigInt n) {
    if (n < 0) throw std::invalid_argument("square_free_split: negative");
    if (n == 0) return {BigInt(0), BigInt(0)};
    BigInt s = 1, d = 1;
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int i = 0; i < e / 2; ++i) s *= p;
        if (e % 2) d *= p;
    }
    d *= n;  // leftover prime
    return {s, d};
}

}  // namespace tiltstab

#endif
