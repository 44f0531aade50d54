#include <doctest.h>

#include <random>

#include "tiltstab/bounds.hpp"

using namespace tiltstab;

TEST_CASE("quintic bound") {
    CHECK(bg_bound_quintic(Rational(1, 2)) == 0);
    CHECK(bg_bound_quintic(Rational(0)) == 0);
    CHECK(bg_bound_quintic(Rational(1)) == Rational(1, 2));
    CHECK(bg_bound_quintic(Rational(1, 10)) == Rational(-17, 200));
    CHECK(bg_bound_quintic(Rational(1, 4)) == Rational(-1, 8));
    CHECK(bg_bound_quintic(Rational(3, 4)) == Rational(1, 8));
    for (long long k = -10; k <= 10; ++k)
        CHECK(bg_bound_quintic(Rational(k, 10)) == bg_bound_quintic(Rational(-k, 10)));
    CHECK_THROWS_AS(bg_bound_quintic(Rational(11, 10)), std::domain_error);
}

TEST_CASE("degree-10 surface bound") {
    CHECK(bg_bound_s25(Rational(1, 10)) == Rational(-17, 200));
    CHECK(bg_bound_s25(Rational(1, 4)) == Rational(-1, 8));
    CHECK(bg_bound_s25(Rational(3, 4)) == Rational(1, 8));
    CHECK(bg_bound_s25(Rational(9, 10)) == Rational(63, 200));
    CHECK(bg_bound_s25(Rational(1, 20)) == Rational(3, 2) * Rational(1, 400) - Rational(1, 20));
    CHECK_THROWS_AS(bg_bound_s25(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(bg_bound_s25(Rational(1)), std::domain_error);
}

TEST_CASE("curve section bound table") {
    CHECK(clifford_c225(Rational(2)) == Rational(41, 40));
    CHECK(clifford_c225(Rational(5, 2)) == Rational(25, 24));
    CHECK(clifford_c225(Rational(10, 3)) == Rational(13, 12));
    CHECK(clifford_c225(Rational(10)) == 2);
    CHECK(clifford_c225(Rational(40)) == 13);
    CHECK(clifford_c225(Rational(30)) == 8);
    CHECK_THROWS_AS(clifford_c225(Rational(20)), std::domain_error);
    CHECK_THROWS_AS(clifford_c225(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(clifford_c225(Rational(41)), std::domain_error);
    // sharpness identity
    for (long long n = 1; n <= 4; ++n)
        CHECK(clifford_c225(Rational(10, n + 1)) * (2 * n * n + 2 * n) == 2 * n * n + 2 * n + 1);
}

TEST_CASE("envelope dominates the table") {
    CHECK(clifford_envelope(Rational(5)) == Rational(5, 4));
    CHECK(clifford_envelope(Rational(38)) == Rational(173, 15));
    CHECK_THROWS_AS(clifford_envelope(Rational(20)), std::domain_error);
    std::mt19937_64 rng(51);
    for (int i = 0; i < 200; ++i) {
        Rational mu = rng() % 2 ? Rational(2) + Rational(static_cast<long long>(rng() % 161), 20)
                                : Rational(35) + Rational(1 + static_cast<long long>(rng() % 60), 20);
        CHECK(clifford_envelope(mu) >= clifford_c225(mu));
    }
}

TEST_CASE("classical bound") {
    CHECK(classical_clifford(Rational(0), 41) == 1);
    CHECK(classical_clifford(Rational(40), 41) == 21);
    CHECK_THROWS_AS(classical_clifford(Rational(-1), 41), std::domain_error);
    CHECK_THROWS_AS(classical_clifford(Rational(42), 41), std::domain_error);
    std::mt19937_64 rng(53);
    for (int i = 0; i < 100; ++i) {
        Rational mu = rng() % 2 ? Rational(1 + static_cast<long long>(rng() % 100), 10)
                                : Rational(30) + Rational(static_cast<long long>(rng() % 101), 10);
        CHECK(classical_clifford(mu, 41) >= clifford_c225(mu));
    }
}

TEST_CASE("club cases") {
    CHECK(club(QuadNumber(0), QuadNumber(1)) == QuadNumber(Rational(1, 2)));
    CHECK(club(QuadNumber(Rational(-1, 2)), QuadNumber(1)) == QuadNumber(Rational(1, 4)));
    CHECK(club(QuadNumber(-40), QuadNumber(18)) == QuadNumber(1));
    CHECK(club(QuadNumber(-1), QuadNumber(1)) == QuadNumber(Rational(1, 8)));  // ratio -1, n=2
    CHECK_THROWS_AS(club(QuadNumber(1), QuadNumber(0)), std::invalid_argument);
    CHECK_THROWS_AS(club(QuadNumber(1), QuadNumber(-1)), std::invalid_argument);
    // quadratic-field input
    QuadNumber s2 = sqrt2_multiple(0, 1);
    CHECK(club(s2, QuadNumber(4)) == QuadNumber(2) + s2);
}

TEST_CASE("club homogeneity and semicontinuity") {
    std::mt19937_64 rng(57);
    for (int i = 0; i < 200; ++i) {
        Rational x(static_cast<long long>(rng() % 81) - 40, 1 + static_cast<long long>(rng() % 5));
        Rational y(1 + static_cast<long long>(rng() % 40), 1 + static_cast<long long>(rng() % 5));
        Rational lam(1 + static_cast<long long>(rng() % 12), 1 + static_cast<long long>(rng() % 5));
        CHECK(club(QuadNumber(lam * x), QuadNumber(lam * y)) ==
              QuadNumber(lam) * club(QuadNumber(x), QuadNumber(y)));
        CHECK(club(QuadNumber(x), QuadNumber(y)).sign() > 0);
    }
    // at x/y = -n/2 the ray value dominates both one-sided limits
    for (long long n = 1; n <= 5; ++n) {
        Rational y(1);
        Rational x(-n, 2);
        Rational ray = club(QuadNumber(x), QuadNumber(y)).to_rational();  // 1/(4n)
        CHECK(ray == Rational(1, 4 * n));
        // limit from the shallow side (ratio > -n/2): case n-1 formula at x
        Rational shallow = n == 1 ? y / 2 + x
                                  : Rational(2 * (n - 1) + 1, 2 * (2 * (n - 1) * (n - 1) + 2 * (n - 1) + 1)) * y +
                                        x / (2 * (n - 1) * (n - 1) + 2 * (n - 1) + 1);
        Rational steep = Rational(2 * n + 1, 2 * (2 * n * n + 2 * n + 1)) * y +
                         x / (2 * n * n + 2 * n + 1);
        CHECK(ray >= shallow);
        CHECK(ray >= steep);
    }
}

TEST_CASE("section bound on the del Pezzo") {
    // O(H): nu_BN = 1/2 and h0 = 5
    ChernVector oh = s22_vec(Rational(1), Rational(4), Rational(2));
    CHECK(bn_section_bound_s22(oh) == 5);
    CHECK(bn_section_bound_s22(oh) == euler_char(oh));
    // boundary ray nu_BN = -1/2
    CHECK(bn_section_bound_s22(s22_vec(Rational(0), Rational(4), Rational(-2))) == 1);
    CHECK_THROWS_AS(bn_section_bound_s22(s22_vec(Rational(1), Rational(-1), Rational(0))),
                    std::invalid_argument);
    // always r + club(b, a)
    std::mt19937_64 rng(59);
    for (int i = 0; i < 500; ++i) {
        Rational r(static_cast<long long>(rng() % 11) - 5);
        Rational a(1 + static_cast<long long>(rng() % 30));
        Rational b(static_cast<long long>(rng() % 121) - 60, 2);
        ChernVector v = s22_vec(r, a, b);
        CHECK(bn_section_bound_s22(v) ==
              r + club(QuadNumber(b), QuadNumber(a)).to_rational());
    }
}
