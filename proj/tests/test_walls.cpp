#include <doctest.h>

#include <cstdlib>

#include "tiltstab/walls.hpp"

using namespace tiltstab;

TEST_CASE("gamma line crossings") {
    auto [b1, b2] = gamma_line_intersections(Rational(-2), QuadNumber(1));
    CHECK(b1 == QuadNumber(Rational(-9, 2)));
    CHECK(b2 == QuadNumber(Rational(1, 2)));
    CHECK(width_constraint(b1, b2));

    auto [c1, c2] = gamma_line_intersections(Rational(0), QuadNumber(0));
    CHECK(c1 == QuadNumber(Rational(-1, 2)));
    CHECK(c2 == QuadNumber(Rational(1, 2)));

    CHECK(width_constraint(QuadNumber(-3), QuadNumber(2)));
    CHECK_FALSE(width_constraint(QuadNumber(-4), QuadNumber(2)));

    // both crossings sit on the boundary curve
    auto on_curve = [](const Rational& s, const QuadNumber& alpha, const QuadNumber& y) {
        return gamma_curve(y) == QuadNumber(s) * y + alpha;
    };
    CHECK(on_curve(Rational(-2), QuadNumber(1), b1));
    CHECK(on_curve(Rational(-2), QuadNumber(1), b2));
}

TEST_CASE("gamma scan horizon") {
    // slope 100 outruns the default horizon; a bigger budget resolves it
    CHECK_THROWS_AS(gamma_line_intersections(Rational(100), QuadNumber(0)), std::runtime_error);
    setenv("TILTSTAB_SCAN_HORIZON", "300", 1);
    CHECK_NOTHROW(gamma_line_intersections(Rational(100), QuadNumber(0)));
    unsetenv("TILTSTAB_SCAN_HORIZON");
}

TEST_CASE("first wall estimate") {
    CHECK(first_wall_alpha_max(QuadNumber(Rational(1, 2))).semistable);
    CHECK(first_wall_alpha_max(mu_semistable_threshold()).semistable);
    FirstWall w10 = first_wall_alpha_max(QuadNumber(10));
    CHECK_FALSE(w10.semistable);
    CHECK(w10.alpha == QuadNumber(1));
    CHECK(first_wall_alpha_max(QuadNumber(2)).alpha == QuadNumber(Rational(1, 25)));
    CHECK(first_wall_alpha_max(QuadNumber(30)).alpha == QuadNumber(Rational(5, 2)));
    CHECK(first_wall_alpha_max(QuadNumber(40)).alpha == QuadNumber(3));
    CHECK_THROWS_AS(first_wall_alpha_max(QuadNumber(0)), std::domain_error);
    CHECK_THROWS_AS(first_wall_alpha_max(QuadNumber(20)), std::domain_error);
    CHECK_THROWS_AS(first_wall_alpha_max(QuadNumber(41)), std::domain_error);

    // exact vanishing at the sqrt(2) threshold
    QuadNumber t = mu_semistable_threshold();
    CHECK(QuadNumber(3) * t / QuadNumber(20) - t * t / QuadNumber(400) - QuadNumber(Rational(1, 4)) ==
          QuadNumber(0));
    // the two upper branches agree at 10 + 20*sqrt(2) with value 3*sqrt(2) - 3/2
    QuadNumber s = mu_branch_threshold();
    QuadNumber lin = QuadNumber(3) * s / QuadNumber(20) - QuadNumber(3);
    CHECK(lin == s / QuadNumber(5) - s * s / QuadNumber(400) - QuadNumber(Rational(5, 4)));
    CHECK(lin == sqrt2_multiple(Rational(-3, 2), Rational(3)));
    CHECK(first_wall_alpha_max(s).alpha == lin);
}

TEST_CASE("slope range of the HN factors") {
    CHECK(bn_range_iota(Rational(1)).status == BnRange::Status::semistable);
    BnRange r10 = bn_range_iota(Rational(10));
    CHECK(r10.status == BnRange::Status::bounded);
    CHECK(r10.upper == QuadNumber(0));
    CHECK(r10.lower == QuadNumber(Rational(-20, 9)));
    BnRange r30 = bn_range_iota(Rational(30));
    CHECK(r30.upper == QuadNumber(Rational(2, 3)));
    CHECK(r30.lower == QuadNumber(Rational(-12, 7)));
    BnRange r40 = bn_range_iota(Rational(40));
    CHECK(r40.upper == QuadNumber(1));
    CHECK(r40.lower == QuadNumber(Rational(-3, 2)));
    // branch agreement at 39
    CHECK(bn_range_iota(Rational(39)).upper == QuadNumber(Rational(7, 8)));
    CHECK(QuadNumber(Rational((23 * 39 - 610), (12 * 39 - 140))) == QuadNumber(Rational(39, 8) - 4));
    CHECK_THROWS_AS(bn_range_iota(Rational(15)), std::domain_error);
    CHECK_THROWS_AS(bn_range_iota(Rational(0)), std::domain_error);
}

TEST_CASE("triangle apex") {
    auto [x10, y10] = q_corner(Rational(10), Rational(1));
    CHECK(x10 == QuadNumber(0));
    CHECK(y10 == QuadNumber(2));
    auto [x40, y40] = q_corner(Rational(40), Rational(1));
    CHECK(x40 == QuadNumber(8));
    CHECK(y40 == QuadNumber(8));
    auto [x39, y39] = q_corner(Rational(39), Rational(1));
    CHECK(x39 == QuadNumber(7));
    CHECK(y39 == QuadNumber(8));
    CHECK_THROWS_AS(q_corner(Rational(1), Rational(1)), std::domain_error);
    CHECK_THROWS_AS(q_corner(Rational(10), Rational(0)), std::domain_error);
    // homogeneity in r and the defining ray equations
    for (const Rational& mu : {Rational(7), Rational(33), Rational(37), Rational(40)}) {
        auto [x1, y1] = q_corner(mu, Rational(1));
        auto [x3, y3] = q_corner(mu, Rational(3));
        CHECK(x3 == QuadNumber(3) * x1);
        CHECK(y3 == QuadNumber(3) * y1);
        BnRange range = bn_range_iota(mu);
        CHECK(x1 == range.upper * y1);
        QuadNumber xp{mu - 50}, yp{20};
        CHECK(xp - x1 == range.lower * (yp - y1));
    }
}

TEST_CASE("destabilizer search on the pushforward character") {
    ChernVector v = pushforward_curve_sheaf(Variety::s22(), 5, Rational(1), Rational(10));
    REQUIRE(v.a == 20);
    REQUIRE(v.b == -40);

    // the extremal wall is alpha = 1 - 2 beta; on it the search certifies a wall
    auto on_wall = destabilizer_search(v, {QuadNumber(1), QuadNumber(0)}, 4);
    REQUIRE_FALSE(on_wall.empty());
    bool found = false;
    for (const auto& [v1, v2] : on_wall) {
        CHECK(v1.r + v2.r == v.r);
        CHECK(v1.a + v2.a == v.a);
        CHECK(v1.b + v2.b == v.b);
        CHECK(discriminant(v1) >= 0);
        CHECK(discriminant(v2) >= 0);
        TiltPoint p{QuadNumber(1), QuadNumber(0)};
        Slope s1 = tilt_slope(v1, p), s2 = tilt_slope(v2, p);
        if (!s1.is_infinite() && !s2.is_infinite()) CHECK(s1.get() == s2.get());
        if (v2 == s22_vec(Rational(1), Rational(2), Rational(0))) found = true;
    }
    CHECK(found);
    // the same wall lower down
    CHECK_FALSE(destabilizer_search(v, {QuadNumber(Rational(1, 2)), QuadNumber(Rational(1, 4))}, 4).empty());
    // above the first wall nothing survives the discriminant pruning
    CHECK(destabilizer_search(v, {QuadNumber(Rational(3, 2)), QuadNumber(0)}, 4).empty());
    CHECK(destabilizer_search(v, {QuadNumber(Rational(11, 10)), QuadNumber(0)}, 4).empty());
    CHECK_THROWS_AS(destabilizer_search(v, {QuadNumber(1), QuadNumber(0)}, 0), std::invalid_argument);
}

TEST_CASE("destabilizer search on the quintic") {
    // O(H) is discriminant-0: every candidate splitting is pruned or proportional
    ChernVector oh = quintic_vec(Rational(1), Rational(5), Rational(5, 2), Rational(5, 6));
    CHECK(destabilizer_search(oh, {QuadNumber(1), QuadNumber(0)}, 3).empty());
}
