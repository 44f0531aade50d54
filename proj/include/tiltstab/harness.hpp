#ifndef TILTSTAB_HARNESS_HPP
#define TILTSTAB_HARNESS_HPP

#include <random>
#include <sstream>

#include "bounds.hpp"
#include "polygon.hpp"
#include "stab.hpp"
#include "svg.hpp"
#include "walls.hpp"

namespace tiltstab {

struct Failure {
    std::string input, expected, got;
};

struct VerificationReport {
    std::string suite;
    long long cases_run = 0;
    std::vector<Failure> failures;
    std::vector<std::string> notes;

    bool pass() const { return failures.empty(); }

    void check(bool ok, const std::string& input, const std::string& expected, const std::string& got) {
        ++cases_run;
        if (!ok) failures.push_back({input, expected, got});
    }
    void check_eq(const Rational& got, const Rational& expected, const std::string& input) {
        check(got == expected, input, to_string(expected), to_string(got));
    }
    void check_eq(const QuadNumber& got, const QuadNumber& expected, const std::string& input) {
        check(got == expected, input, expected.str(), got.str());
    }
    void check_ge0(const QuadNumber& got, const std::string& input) {
        check(got.sign() >= 0, input, ">= 0", got.str());
    }
};

inline std::string render_report(const VerificationReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.pass() ? "pass" : "FAIL") << " (" << r.cases_run
       << " cases, " << r.failures.size() << " failures)\n";
    for (const auto& f : r.failures)
        os << "  counterexample: " << f.input << " expected " << f.expected << " got " << f.got << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

namespace detail {

// Deterministic sampler. uniform_int_distribution is not portable across
// standard libraries, so raw modulo reduction is used on purpose.
struct Rng {
    std::mt19937_64 g;
    explicit Rng(unsigned long long seed) : g(seed) {}

    long long uniform(long long lo, long long hi) {
        return lo + static_cast<long long>(g() % static_cast<unsigned long long>(hi - lo + 1));
    }
    Rational rat(long long lo, long long hi, long long max_den = 6) {
        long long d = uniform(1, max_den);
        return Rational(uniform(lo * d, hi * d), d);
    }
    // in (0, 1]
    Rational frac(long long grains = 100) { return Rational(uniform(1, grains), grains); }
};

// The four rearrangements of the Q-form at the origin, all equal to
// (13/5)a^2 - (24/5)ab - 6*rk*a + 4b^2. The printed rank term is read as
// (6/5)*H^3*rk*a with H^3 = 5; the identity below forces that reading.
inline Rational q_expr_common(const Rational& rk, const Rational& a, const Rational& b) {
    return Rational(13, 5) * a * a - Rational(24, 5) * a * b - 6 * rk * a + 4 * b * b;
}
inline Rational q_expr_36(const Rational& rk, const Rational& a, const Rational& b) {
    Rational R = 5 * rk;
    return Rational(6, 5) * a * (a - R) + Rational(1, 5) * (7 * a - 10 * b) * (a - 2 * b);
}
inline Rational q_expr_37(const Rational& rk, const Rational& a, const Rational& b) {
    Rational R = 5 * rk;
    return Rational(6, 5) * a * (2 * a - 4 * b - R) + 4 * b * b + a * a / 5;
}
inline Rational q_expr_38(const Rational& rk, const Rational& a, const Rational& b) {
    Rational R = 5 * rk;
    return Rational(6, 5) * a * (Rational(3, 2) * a - b - R) +
           Rational(1, 5) * (4 * a - 10 * b) * (a - 2 * b);
}
inline Rational q_expr_39(const Rational& rk, const Rational& a, const Rational& b) {
    Rational R = 5 * rk;
    return Rational(4, 5) * (Rational(3, 2) * a * a - b * R - a * R) +
           Rational(1, 5) * (7 * a - 10 * b - 2 * R) * (a - 2 * b);
}

inline std::string triple_str(const Rational& rk, const Rational& a, const Rational& b) {
    return "(rk,a,b)=(" + to_string(rk) + "," + to_string(a) + "," + to_string(b) + ")";
}

}  // namespace detail

// The four displayed rearrangements of Q_{0,0} minus the Euler characteristic
// bound are one polynomial; sample it.
inline VerificationReport verify_q00_rearrangements(long long samples, unsigned long long seed) {
    VerificationReport r{"q00_rearrangements"};
    r.notes.push_back("rank term read as (6/5)*H^3*rk*ch1 with H^3=5");
    detail::Rng rng(seed);
    auto check_triple = [&](const Rational& rk, const Rational& a, const Rational& b) {
        Rational c = detail::q_expr_common(rk, a, b);
        std::string in = detail::triple_str(rk, a, b);
        r.check_eq(detail::q_expr_36(rk, a, b), c, in + " expr36");
        r.check_eq(detail::q_expr_37(rk, a, b), c, in + " expr37");
        r.check_eq(detail::q_expr_38(rk, a, b), c, in + " expr38");
        r.check_eq(detail::q_expr_39(rk, a, b), c, in + " expr39");
    };
    r.check_eq(detail::q_expr_common(Rational(1), Rational(5), Rational(0)), Rational(35), "(1,5,0)");
    r.check_eq(detail::q_expr_common(Rational(0), Rational(1), Rational(1)), Rational(9, 5), "(0,1,1)");
    for (long long i = 0; i < samples; ++i)
        check_triple(rng.rat(-10, 10), rng.rat(-50, 50), rng.rat(-50, 50));
    return r;
}

// Each slope regime of the section-count proof makes one designated
// rearrangement manifestly non-negative; sample vectors inside each regime.
inline VerificationReport verify_prop_bn_regimes(long long samples_per_regime, unsigned long long seed) {
    VerificationReport r{"prop_bn_regimes"};
    detail::Rng rng(seed);
    for (long long i = 0; i < samples_per_regime; ++i) {
        Rational R = 5 * Rational(rng.uniform(1, 20));
        // x > 1 with 0 < b <= a/2: expr36 has both products non-negative
        {
            Rational x = 1 + rng.rat(1, 30, 10) / 10;
            Rational a = R * x;
            Rational b = a / 2 * rng.frac();
            r.check_ge0(QuadNumber(detail::q_expr_36(R / 5, a, b)), "regime x>1 " + detail::triple_str(R / 5, a, b));
        }
        // x in (1/2, 3/4], b below the slope-stability bound a/2 - R/4
        {
            Rational x = Rational(1, 2) + Rational(1, 4) * rng.frac();
            Rational a = R * x;
            Rational b = (a / 2 - R / 4) * rng.frac();
            if (b > 0)
                r.check_ge0(QuadNumber(detail::q_expr_37(R / 5, a, b)),
                            "regime [1/2,3/4] " + detail::triple_str(R / 5, a, b));
        }
        // x in (3/4, 10/11], b < 3a/2 - R and nu_BN < 2/5
        {
            Rational x = Rational(3, 4) + Rational(19, 44) * rng.frac();
            Rational a = R * x;
            Rational b = (Rational(3, 2) * a - R) * Rational(rng.uniform(1, 99), 100);
            r.check_ge0(QuadNumber(detail::q_expr_38(R / 5, a, b)),
                        "regime [3/4,10/11] " + detail::triple_str(R / 5, a, b));
        }
        // x in [10/11, 1], nu_BN <= 2/5 (which also gives 2b + 2R <= 3a here);
        // the bound is tight at x = 10/11, b = 2a/5
        {
            Rational x = Rational(10, 11) + Rational(1, 11) * Rational(rng.uniform(0, 100), 100);
            Rational a = R * x;
            Rational b = Rational(2, 5) * a * rng.frac();
            r.check_ge0(QuadNumber(detail::q_expr_39(R / 5, a, b)),
                        "regime [10/11,1] " + detail::triple_str(R / 5, a, b));
        }
    }
    return r;
}

// Arithmetic content of the hom-count chain: the slope-window exclusion is
// equivalent to the printed section bound, and the Euler characteristic bound
// forces the Q_{0,0} lower bound.
inline VerificationReport verify_hom_bound_formulas(unsigned long long seed = 11) {
    VerificationReport r{"hom_bound_formulas"};
    detail::Rng rng(seed);
    // (i) window equivalence: for h > rk, the quotient slope a/(5(rk-h)) lies
    // in (-1/2, 0) exactly when h > rk + 2a/5
    for (long long rk = 0; rk <= 4; ++rk)
        for (long long an = 1; an <= 10; ++an)
            for (long long k = 1; k <= 10; ++k) {
                Rational a(an), h = rk + Rational(k, 5) * a;
                Rational ratio = a / (5 * (rk - h));
                bool in_window = ratio > Rational(-1, 2) && ratio < 0;
                bool above = h > rk + Rational(2, 5) * a;
                r.check(in_window == above,
                        "window rk=" + std::to_string(rk) + " a=" + std::to_string(an) +
                            " h=" + to_string(h),
                        above ? "in window" : "outside window", in_window ? "in window" : "outside window");
            }
    // boundary: h = rk + 2a/5 sits exactly on the -1/2 threshold
    for (long long an = 1; an <= 20; ++an) {
        Rational a(an), h = 3 + Rational(2, 5) * a;
        r.check_eq(a / (5 * (3 - h)), Rational(-1, 2), "threshold a=" + std::to_string(an));
        // the two printed section-count forms at the threshold
        r.check_eq(h - 3, Rational(2, 5) * a, "bn-zero form a=" + std::to_string(an));
        r.check_eq(h - 6, Rational(2, 5) * a - 3, "dual form a=" + std::to_string(an));
    }
    // (ii) chi-chain: c <= rk - 13a/30 + 4b/5 implies 4b^2 - 6ac >= common
    for (long long i = 0; i < 400; ++i) {
        Rational a = rng.rat(1, 50);
        Rational rk = rng.rat(-10, 10), b = rng.rat(-50, 50);
        Rational slack = i % 4 == 0 ? Rational(0) : rng.rat(0, 20);
        Rational c = rk - Rational(13, 30) * a + Rational(4, 5) * b - slack;
        Rational q00 = 4 * b * b - 6 * a * c;
        r.check(q00 >= detail::q_expr_common(rk, a, b),
                "chi-chain " + detail::triple_str(rk, a, b) + " c=" + to_string(c),
                ">= " + to_string(detail::q_expr_common(rk, a, b)), to_string(q00));
    }
    return r;
}

// Labeled coordinates of the published bound plots, reproduced exactly.
inline VerificationReport verify_figures() {
    VerificationReport r{"figures"};
    r.check_eq(clifford_c225(Rational(2)), Rational(41, 40), "clifford(2)");
    r.check_eq(clifford_c225(Rational(5, 2)), Rational(25, 24), "clifford(5/2)");
    r.check_eq(clifford_c225(Rational(10, 3)), Rational(13, 12), "clifford(10/3)");
    r.check_eq(clifford_c225_left_limit(Rational(2)), Rational(42, 41), "clifford(2-)");
    r.check_eq(clifford_c225_left_limit(Rational(5, 2)), Rational(26, 25), "clifford(5/2-)");
    r.check_eq(clifford_c225_left_limit(Rational(10, 3)), Rational(14, 13), "clifford(10/3-)");
    r.check_eq(clifford_c225_left_limit(Rational(5)), Rational(6, 5), "clifford(5-)");
    r.check_eq(bg_bound_s25(Rational(1, 10)), Rational(-17, 200), "s25(1/10)");
    r.check_eq(bg_bound_s25(Rational(1, 4)), Rational(-1, 8), "s25(1/4)");
    r.check_eq(bg_bound_s25(Rational(3, 4)), Rational(1, 8), "s25(3/4)");
    r.check_eq(bg_bound_s25(Rational(9, 10)), Rational(63, 200), "s25(9/10)");
    // endpoints of the chain sit on the parabola piece 3x^2/2 - x
    auto parab = [](const Rational& x) { return Rational(3, 2) * x * x - x; };
    r.check_eq(parab(Rational(0)), Rational(0), "s25 chain start");
    r.check_eq(parab(Rational(1)), Rational(1, 2), "s25 chain end");
    r.check_eq(gamma_curve(QuadNumber(0)), QuadNumber(0), "Gamma(0)");
    r.check_eq(gamma_curve(QuadNumber(Rational(1, 2))), QuadNumber(0), "Gamma(1/2)");
    r.check_eq(gamma_curve(QuadNumber(1)), QuadNumber(Rational(1, 2)), "Gamma(1)");
    r.check_eq(gamma_curve(QuadNumber(Rational(3, 2))), QuadNumber(1), "Gamma(3/2)");
    r.check_eq(gamma_curve(QuadNumber(2)), QuadNumber(2), "Gamma(2)");
    r.check_eq(gamma_curve(QuadNumber(-3)), QuadNumber(Rational(9, 2)), "Gamma(-3)");
    return r;
}

// The sharp section-count examples: twists of the structure sheaf realize the
// curve bound with equality.
inline VerificationReport verify_remark_sharpness() {
    VerificationReport r{"remark_sharpness"};
    for (long long n = 1; n <= 4; ++n) {
        ChernVector line = s22_vec(Rational(1), Rational(4 * n), Rational(2 * n * n));
        Rational h = euler_char(line);
        r.check_eq(h, Rational(2 * n * n + 2 * n + 1), "chi(O(" + std::to_string(n) + "H))");
        Rational rank(2 * n * n + 2 * n);
        Rational mu = Rational(10, n + 1);
        r.check_eq(clifford_c225(mu) * rank, h, "sharp n=" + std::to_string(n));
    }
    ChernVector twoH = s22_vec(Rational(1), Rational(8), Rational(8));
    r.check_eq(euler_char(twoH), Rational(13), "chi(O(2H))");
    r.check_eq(clifford_c225(Rational(40)), Rational(13), "clifford(40)");
    return r;
}

// The Q-form rescaling identity along walls, on random collinear
// configurations through the plane point of a random character.
inline VerificationReport verify_wall_identity(long long samples, unsigned long long seed) {
    VerificationReport r{"wall_identity"};
    detail::Rng rng(seed);
    for (long long i = 0; i < samples; ++i) {
        Rational rk(rng.uniform(1, 5) * (rng.uniform(0, 1) ? 1 : -1));
        ChernVector v = quintic_vec(rk, 5 * rng.rat(-6, 6, 2), rng.rat(-20, 20, 2), rng.rat(-20, 20, 6));
        TiltPoint p0{QuadNumber(rng.rat(-5, 5, 4)), QuadNumber(rng.rat(-5, 5, 4))};
        auto [px, py] = v.plane_point();
        Rational t = rng.rat(-3, 3, 4);
        if (t == 1) t = Rational(1, 2);
        TiltPoint p1{p0.alpha + QuadNumber(t) * (QuadNumber(px) - p0.alpha),
                     p0.beta + QuadNumber(t) * (QuadNumber(py) - p0.beta)};
        bool ok = false;
        try {
            ok = wall_q_identity(v, p0, p1);
        } catch (const std::exception&) {
        }
        r.check(ok, "wall identity " + detail::triple_str(v.r, v.a, v.b) + " t=" + to_string(t),
                "identity holds", ok ? "holds" : "violated");
    }
    return r;
}

// Breakpoint agreement where the bounds are continuous.
inline VerificationReport verify_continuity() {
    VerificationReport r{"continuity"};
    for (const Rational& x : {Rational(1, 4), Rational(3, 4)})
        r.check_eq(detail::bg_quintic_table().eval_left_limit(x), bg_bound_quintic(x),
                   "quintic breakpoint " + to_string(x));
    r.check_eq(bg_bound_quintic(Rational(1, 4)), Rational(-1, 8), "quintic(1/4)");
    r.check_eq(bg_bound_quintic(Rational(3, 4)), Rational(1, 8), "quintic(3/4)");
    for (const Rational& x :
         {Rational(1, 10), Rational(1, 4), Rational(3, 4), Rational(9, 10)})
        r.check_eq(detail::bg_s25_table().eval_left_limit(x), bg_bound_s25(x),
                   "s25 breakpoint " + to_string(x));
    r.check_eq(clifford_c225_left_limit(Rational(37)), clifford_c225(Rational(37)),
               "clifford breakpoint 37");
    // symmetry of the quintic bound
    for (long long k = 0; k <= 20; ++k)
        r.check_eq(bg_bound_quintic(Rational(k, 20)), bg_bound_quintic(Rational(-k, 20)),
                   "symmetry x=" + to_string(Rational(k, 20)));
    return r;
}

// Exact sqrt(2) thresholds of the first-wall estimate.
inline VerificationReport verify_first_wall_thresholds() {
    VerificationReport r{"first_wall_thresholds"};
    QuadNumber t1 = mu_semistable_threshold();
    QuadNumber vanish = QuadNumber(3) * t1 / QuadNumber(20) - t1 * t1 / QuadNumber(400) -
                        QuadNumber(Rational(1, 4));
    r.check_eq(vanish, QuadNumber(0), "vanishing at 30-20*sqrt(2)");
    r.check(first_wall_alpha_max(t1).semistable, "status at 30-20*sqrt(2)", "semistable", "wall");
    QuadNumber t2 = mu_branch_threshold();
    QuadNumber linear = QuadNumber(3) * t2 / QuadNumber(20) - QuadNumber(3);
    QuadNumber curved = t2 / QuadNumber(5) - t2 * t2 / QuadNumber(400) - QuadNumber(Rational(5, 4));
    r.check_eq(linear, curved, "branch agreement at 10+20*sqrt(2)");
    r.check_eq(linear, sqrt2_multiple(Rational(-3, 2), Rational(3)), "branch value 3*sqrt(2)-3/2");
    r.check_eq(first_wall_alpha_max(QuadNumber(10)).alpha, QuadNumber(1), "first wall at mu=10");
    r.check_eq(first_wall_alpha_max(QuadNumber(30)).alpha, QuadNumber(Rational(5, 2)),
               "first wall at mu=30");
    r.check_eq(first_wall_alpha_max(QuadNumber(40)).alpha, QuadNumber(3), "first wall at mu=40");
    // slope-range continuity at mu=39 and the worked line crossing
    r.check_eq(bn_range_iota(Rational(39)).upper, QuadNumber(Rational(7, 8)), "nu+ at mu=39");
    auto [b1, b2] = gamma_line_intersections(Rational(-2), QuadNumber(1));
    r.check_eq(b2, QuadNumber(Rational(1, 2)), "beta2 for mu=10 wall");
    r.check_eq(b1, QuadNumber(Rational(-9, 2)), "beta1 for mu=10 wall");
    r.check(width_constraint(b1, b2), "width at mu=10", "<= 5", (b2 - b1).str());
    return r;
}

// Structural maximizer against the lattice oracle, plus the n <= 2 claim.
inline VerificationReport verify_polygon_oracle(long long triangles, unsigned long long seed,
                                                long long grid_denominator = 4) {
    VerificationReport r{"polygon_oracle"};
    detail::Rng rng(seed);
    for (long long i = 0; i < triangles; ++i) {
        Rational yp = Rational(rng.uniform(4, 6), 2);
        Rational yq = Rational(rng.uniform(2, num(2 * yp).convert_to<long long>() - 1), 2);
        Rational xq = Rational(rng.uniform(-2, 2), 2);
        Rational xp = xq * yp / yq - Rational(rng.uniform(1, 8), 2);
        HalfPlanePoint P{QuadNumber(xp), QuadNumber(yp)}, Q{QuadNumber(xq), QuadNumber(yq)};
        std::string in = "triangle P=(" + to_string(xp) + "," + to_string(yp) + ") Q=(" +
                         to_string(xq) + "," + to_string(yq) + ")";
        ClubMax best = maximize_club_path(P, Q);
        QuadNumber b1 = brute_force_club_max(P, Q, grid_denominator, 1);
        QuadNumber b2 = brute_force_club_max(P, Q, grid_denominator, 2);
        r.check(b1 <= best.value, in + " oracle n=1", "<= " + best.value.str(), b1.str());
        // a second interior vertex never beats the continuous one-vertex
        // optimum (it can beat the best on-lattice single vertex, so the
        // comparison is against the structural maximizer)
        r.check(b2 <= best.value, in + " oracle n=2", "<= " + best.value.str(), b2.str());
    }
    return r;
}

// Full polygon pipeline never exceeds the published table, with equality at
// the stated breakpoints.
inline VerificationReport verify_pipeline_dominance(long long samples, unsigned long long seed) {
    VerificationReport r{"pipeline_dominance"};
    detail::Rng rng(seed);
    for (long long i = 0; i < samples; ++i) {
        Rational mu = rng.uniform(0, 1) ? Rational(rng.uniform(1, 400), 40)
                                        : 30 + Rational(rng.uniform(0, 400), 40);
        QuadNumber pipeline = clifford_via_polygon(mu);
        Rational table = clifford_c225(mu);
        r.check(pipeline <= QuadNumber(table), "mu=" + to_string(mu), "<= " + to_string(table),
                pipeline.str());
    }
    for (const Rational& mu : {Rational(2), Rational(5, 2), Rational(10, 3), Rational(5),
                               Rational(10), Rational(30), Rational(37), Rational(40)})
        r.check_eq(clifford_via_polygon(mu), QuadNumber(clifford_c225(mu)),
                   "breakpoint mu=" + to_string(mu));
    return r;
}

inline std::vector<VerificationReport> run_all_detailed(unsigned long long seed) {
    return {
        verify_q00_rearrangements(1000, seed),
        verify_prop_bn_regimes(150, seed + 1),
        verify_hom_bound_formulas(seed + 2),
        verify_figures(),
        verify_remark_sharpness(),
        verify_wall_identity(200, seed + 3),
        verify_continuity(),
        verify_first_wall_thresholds(),
        verify_polygon_oracle(50, seed + 4),
        verify_pipeline_dominance(500, seed + 5),
    };
}

inline VerificationReport run_all(unsigned long long seed) {
    VerificationReport total{"all"};
    for (const auto& r : run_all_detailed(seed)) {
        total.cases_run += r.cases_run;
        for (const auto& f : r.failures)
            total.failures.push_back({r.suite + ": " + f.input, f.expected, f.got});
        for (const auto& n : r.notes) total.notes.push_back(r.suite + ": " + n);
    }
    return total;
}

// ---- plot presets ----

namespace detail {

inline Overlay parabola_overlay(const Rational& y_lo, const Rational& y_hi, int steps = 64) {
    Overlay ov{Overlay::Kind::polyline, {}, ""};
    for (int i = 0; i <= steps; ++i) {
        Rational y = y_lo + (y_hi - y_lo) * Rational(i, steps);
        ov.points.emplace_back(QuadNumber(y * y / 2), QuadNumber(y));
    }
    return ov;
}

}  // namespace detail

inline PlotSpec make_plot_spec(const std::string& target) {
    PlotSpec spec;
    spec.target = target;
    if (target == "fig1_walls") {
        spec.overlays.push_back(detail::parabola_overlay(Rational(-3), Rational(3)));
        // nested walls through the plane point of a twisted ideal-sheaf-like
        // character at (1/2, 1)
        for (const Rational& a0 : {Rational(1), Rational(3, 2), Rational(2)}) {
            auto at = [&](const Rational& y) { return QuadNumber(a0 + (Rational(1, 2) - a0) * y); };
            spec.overlays.push_back({Overlay::Kind::segment,
                                     {{at(Rational(-3)), QuadNumber(-3)}, {at(Rational(3)), QuadNumber(3)}},
                                     ""});
        }
        spec.overlays.push_back({Overlay::Kind::point, {{QuadNumber(Rational(1, 2)), QuadNumber(1)}}, ""});
    } else if (target == "fig2_phe") {
        spec.overlays.push_back(detail::parabola_overlay(Rational(-2), Rational(2)));
        Overlay pts{Overlay::Kind::point, {}, ""};
        for (long long m = -2; m <= 2; ++m)
            pts.points.emplace_back(QuadNumber(Rational(m * m, 2)), QuadNumber(Rational(m)));
        spec.overlays.push_back(pts);
    } else if (target == "fig3_gamma") {
        spec.overlays.push_back(detail::parabola_overlay(Rational(-3), Rational(3)));
        for (long long k = -3; k < 3; ++k) {
            Overlay seg{Overlay::Kind::polyline, {}, ""};
            seg.points.emplace_back(QuadNumber(Rational(k * k, 2)), QuadNumber(Rational(k)));
            seg.points.emplace_back(QuadNumber(Rational((k + 1) * (k + 1), 2) - Rational(1, 4)),
                                    QuadNumber(Rational(k + 1)));
            spec.overlays.push_back(seg);
        }
        spec.overlays.push_back({Overlay::Kind::point,
                                 {{QuadNumber(0), QuadNumber(0)},
                                  {QuadNumber(Rational(1, 2)), QuadNumber(1)},
                                  {QuadNumber(2), QuadNumber(2)}},
                                 ""});
    } else if (target == "fig4_clifford") {
        Overlay curve{Overlay::Kind::polyline, {}, ""};
        for (long long i = 1; i <= 80; ++i) {
            Rational mu(i, 8);
            curve.points.emplace_back(QuadNumber(mu), QuadNumber(clifford_c225(mu)));
        }
        spec.overlays.push_back(curve);
        spec.overlays.push_back({Overlay::Kind::point,
                                 {{QuadNumber(2), QuadNumber(Rational(42, 41))},
                                  {QuadNumber(Rational(5, 2)), QuadNumber(Rational(26, 25))},
                                  {QuadNumber(Rational(10, 3)), QuadNumber(Rational(14, 13))},
                                  {QuadNumber(5), QuadNumber(Rational(6, 5))}},
                                 ""});
    } else if (target == "fig5_s25_bound") {
        Overlay chain{Overlay::Kind::polyline,
                      {{QuadNumber(0), QuadNumber(0)},
                       {QuadNumber(Rational(-17, 200)), QuadNumber(Rational(1, 10))},
                       {QuadNumber(Rational(-1, 8)), QuadNumber(Rational(1, 4))},
                       {QuadNumber(Rational(1, 8)), QuadNumber(Rational(3, 4))},
                       {QuadNumber(Rational(63, 200)), QuadNumber(Rational(9, 10))},
                       {QuadNumber(Rational(1, 2)), QuadNumber(1)}},
                      ""};
        spec.overlays.push_back(chain);
        Overlay pts{Overlay::Kind::point, chain.points, ""};
        spec.overlays.push_back(pts);
    } else if (target == "fig6_polygon") {
        HalfPlanePoint P{QuadNumber(-10), QuadNumber(20)};
        auto [xq, yq] = q_corner(Rational(40), Rational(1));
        spec.overlays.push_back({Overlay::Kind::segment, {{QuadNumber(0), QuadNumber(0)}, {xq, yq}}, ""});
        spec.overlays.push_back({Overlay::Kind::segment, {{xq, yq}, {P.x, P.y}}, ""});
        spec.overlays.push_back({Overlay::Kind::segment, {{P.x, P.y}, {QuadNumber(0), QuadNumber(0)}}, ""});
        ClubMax best = maximize_club_path(P, {xq, yq});
        Overlay witness{Overlay::Kind::polyline, {}, ""};
        for (const auto& v : best.witness.vertices) witness.points.emplace_back(v.x, v.y);
        spec.overlays.push_back(witness);
    } else {
        throw std::invalid_argument("unknown plot target: " + target);
    }
    return spec;
}

}  // namespace tiltstab

#endif
