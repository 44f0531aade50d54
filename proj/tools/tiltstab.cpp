// Command line front end: slopes, walls, charges, bounds, first-wall and
// slope-range estimates, destabilizer search, the Clifford pipeline, the
// verification suites and the figure plots.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tiltstab/harness.hpp"
#include "tiltstab/io.hpp"

namespace ts = tiltstab;

namespace {

ts::ChernVector load_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read " + path);
    ts::json j;
    in >> j;
    return ts::chern_from_json(j);
}

ts::json slope_json(const ts::Slope& s) {
    if (s.is_infinite()) return "inf";
    return ts::quad_to_json(s.get());
}

std::pair<ts::Rational, ts::Rational> parse_point(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected x,y: " + s);
    return {ts::parse_rational(s.substr(0, comma)), ts::parse_rational(s.substr(comma + 1))};
}

void print_value(const ts::Rational& v) {
    std::cout << ts::to_string(v) << " (" << ts::to_double(v) << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact tilt-stability computations on the quintic threefold"};
    app.require_subcommand(1);

    std::string json_path, alpha_str = "0", beta_str = "0", kind, at_str, mu_str;
    std::string p_str, q_str, target, out_path, suite_name;
    long long genus = 41, max_rank = 2, seed = 7, brute_d = 0;
    bool as_json = false, pipeline_only = false, table_only = false, both = false;

    auto* slope = app.add_subcommand("slope", "slope functions of a character");
    slope->add_option("--json", json_path, "character file")->required();
    slope->add_option("--alpha", alpha_str, "tilt parameter alpha (p/q)");
    slope->add_option("--beta", beta_str, "tilt parameter beta (p/q)");

    auto* wall = app.add_subcommand("wall", "wall through a tilt point and a character");
    wall->add_option("--json", json_path)->required();
    wall->add_option("--alpha", alpha_str)->required();
    wall->add_option("--beta", beta_str)->required();

    auto* charge = app.add_subcommand("charge", "central charge of a character");
    charge->add_option("--json", json_path)->required();
    charge->add_option("--alpha", alpha_str)->required();
    charge->add_option("--beta", beta_str)->required();

    auto* bound = app.add_subcommand("bound", "piecewise bound evaluation");
    bound->add_option("--kind", kind, "quintic|s25|clifford|envelope|classical")->required();
    bound->add_option("--at", at_str, "evaluation point p/q")->required();
    bound->add_option("--genus", genus, "genus for the classical bound");

    auto* firstwall = app.add_subcommand("firstwall", "largest alpha of a destabilizing wall");
    firstwall->add_option("--mu", mu_str)->required();

    auto* bnrange = app.add_subcommand("bnrange", "Brill-Noether slope range of HN factors");
    bnrange->add_option("--mu", mu_str)->required();

    auto* destab = app.add_subcommand("destab", "lattice destabilizer candidates");
    destab->add_option("--json", json_path)->required();
    destab->add_option("--alpha", alpha_str)->required();
    destab->add_option("--beta", beta_str)->required();
    destab->add_option("--max-rank", max_rank);

    auto* clifford = app.add_subcommand("clifford", "section bound for the degree-20 curve");
    clifford->add_option("--mu", mu_str)->required();
    clifford->add_flag("--pipeline", pipeline_only, "polygon pipeline value only");
    clifford->add_flag("--table", table_only, "published table value only");
    clifford->add_flag("--both", both, "both values (default)");

    auto* polygon = app.add_subcommand("polygon", "club-sum maximization over a triangle");
    polygon->add_option("--p", p_str, "corner P as x,y")->required();
    polygon->add_option("--q", q_str, "corner Q as x,y")->required();
    polygon->add_option("--brute", brute_d, "also run the lattice oracle at denominator D");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("--suite", suite_name, "run one suite by name");
    verify->add_option("--seed", seed);
    verify->add_flag("--json", as_json);

    auto* plot = app.add_subcommand("plot", "emit a figure as SVG");
    plot->add_option("--target", target)->required();
    plot->add_option("--out", out_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (slope->parsed()) {
            ts::ChernVector v = load_vector(json_path);
            ts::TiltPoint p{ts::QuadNumber(ts::parse_rational(alpha_str)),
                            ts::QuadNumber(ts::parse_rational(beta_str))};
            ts::json out{{"mu", slope_json(ts::mu_slope(v))},
                         {"bn", slope_json(ts::bn_slope(v))},
                         {"tilt", slope_json(ts::tilt_slope(v, p))},
                         {"discriminant", ts::to_string(ts::discriminant(v))}};
            std::cout << out.dump(2) << "\n";
        } else if (wall->parsed()) {
            ts::ChernVector v = load_vector(json_path);
            auto [px, py] = v.plane_point();
            ts::Wall w = ts::wall_through(ts::QuadNumber(ts::parse_rational(alpha_str)),
                                          ts::QuadNumber(ts::parse_rational(beta_str)),
                                          ts::QuadNumber(px), ts::QuadNumber(py));
            ts::json out{{"u", ts::quad_to_json(w.u)}, {"v", ts::quad_to_json(w.v)},
                         {"w", ts::quad_to_json(w.w)}};
            std::cout << out.dump(2) << "\n";
        } else if (charge->parsed()) {
            ts::ChernVector v = load_vector(json_path);
            ts::TiltPoint p{ts::QuadNumber(ts::parse_rational(alpha_str)),
                            ts::QuadNumber(ts::parse_rational(beta_str))};
            auto [re, im] = ts::central_charge(v, p);
            ts::json out{{"re", ts::quad_to_json(re)}, {"im", ts::quad_to_json(im)}};
            std::cout << out.dump(2) << "\n";
        } else if (bound->parsed()) {
            ts::Rational x = ts::parse_rational(at_str);
            if (kind == "quintic") print_value(ts::bg_bound_quintic(x));
            else if (kind == "s25") print_value(ts::bg_bound_s25(x));
            else if (kind == "clifford") print_value(ts::clifford_c225(x));
            else if (kind == "envelope") print_value(ts::clifford_envelope(x));
            else if (kind == "classical") print_value(ts::classical_clifford(x, genus));
            else throw std::invalid_argument("unknown bound kind: " + kind);
        } else if (firstwall->parsed()) {
            ts::FirstWall fw = ts::first_wall_alpha_max(ts::QuadNumber(ts::parse_rational(mu_str)));
            if (fw.semistable) std::cout << "Brill-Noether semistable, no wall\n";
            else std::cout << fw.alpha.str() << " (" << fw.alpha.to_double() << ")\n";
        } else if (bnrange->parsed()) {
            ts::BnRange range = ts::bn_range_iota(ts::parse_rational(mu_str));
            if (range.status == ts::BnRange::Status::semistable) {
                std::cout << ts::json{{"status", "semistable"}}.dump(2) << "\n";
            } else {
                ts::json out{{"status", "bounded"}, {"upper", ts::quad_to_json(range.upper)},
                             {"lower", ts::quad_to_json(range.lower)}};
                std::cout << out.dump(2) << "\n";
            }
        } else if (destab->parsed()) {
            ts::ChernVector v = load_vector(json_path);
            ts::TiltPoint p{ts::QuadNumber(ts::parse_rational(alpha_str)),
                            ts::QuadNumber(ts::parse_rational(beta_str))};
            ts::json out = ts::json::array();
            for (const auto& [sub, quot] : ts::destabilizer_search(v, p, max_rank))
                out.push_back({{"sub", ts::chern_to_json(sub)}, {"quotient", ts::chern_to_json(quot)}});
            std::cout << out.dump(2) << "\n";
        } else if (clifford->parsed()) {
            ts::Rational mu = ts::parse_rational(mu_str);
            if (both) pipeline_only = table_only = false;
            if (!pipeline_only) {
                std::cout << "table:    ";
                print_value(ts::clifford_c225(mu));
            }
            if (!table_only) {
                ts::QuadNumber v = ts::clifford_via_polygon(mu);
                std::cout << "pipeline: " << v.str() << " (" << v.to_double() << ")\n";
            }
        } else if (polygon->parsed()) {
            auto [px, py] = parse_point(p_str);
            auto [qx, qy] = parse_point(q_str);
            ts::HalfPlanePoint P{ts::QuadNumber(px), ts::QuadNumber(py)};
            ts::HalfPlanePoint Q{ts::QuadNumber(qx), ts::QuadNumber(qy)};
            ts::ClubMax best = ts::maximize_club_path(P, Q);
            ts::json witness = ts::json::array();
            for (const auto& v : best.witness.vertices)
                witness.push_back({ts::quad_to_json(v.x), ts::quad_to_json(v.y)});
            ts::json out{{"value", ts::quad_to_json(best.value)}, {"witness", witness}};
            if (brute_d > 0)
                out["brute"] = ts::quad_to_json(ts::brute_force_club_max(P, Q, brute_d, 2));
            std::cout << out.dump(2) << "\n";
        } else if (verify->parsed()) {
            std::vector<ts::VerificationReport> reports;
            if (suite_name.empty()) {
                reports = ts::run_all_detailed(seed);
            } else {
                for (const auto& r : ts::run_all_detailed(seed))
                    if (r.suite == suite_name) reports.push_back(r);
                if (reports.empty()) throw std::invalid_argument("unknown suite: " + suite_name);
            }
            bool all_pass = true;
            long long cases = 0;
            for (const auto& r : reports) {
                all_pass = all_pass && r.pass();
                cases += r.cases_run;
                if (as_json) continue;
                std::cout << ts::render_report(r);
            }
            if (as_json) {
                ts::json out = ts::json::array();
                for (const auto& r : reports) {
                    ts::json fails = ts::json::array();
                    for (const auto& f : r.failures)
                        fails.push_back({{"input", f.input}, {"expected", f.expected}, {"got", f.got}});
                    out.push_back({{"suite", r.suite}, {"cases", r.cases_run},
                                   {"status", r.pass() ? "pass" : "fail"}, {"failures", fails},
                                   {"notes", r.notes}});
                }
                std::cout << out.dump(2) << "\n";
            } else {
                std::cout << "total: " << cases << " cases, " << (all_pass ? "pass" : "FAIL") << "\n";
            }
            return all_pass ? 0 : 1;
        } else if (plot->parsed()) {
            ts::emit_plot(ts::make_plot_spec(target), out_path);
            std::cout << "wrote " << out_path << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
