// visang: verification harness for visual-angle integral identities on
// smooth planar convex bodies.
//
// Exit codes: 0 success, 1 threshold breach, 2 usage/config error,
// 3 numeric non-convergence.

#include "visang/errors.hpp"
#include "visang/exterior.hpp"
#include "visang/identities.hpp"
#include "visang/line_space.hpp"
#include "visang/presets.hpp"
#include "visang/report.hpp"
#include "visang/visual_angle.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace visang;

struct RunConfig {
    std::string preset = "disk:1";
    std::string body_file;
    std::vector<std::string> identities;
    std::vector<int> ks;
    std::vector<int> ms;
    double pair_tol = 3e-8;
    double ext_tol = 1e-7;
    std::string out_path;
    std::string format = "json";
    unsigned long seed = 1;
    bool include_timing = true;
};

NamedBody load_body(const RunConfig& cfg) {
    if (!cfg.body_file.empty()) {
        std::ifstream in(cfg.body_file);
        if (!in)
            throw BadParamError("cannot open body file '" + cfg.body_file + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return {cfg.body_file, body_from_json(ss.str())};
    }
    return body_from_preset(cfg.preset);
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.out_path, std::ios::binary);
    if (!out)
        throw BadParamError("cannot open output file '" + cfg.out_path + "'");
    out << text;
}

std::vector<int> filter_parity(const std::vector<int>& ks, int parity, int fallback) {
    std::vector<int> out;
    for (int k : ks)
        if (k % 2 == parity)
            out.push_back(k);
    if (out.empty() && ks.empty())
        out.push_back(fallback);
    return out;
}

// Expands (identity, k-list, m-list) into verify() calls.
std::vector<IdentityReport> run_identity(const std::string& id, const NamedBody& nb,
                                         const RunConfig& cfg) {
    const VerifyOptions opts{cfg.pair_tol, cfg.ext_tol};
    std::vector<IdentityReport> all;
    auto run = [&](IdentityParams p) {
        auto reports = verify(id, nb.body, nb.desc, p, opts);
        all.insert(all.end(), reports.begin(), reports.end());
    };
    if (id == "hurwitz_even") {
        const auto ks = filter_parity(cfg.ks, 0, 2);
        if (ks.empty())
            throw BadParamError("hurwitz_even: no even k in --k list");
        for (int k : ks)
            run({k, 0});
    } else if (id == "hurwitz_odd_consistency" || id == "antipi") {
        const auto ks = filter_parity(cfg.ks, 1, 3);
        if (ks.empty())
            throw BadParamError(id + ": no odd k in --k list");
        for (int k : ks)
            run({k, 0});
    } else if (id == "power_sine") {
        std::vector<int> ms = cfg.ms.empty() ? std::vector<int>{3} : cfg.ms;
        for (int m : ms)
            run({0, m});
    } else {
        run({});
    }
    return all;
}

int cmd_body(const RunConfig& cfg) {
    const NamedBody nb = load_body(cfg);
    const HarmonicSpectrum sp = nb.body.spectrum();
    std::printf("body      %s\n", nb.desc.c_str());
    std::printf("L         %.9f\n", perimeter(nb.body));
    std::printf("F         %.9f\n", area(nb.body));
    std::printf("min p+p'' %.9f\n", nb.body.convexity_margin());
    if (nb.body.truncation_tail() > 0.0)
        std::printf("trunc tail %.3e\n", nb.body.truncation_tail());
    bool any = false;
    for (std::size_t k = 1; k <= sp.c_sq.size(); ++k) {
        if (sp.c_sq[k - 1] > 1e-24) {
            std::printf("c_sq[%zu]  %.12g\n", k, sp.c_sq[k - 1]);
            any = true;
        }
    }
    if (!any)
        std::printf("spectrum  empty\n");
    return 0;
}

int cmd_verify(const RunConfig& cfg) {
    const NamedBody nb = load_body(cfg);
    std::vector<std::string> ids = cfg.identities;
    if (ids.empty()) {
        // every identity that is meaningful on arbitrary bodies
        for (const std::string& id : identity_catalog())
            if (id != "const_width_lambda")
                ids.push_back(id);
    }
    for (const std::string& id : ids) {
        bool known = false;
        for (const std::string& cat : identity_catalog())
            known = known || cat == id;
        if (!known)
            throw UnknownIdentityError("unknown identity: " + id);
    }
    std::vector<IdentityReport> reports;
    for (const std::string& id : ids) {
        auto part = run_identity(id, nb, cfg);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    const std::string text = cfg.format == "csv" ? reports_to_csv(reports, cfg.include_timing)
                                                 : reports_to_json(reports, cfg.include_timing);
    write_output(cfg, text);

    const double F = area(nb.body);
    int breaches = 0;
    for (const IdentityReport& rep : reports) {
        if (!report_passes(rep, F)) {
            ++breaches;
            std::fprintf(stderr, "FAIL %s/%s body=%s k=%d m=%d rel_err=%.3e (threshold %.1e)\n",
                         rep.identity.c_str(), rep.route.c_str(), rep.body_desc.c_str(), rep.k,
                         rep.m, rep.rel_err, identity_threshold(rep.identity, rep.route));
        }
    }
    return breaches > 0 ? 1 : 0;
}

int cmd_probe(const RunConfig& cfg, const std::vector<std::string>& points, int grid,
              int random_n) {
    const NamedBody nb = load_body(cfg);
    std::vector<PlanarPoint> ps;
    for (const std::string& spec : points) {
        const auto comma = spec.find(',');
        if (comma == std::string::npos)
            throw BadParamError("--point needs x,y");
        ps.push_back({std::stod(spec.substr(0, comma)), std::stod(spec.substr(comma + 1))});
    }
    for (int i = 0; i < grid; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / grid;
        const double r = 2.0 * radial_boundary(nb.body, theta);
        ps.push_back({r * std::cos(theta), r * std::sin(theta)});
    }
    if (random_n > 0) {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
        std::uniform_real_distribution<double> fac(1.05, 6.0);
        for (int i = 0; i < random_n; ++i) {
            const double theta = ang(rng);
            const double r = fac(rng) * radial_boundary(nb.body, theta);
            ps.push_back({r * std::cos(theta), r * std::sin(theta)});
        }
    }
    if (ps.empty())
        throw BadParamError("probe: give --point, --grid or --random");

    std::printf("%12s %12s %10s %10s %10s %12s\n", "x", "y", "omega", "omega1", "omega2",
                "omega1+2-omega");
    for (const PlanarPoint& p : ps) {
        const VisualAngleData d = analyze_point(nb.body, p);
        std::printf("%12.6f %12.6f %10.6f %10.6f %10.6f %12.3e\n", p.x, p.y, d.omega, d.omega1,
                    d.omega2, d.omega1 + d.omega2 - d.omega);
    }
    return 0;
}

int cmd_sweep(const RunConfig& cfg) {
    if (cfg.identities.size() != 1)
        throw BadParamError("sweep needs exactly one --identity");
    std::vector<NamedBody> bodies;
    if (!cfg.preset.empty() && cfg.preset != "suite")
        bodies.push_back(load_body(cfg));
    else
        bodies = standard_suite();
    std::vector<IdentityReport> reports;
    for (const NamedBody& nb : bodies) {
        auto part = run_identity(cfg.identities[0], nb, cfg);
        reports.insert(reports.end(), part.begin(), part.end());
    }
    write_output(cfg, reports_to_csv(reports, cfg.include_timing));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"visual-angle identity verification for planar convex bodies"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> points;
    int grid = 0;
    int random_n = 0;
    bool no_timing = false;

    auto add_body_opts = [&cfg](CLI::App* sub) {
        sub->add_option("--preset", cfg.preset,
                        "disk:r | shifted_disk:r,dx[,dy] | ellipse:a,b | "
                        "const_width:a0,c3[,...] | generic | suite (sweep only)");
        sub->add_option("--file", cfg.body_file, "body JSON file {\"a0\":..,\"a\":[..],\"b\":[..]}");
    };

    CLI::App* body = app.add_subcommand("body", "print L, F, spectrum and convexity margin");
    add_body_opts(body);

    CLI::App* ver = app.add_subcommand("verify", "verify identities and write a report");
    add_body_opts(ver);
    ver->add_option("--identity", cfg.identities, "identity ids (default: all generic ones)")
        ->delimiter(',');
    ver->add_option("--k", cfg.ks, "harmonic parameters")->delimiter(',');
    ver->add_option("--m", cfg.ms, "sine powers")->delimiter(',');
    ver->add_option("--pair-tol", cfg.pair_tol, "pair-measure quadrature tolerance");
    ver->add_option("--ext-tol", cfg.ext_tol, "exterior-integral tolerance");
    ver->add_option("--out", cfg.out_path, "output path (default stdout)");
    ver->add_option("--format", cfg.format, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));
    ver->add_flag("--no-timing", no_timing, "zero wall_time fields (byte-stable output)");
    ver->add_option("--seed", cfg.seed, "seed (recorded for reproducibility)");

    CLI::App* probe = app.add_subcommand("probe", "visual angle and its split at points");
    add_body_opts(probe);
    probe->add_option("--point", points, "exterior point x,y (repeatable)");
    probe->add_option("--grid", grid, "probe n ring points at twice the boundary radius");
    probe->add_option("--random", random_n, "probe n random exterior points");
    probe->add_option("--seed", cfg.seed, "seed for --random");

    CLI::App* sweep = app.add_subcommand("sweep", "one identity over a parameter grid x bodies");
    add_body_opts(sweep);
    sweep->set_help_flag("--help");
    sweep->add_option("--identity", cfg.identities, "identity id")->delimiter(',');
    sweep->add_option("--k", cfg.ks, "k grid")->delimiter(',');
    sweep->add_option("--m", cfg.ms, "m grid")->delimiter(',');
    sweep->add_option("--pair-tol", cfg.pair_tol, "pair-measure quadrature tolerance");
    sweep->add_option("--ext-tol", cfg.ext_tol, "exterior-integral tolerance");
    sweep->add_option("--out", cfg.out_path, "output path (default stdout)");
    sweep->add_flag("--no-timing", no_timing, "zero wall_time fields");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    cfg.include_timing = !no_timing;
    if (sweep->parsed() && sweep->count("--preset") == 0 && cfg.body_file.empty())
        cfg.preset = "suite"; // sweeps default to the whole body suite
    if (!(cfg.pair_tol > 0.0) || !(cfg.ext_tol > 0.0)) {
        std::fprintf(stderr, "error: tolerances must be positive\n");
        return 2;
    }

    try {
        if (body->parsed())
            return cmd_body(cfg);
        if (ver->parsed())
            return cmd_verify(cfg);
        if (probe->parsed())
            return cmd_probe(cfg, points, grid, random_n);
        if (sweep->parsed())
            return cmd_sweep(cfg);
    } catch (const NoConvergenceError& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const RootCountError& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const DecayCheckError& e) {
        std::fprintf(stderr, "numeric failure: %s\n", e.what());
        return 3;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
