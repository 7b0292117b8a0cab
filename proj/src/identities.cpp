#include "visang/identities.hpp"

#include "visang/errors.hpp"
#include "visang/quadrature.hpp"
#include "visang/special.hpp"
#include "visang/stable_sum.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <string>

namespace visang {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double series_cutoff = 1e-3;

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

} // namespace

double crofton_g(double x) {
    if (std::fabs(x) < series_cutoff) {
        const double x2 = x * x;
        return x * x2 * (1.0 / 6.0 - x2 / 120.0);
    }
    return x - std::sin(x);
}

double masotti_g(double x) {
    if (std::fabs(x) < series_cutoff) {
        const double x2 = x * x;
        return x2 * x2 * (1.0 / 3.0 - 2.0 * x2 / 45.0);
    }
    const double s = std::sin(x);
    return x * x - s * s;
}

double hurwitz_f(int k, double x) {
    if (k < 2)
        throw BadParamError("hurwitz_f: k must be at least 2");
    const double kd = static_cast<double>(k);
    if (std::fabs(x) < series_cutoff) {
        const double x2 = x * x;
        return kd * kd * x * x2 * (1.0 / 3.0 - (3.0 * kd * kd - 2.0) * x2 / 60.0);
    }
    return -2.0 * std::sin(x) + (kd + 1.0) / (kd - 1.0) * std::sin((kd - 1.0) * x) -
           (kd - 1.0) / (kd + 1.0) * std::sin((kd + 1.0) * x);
}

double h_k(int k, double x) {
    if (k < 1)
        throw BadParamError("h_k: k must be at least 1");
    const double kd = static_cast<double>(k);
    if (std::fabs(x) < series_cutoff) {
        const double x2 = x * x;
        return x * x2 * (1.0 / 6.0 - (3.0 * kd * kd + 1.0) * x2 / 120.0);
    }
    if (k == 1)
        return (2.0 * x - std::sin(2.0 * x)) / 8.0;
    return (hurwitz_f(k, x) + 2.0 * (std::sin(x) - x)) / (2.0 * (kd * kd - 1.0));
}

double abs_cos_H(double x) {
    if (std::fabs(x) < series_cutoff) {
        const double x2 = x * x;
        return x * x2 * (1.0 / 6.0 - x2 / 30.0);
    }
    if (x <= 0.5 * pi)
        return 0.25 * (x - std::sin(x) * std::cos(x));
    return 0.25 * (3.0 * x - pi + std::sin(x) * std::cos(x));
}

double power_sine_A(int m, std::size_t k) { return power_sine_coeff(m, k); }

HFunction build_H(const AngularDensity& f) {
    HFunction h;
    h.source_density = f.id;
    h.id = "H[" + f.id + "]";
    if (f.family == "const") {
        h.eval = [](double x) { return crofton_g(x); };
    } else if (f.family == "abs_sin_4") {
        h.eval = [](double x) { return masotti_g(x); };
    } else if (f.family == "abs_cos") {
        h.eval = [](double x) { return abs_cos_H(x); };
    } else if (f.family == "power_sine") {
        const double m = static_cast<double>(f.param);
        h.eval = [m](double x) { return std::pow(std::sin(x), m); };
    } else if (f.family == "hurwitz") {
        const int k = f.param;
        const double amp = (k % 2 == 0 ? 1.0 : -1.0) * (static_cast<double>(k) * k - 1.0);
        h.eval = [k, amp](double x) { return crofton_g(x) + amp * h_k(k, x); };
    } else if (f.family == "cos") {
        const int k = f.param;
        h.eval = [k](double x) { return h_k(k, x); };
    } else {
        return build_H_numeric(f);
    }
    return h;
}

HFunction build_H_numeric(const AngularDensity& f) {
    HFunction h;
    h.source_density = f.id;
    h.id = "H_numeric[" + f.id + "]";
    h.closed_form = false;
    const auto eval_f = f.eval;
    h.eval = [eval_f](double x) {
        // H(x) = integral_0^x (x - s) f(s) sin(s) ds, panels split at pi/2
        // where the catalogued kinks can sit.
        const auto integrand = [&eval_f, x](double s) { return (x - s) * eval_f(s) * std::sin(s); };
        double v = gl_panels(integrand, 0.0, std::min(x, 0.5 * pi), 16);
        if (x > 0.5 * pi)
            v += gl_panels(integrand, 0.5 * pi, x, 16);
        return v;
    };
    return h;
}

void IdentityReport::finish() {
    abs_err = std::fabs(lhs - rhs);
    rel_err = abs_err / std::max({std::fabs(lhs), std::fabs(rhs), 1e-30});
}

const std::vector<std::string>& identity_catalog() {
    static const std::vector<std::string> ids = {
        "crofton",        "cauchy_crofton", "theorem2_equivalence",
        "hurwitz_even",   "hurwitz_odd_consistency",
        "masotti",        "power_sine",     "abs_cos_example",
        "corollary_25gg", "antipi",         "const_width_lambda"};
    return ids;
}

double identity_threshold(const std::string& identity, const std::string& route) {
    if (identity == "cauchy_crofton")
        return 1e-12;
    if (identity == "crofton")
        return 1e-5;
    if (identity == "theorem2_equivalence")
        return route == "const" ? 1e-12 : 1e-8;
    if (identity == "hurwitz_even")
        return route == "density" ? 1e-8 : 1e-4;
    if (identity == "const_width_lambda")
        return 1e-8;
    if (identity == "hurwitz_odd_consistency" || identity == "masotti" ||
        identity == "power_sine" || identity == "abs_cos_example" ||
        identity == "corollary_25gg" || identity == "antipi")
        return 1e-4;
    throw UnknownIdentityError("no threshold for identity: " + identity);
}

bool report_passes(const IdentityReport& rep, double body_area) {
    const double thr = identity_threshold(rep.identity, rep.route);
    const double scale = std::max({std::fabs(rep.lhs), std::fabs(rep.rhs), body_area});
    return rep.abs_err <= thr * scale;
}

namespace {

// Canonical instance per catalogue family, the set used by the
// all-densities identities.
std::vector<AngularDensity> canonical_densities() {
    return {density_catalog("const"),        density_catalog("abs_sin_4"),
            density_catalog("abs_cos"),      density_catalog("power_sine", 3),
            density_catalog("hurwitz", 2),   density_catalog("cos", 2)};
}

double lambda_of(const AngularDensity& f) {
    const auto eval = f.eval;
    const double v = gl_panels([&eval](double x) { return eval(x); }, 0.0, 0.5 * pi, 16) +
                     gl_panels([&eval](double x) { return eval(x); }, 0.5 * pi, pi, 16);
    return v / pi;
}

IdentityReport make_report(const std::string& id, const std::string& route,
                           const std::string& body_desc, const IdentityParams& params) {
    IdentityReport rep;
    rep.identity = id;
    rep.route = route;
    rep.body_desc = body_desc;
    rep.k = params.k;
    rep.m = params.m;
    return rep;
}

void note_pair(IdentityReport& rep, const QuadResult& q) {
    rep.quadrature.emplace_back("pair_n", static_cast<double>(q.n));
    rep.quadrature.emplace_back("pair_delta", q.last_delta);
}

void note_ext(IdentityReport& rep, const ExteriorResult& e) {
    rep.quadrature.emplace_back("angular_n", static_cast<double>(e.angular_n));
    rep.quadrature.emplace_back("radial_panels", static_cast<double>(e.radial_panels));
    rep.quadrature.emplace_back("ext_delta", e.last_delta);
}

double hurwitz_rhs(const SupportBody& body, int k) {
    const double L = perimeter(body);
    const double kd = static_cast<double>(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return L * L + sign * pi * pi * (kd * kd - 1.0) * body.spectrum().at(k);
}

std::vector<IdentityReport> verify_crofton(const SupportBody& body, const std::string& desc,
                                           const IdentityParams& params,
                                           const VerifyOptions& opts) {
    const double t0 = now_s();
    const ExteriorResult ext =
        exterior_integral(body, {"crofton", [](double w) { return crofton_g(w); }}, opts.ext_tol);
    const double L = perimeter(body);
    const double F = area(body);
    IdentityReport rep = make_report("crofton", "exterior", desc, params);
    rep.lhs = 2.0 * ext.value + 2.0 * pi * F;
    rep.rhs = L * L;
    rep.terms.emplace_back("exterior_integral", ext.value);
    rep.terms.emplace_back("area", F);
    rep.terms.emplace_back("perimeter", L);
    note_ext(rep, ext);
    rep.finish();
    rep.wall_time_s = now_s() - t0;
    return {rep};
}

std::vector<IdentityReport> verify_cauchy_crofton(const SupportBody& body,
                                                  const std::string& desc,
                                                  const IdentityParams& params,
                                                  const VerifyOptions& opts) {
    const double t0 = now_s();
    const QuadResult pair = pair_measure_direct(body, density_catalog("const"), opts.pair_tol);
    const double L = perimeter(body);
    IdentityReport rep = make_report("cauchy_crofton", "density", desc, params);
    rep.lhs = pair.value;
    rep.rhs = L * L;
    rep.terms.emplace_back("perimeter", L);
    note_pair(rep, pair);
    rep.finish();
    rep.wall_time_s = now_s() - t0;
    return {rep};
}

std::vector<IdentityReport> verify_theorem2(const SupportBody& body, const std::string& desc,
                                            const IdentityParams& params,
                                            const VerifyOptions& opts) {
    std::vector<IdentityReport> out;
    for (const AngularDensity& d : canonical_densities()) {
        const double t0 = now_s();
        const QuadResult direct = pair_measure_direct(body, d, opts.pair_tol);
        const double fourier = pair_measure_fourier(body, d);
        IdentityReport rep = make_report("theorem2_equivalence", d.id, desc, params);
        rep.lhs = direct.value;
        rep.rhs = fourier;
        rep.terms.emplace_back("A0", d.coeff(0));
        note_pair(rep, direct);
        rep.finish();
        rep.wall_time_s = now_s() - t0;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<IdentityReport> verify_hurwitz_even(const SupportBody& body, const std::string& desc,
                                                IdentityParams params,
                                                const VerifyOptions& opts) {
    if (params.k == 0)
        params.k = 2;
    if (params.k < 2 || params.k % 2 != 0)
        throw BadParamError("hurwitz_even: k must be even and at least 2");
    const int k = params.k;
    const double rhs = hurwitz_rhs(body, k);
    const double c_sq = body.spectrum().at(k);
    std::vector<IdentityReport> out;

    double t0 = now_s();
    const ExteriorResult ext = exterior_integral(
        body, {"hurwitz_f" + std::to_string(k), [k](double w) { return hurwitz_f(k, w); }},
        opts.ext_tol);
    IdentityReport ext_rep = make_report("hurwitz_even", "exterior", desc, params);
    ext_rep.lhs = ext.value;
    ext_rep.rhs = rhs;
    ext_rep.terms.emplace_back("c_sq_k", c_sq);
    note_ext(ext_rep, ext);
    ext_rep.finish();
    ext_rep.wall_time_s = now_s() - t0;
    out.push_back(std::move(ext_rep));

    t0 = now_s();
    const QuadResult pair = pair_measure_direct(body, density_catalog("hurwitz", k), opts.pair_tol);
    IdentityReport den_rep = make_report("hurwitz_even", "density", desc, params);
    den_rep.lhs = pair.value;
    den_rep.rhs = rhs;
    den_rep.terms.emplace_back("c_sq_k", c_sq);
    note_pair(den_rep, pair);
    den_rep.finish();
    den_rep.wall_time_s = now_s() - t0;
    out.push_back(std::move(den_rep));
    return out;
}

std::vector<IdentityReport> verify_hurwitz_odd(const SupportBody& body, const std::string& desc,
                                               IdentityParams params, const VerifyOptions& opts) {
    if (params.k == 0)
        params.k = 3;
    if (params.k < 3 || params.k % 2 != 1)
        throw BadParamError("hurwitz_odd_consistency: k must be odd and at least 3");
    const int k = params.k;
    const double kd = static_cast<double>(k);
    const double L = perimeter(body);
    const double F = area(body);
    const double c_sq = body.spectrum().at(k);
    std::vector<IdentityReport> out;

    double t0 = now_s();
    const ExteriorResult ext_fk = exterior_integral(
        body, {"hurwitz_f" + std::to_string(k), [k](double w) { return hurwitz_f(k, w); }},
        opts.ext_tol);
    IdentityReport ext_rep = make_report("hurwitz_odd_consistency", "exterior", desc, params);
    ext_rep.lhs = ext_fk.value;
    ext_rep.rhs = hurwitz_rhs(body, k);
    ext_rep.terms.emplace_back("c_sq_k", c_sq);
    note_ext(ext_rep, ext_fk);
    ext_rep.finish();
    ext_rep.wall_time_s = now_s() - t0;

    t0 = now_s();
    const ExteriorResult split = exterior_integral_split(
        body,
        {"hk_split" + std::to_string(k),
         [k](double w1, double w2) { return h_k(k, w1) + h_k(k, w2); }},
        opts.ext_tol);
    IdentityReport split_rep = make_report("hurwitz_odd_consistency", "split", desc, params);
    split_rep.lhs = (kd * kd - 1.0) * split.value;
    split_rep.rhs = pi * F;
    split_rep.terms.emplace_back("split_integral", split.value);
    split_rep.terms.emplace_back("area", F);
    note_ext(split_rep, split);
    split_rep.finish();
    split_rep.wall_time_s = now_s() - t0;

    t0 = now_s();
    const ExteriorResult equiv = exterior_integral_split(
        body,
        {"fk_crofton_split" + std::to_string(k),
         [k](double w1, double w2) {
             return hurwitz_f(k, w1) - 2.0 * crofton_g(w1) + hurwitz_f(k, w2) -
                    2.0 * crofton_g(w2);
         }},
        opts.ext_tol);
    IdentityReport equiv_rep = make_report("hurwitz_odd_consistency", "equivalent", desc, params);
    equiv_rep.lhs = equiv.value;
    equiv_rep.rhs = 2.0 * pi * F;
    note_ext(equiv_rep, equiv);
    equiv_rep.finish();
    equiv_rep.wall_time_s = now_s() - t0;

    // Full odd-k identity reassembled from the measured split integral;
    // this is the derivation-chain check, distinct from the direct
    // exterior check above.
    IdentityReport chain_rep = make_report("hurwitz_odd_consistency", "chain", desc, params);
    chain_rep.lhs = ext_fk.value;
    chain_rep.rhs = L * L - pi * pi * (kd * kd - 1.0) * c_sq - 2.0 * pi * F +
                    2.0 * (kd * kd - 1.0) * split.value;
    chain_rep.terms.emplace_back("split_integral", split.value);
    chain_rep.finish();
    chain_rep.wall_time_s = 0.0;

    out.push_back(std::move(ext_rep));
    out.push_back(std::move(split_rep));
    out.push_back(std::move(equiv_rep));
    out.push_back(std::move(chain_rep));
    return out;
}

std::vector<IdentityReport> verify_masotti(const SupportBody& body, const std::string& desc,
                                           const IdentityParams& params,
                                           const VerifyOptions& opts) {
    const double L = perimeter(body);
    const double F = area(body);
    const HarmonicSpectrum sp = body.spectrum();
    StableSum series(-pi * pi * F);
    series.add(4.0 * L * L / pi);
    for (std::size_t n = 1; 2 * n <= sp.c_sq.size(); ++n) {
        const double nn = static_cast<double>(n);
        series.add(8.0 * pi * sp.at(2 * n) / (1.0 - 4.0 * nn * nn));
    }

    double t0 = now_s();
    const ExteriorResult ext =
        exterior_integral(body, {"masotti", [](double w) { return masotti_g(w); }}, opts.ext_tol);
    IdentityReport ext_rep = make_report("masotti", "exterior", desc, params);
    ext_rep.lhs = ext.value;
    ext_rep.rhs = series.get();
    ext_rep.terms.emplace_back("area", F);
    ext_rep.terms.emplace_back("perimeter", L);
    note_ext(ext_rep, ext);
    ext_rep.finish();
    ext_rep.wall_time_s = now_s() - t0;

    // 2 integral of |sin| over pairs equals pi^2 F plus the exterior
    // integral; the catalogue carries 4|sin|, hence the /2.
    t0 = now_s();
    const QuadResult pair = pair_measure_direct(body, density_catalog("abs_sin_4"), opts.pair_tol);
    IdentityReport den_rep = make_report("masotti", "density", desc, params);
    den_rep.lhs = 0.5 * pair.value;
    den_rep.rhs = pi * pi * F + ext.value;
    den_rep.terms.emplace_back("pair_abs_sin_4", pair.value);
    den_rep.terms.emplace_back("exterior_integral", ext.value);
    note_pair(den_rep, pair);
    den_rep.finish();
    den_rep.wall_time_s = now_s() - t0;

    return {std::move(ext_rep), std::move(den_rep)};
}

std::vector<IdentityReport> verify_power_sine(const SupportBody& body, const std::string& desc,
                                              IdentityParams params, const VerifyOptions& opts) {
    if (params.m == 0)
        params.m = 3;
    if (params.m < 3)
        throw BadParamError("power_sine: m must be at least 3");
    const int m = params.m;
    const double L = perimeter(body);
    const HarmonicSpectrum sp = body.spectrum();
    StableSum series(0.5 * power_sine_A(m, 0) * L * L);
    for (std::size_t k = 2; k <= sp.c_sq.size(); k += 2)
        series.add(0.5 * pi * pi * power_sine_A(m, k) * sp.at(k));

    double t0 = now_s();
    const double md = static_cast<double>(m);
    const ExteriorResult ext = exterior_integral(
        body, {"sin_pow" + std::to_string(m),
               [md](double w) { return std::pow(std::sin(w), md); }},
        opts.ext_tol);
    IdentityReport ext_rep = make_report("power_sine", "exterior", desc, params);
    ext_rep.lhs = ext.value;
    ext_rep.rhs = series.get();
    ext_rep.terms.emplace_back("A0", power_sine_A(m, 0));
    note_ext(ext_rep, ext);
    ext_rep.finish();
    ext_rep.wall_time_s = now_s() - t0;

    t0 = now_s();
    const QuadResult pair =
        pair_measure_direct(body, density_catalog("power_sine", m), opts.pair_tol);
    IdentityReport den_rep = make_report("power_sine", "density", desc, params);
    den_rep.lhs = 0.5 * pair.value;
    den_rep.rhs = ext.value;
    den_rep.terms.emplace_back("pair_measure", pair.value);
    note_pair(den_rep, pair);
    den_rep.finish();
    den_rep.wall_time_s = now_s() - t0;

    return {std::move(ext_rep), std::move(den_rep)};
}

std::vector<IdentityReport> verify_abs_cos(const SupportBody& body, const std::string& desc,
                                           const IdentityParams& params,
                                           const VerifyOptions& opts) {
    const double t0 = now_s();
    const double F = area(body);
    const QuadResult pair = pair_measure_direct(body, density_catalog("abs_cos"), opts.pair_tol);
    const ExteriorResult ext = exterior_integral(
        body, {"abs_cos_H", [](double w) { return abs_cos_H(w); }}, opts.ext_tol);
    IdentityReport rep = make_report("abs_cos_example", "density_vs_exterior", desc, params);
    rep.lhs = pair.value;
    rep.rhs = pi * F + 2.0 * ext.value;
    rep.terms.emplace_back("fourier_side", pair_measure_fourier(body, density_catalog("abs_cos")));
    rep.terms.emplace_back("exterior_integral", ext.value);
    rep.terms.emplace_back("area", F);
    note_pair(rep, pair);
    note_ext(rep, ext);
    rep.finish();
    rep.wall_time_s = now_s() - t0;
    return {rep};
}

std::vector<IdentityReport> verify_corollary_25gg(const SupportBody& body,
                                                  const std::string& desc,
                                                  const IdentityParams& params,
                                                  const VerifyOptions& opts) {
    const double F = area(body);
    std::vector<IdentityReport> out;
    for (const AngularDensity& d : canonical_densities()) {
        const double t0 = now_s();
        const HFunction h = build_H(d);
        const auto h_eval = h.eval;
        const ExteriorResult ext =
            exterior_integral(body, {h.id, [&h_eval](double w) { return h_eval(w); }},
                              opts.ext_tol);
        IdentityReport rep = make_report("corollary_25gg", d.id, desc, params);
        rep.lhs = pair_measure_fourier(body, d);
        rep.rhs = 2.0 * h_eval(pi) * F + 2.0 * ext.value;
        rep.terms.emplace_back("H_pi", h_eval(pi));
        rep.terms.emplace_back("exterior_integral", ext.value);
        note_ext(rep, ext);
        rep.finish();
        rep.wall_time_s = now_s() - t0;
        out.push_back(std::move(rep));
    }
    return out;
}

std::vector<IdentityReport> verify_antipi(const SupportBody& body, const std::string& desc,
                                          IdentityParams params, const VerifyOptions& opts) {
    if (params.k == 0)
        params.k = 3;
    if (params.k < 1 || params.k % 2 != 1)
        throw BadParamError("antipi: k must be odd");
    const int k = params.k;
    const double t0 = now_s();
    const double F = area(body);
    const ExteriorResult combo = exterior_integral_split(
        body,
        {"antipi_combo" + std::to_string(k),
         [k](double w1, double w2) {
             return 2.0 * h_k(k, w1) + 2.0 * h_k(k, w2) - h_k(k, w1 + w2);
         }},
        opts.ext_tol);
    // Interior points contribute with angles alpha = 0, beta = pi, so the
    // area coefficient is 4H(pi/2) - H(pi); for even anti-pi-periodic
    // densities 2H(pi/2) - H(pi) vanishes identically, which collapses it
    // to 2H(pi/2).
    const double f_coeff = 4.0 * h_k(k, 0.5 * pi) - h_k(k, pi);
    IdentityReport rep = make_report("antipi", "split", desc, params);
    rep.lhs = pi * pi * body.spectrum().at(k);
    rep.rhs = 2.0 * f_coeff * F + 2.0 * combo.value;
    rep.terms.emplace_back("F_coefficient", f_coeff);
    rep.terms.emplace_back("structural_zero", 2.0 * h_k(k, 0.5 * pi) - h_k(k, pi));
    rep.terms.emplace_back("split_combo", combo.value);
    rep.terms.emplace_back("c_sq_k", body.spectrum().at(k));
    note_ext(rep, combo);
    rep.finish();
    rep.wall_time_s = now_s() - t0;
    return {rep};
}

std::vector<IdentityReport> verify_const_width(const SupportBody& body, const std::string& desc,
                                               const IdentityParams& params,
                                               const VerifyOptions& opts) {
    const double L = perimeter(body);
    double even_max = 0.0;
    const HarmonicSpectrum sp = body.spectrum();
    for (std::size_t k = 2; k <= sp.c_sq.size(); k += 2)
        even_max = std::max(even_max, sp.at(k));
    std::vector<IdentityReport> out;
    for (const AngularDensity& d : canonical_densities()) {
        if (d.periodicity != Periodicity::pi_periodic)
            continue;
        const double t0 = now_s();
        const QuadResult pair = pair_measure_direct(body, d, opts.pair_tol);
        const double lambda = lambda_of(d);
        IdentityReport rep = make_report("const_width_lambda", d.id, desc, params);
        rep.lhs = pair.value;
        rep.rhs = lambda * L * L;
        rep.terms.emplace_back("lambda", lambda);
        rep.terms.emplace_back("A0", d.coeff(0));
        rep.terms.emplace_back("even_csq_max", even_max);
        note_pair(rep, pair);
        rep.finish();
        rep.wall_time_s = now_s() - t0;
        out.push_back(std::move(rep));
    }
    return out;
}

} // namespace

std::vector<IdentityReport> verify(const std::string& identity_id, const SupportBody& body,
                                   const std::string& body_desc, const IdentityParams& params,
                                   const VerifyOptions& opts) {
    if (identity_id == "crofton")
        return verify_crofton(body, body_desc, params, opts);
    if (identity_id == "cauchy_crofton")
        return verify_cauchy_crofton(body, body_desc, params, opts);
    if (identity_id == "theorem2_equivalence")
        return verify_theorem2(body, body_desc, params, opts);
    if (identity_id == "hurwitz_even")
        return verify_hurwitz_even(body, body_desc, params, opts);
    if (identity_id == "hurwitz_odd_consistency")
        return verify_hurwitz_odd(body, body_desc, params, opts);
    if (identity_id == "masotti")
        return verify_masotti(body, body_desc, params, opts);
    if (identity_id == "power_sine")
        return verify_power_sine(body, body_desc, params, opts);
    if (identity_id == "abs_cos_example")
        return verify_abs_cos(body, body_desc, params, opts);
    if (identity_id == "corollary_25gg")
        return verify_corollary_25gg(body, body_desc, params, opts);
    if (identity_id == "antipi")
        return verify_antipi(body, body_desc, params, opts);
    if (identity_id == "const_width_lambda")
        return verify_const_width(body, body_desc, params, opts);
    throw UnknownIdentityError("unknown identity: " + identity_id);
}

} // namespace visang
