#pragma once

#include "visang/exterior.hpp"
#include "visang/geometry.hpp"
#include "visang/line_space.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace visang {

/// x - sin x, series-stabilised below |x| = 1e-3 (leading term x^3/6).
double crofton_g(double x);

/// x^2 - sin^2 x, series-stabilised below |x| = 1e-3 (leading term x^4/3).
double masotti_g(double x);

/// f_k(x) = -2 sin x + (k+1)/(k-1) sin((k-1)x) - (k-1)/(k+1) sin((k+1)x),
/// k >= 2, series (k^2/3) x^3 + ... below |x| = 1e-3.
double hurwitz_f(int k, double x);

/// H_k with H_k'' = cos(kx) sin x, H_k(0) = H_k'(0) = 0:
/// (f_k(x) + 2(sin x - x)) / (2(k^2-1)) for k >= 2, (2x - sin 2x)/8 for k = 1.
double h_k(int k, double x);

/// The piecewise H for the |cos| density: (x - sin x cos x)/4 on [0, pi/2],
/// (3x - pi + sin x cos x)/4 on [pi/2, pi]; C^1 at pi/2.
double abs_cos_H(double x);

/// Double primitive of f(x) sin x with H(0) = H'(0) = 0, the bridge between
/// pair measures and exterior visual-angle integrals.
struct HFunction {
    std::string id;
    std::string source_density;
    bool closed_form = true;
    std::function<double(double)> eval; ///< on [0, pi]
};

/// Closed forms for every catalogued density; numeric double integration
/// otherwise.
HFunction build_H(const AngularDensity& f);

/// Numeric construction regardless of the catalogue (test cross-check):
/// H(x) = integral_0^x (x - s) f(s) sin(s) ds on Gauss-Legendre panels
/// split at pi/2.
HFunction build_H_numeric(const AngularDensity& f);

/// Spec-level name for the power-sine Fourier coefficients.
double power_sine_A(int m, std::size_t k);

/// One verification run of one route of an identity, with independently
/// computed sides and enough metadata to localise a failure.
struct IdentityReport {
    std::string identity;
    std::string route;
    std::string body_desc;
    int k = 0; ///< harmonic parameter where applicable
    int m = 0; ///< sine power where applicable
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0; ///< abs_err / max(|lhs|, |rhs|, 1e-30)
    std::vector<std::pair<std::string, double>> terms;      ///< per-term breakdown
    std::vector<std::pair<std::string, double>> quadrature; ///< grid sizes, deltas
    double wall_time_s = 0.0;

    void finish(); ///< fills abs_err / rel_err from lhs and rhs
};

struct VerifyOptions {
    double pair_tol = 3e-8; ///< requested tolerance of direct pair measures
    double ext_tol = 1e-7;  ///< requested tolerance of exterior integrals
};

/// Identity ids accepted by verify(), in canonical order.
const std::vector<std::string>& identity_catalog();

/// Default pass thresholds on rel_err (scaled against max(|lhs|,|rhs|,F)
/// so identically-zero identities compare against the body scale).
double identity_threshold(const std::string& identity, const std::string& route);

/// Whether a report passes its threshold.
bool report_passes(const IdentityReport& rep, double body_area);

/// Runs one identity on one body; returns one report per verification
/// route (e.g. hurwitz_even has an exterior and a density route). k and m
/// are taken from params where the identity needs them.
/// Throws UnknownIdentityError / BadParamError.
struct IdentityParams {
    int k = 0;
    int m = 0;
};
std::vector<IdentityReport> verify(const std::string& identity_id, const SupportBody& body,
                                   const std::string& body_desc, const IdentityParams& params,
                                   const VerifyOptions& opts = {});

} // namespace visang
