#pragma once

#include "visang/geometry.hpp"
#include "visang/quadrature.hpp"

#include <functional>
#include <string>
#include <vector>

namespace visang {

/// A line in foot-of-perpendicular coordinates: p >= 0, phi in [0, 2pi).
struct LineCoords {
    double p = 0.0;
    double phi = 0.0;
};

/// The line hits the body iff p <= p_body(phi).
bool line_hits(const SupportBody& body, LineCoords line);

enum class Periodicity { pi_periodic, anti_pi_periodic, general_2pi };

/// An angular density f on line-pair angle differences, with its cosine
/// Fourier coefficients. All catalogued densities are even, so the sine
/// coefficients vanish identically.
struct AngularDensity {
    std::string id;       ///< canonical spec, e.g. "power_sine:3"
    std::string family;   ///< const | abs_sin_4 | abs_cos | power_sine | hurwitz | cos
    int param = 0;        ///< k or m where applicable
    Periodicity periodicity = Periodicity::general_2pi;
    bool even = true;
    std::function<double(double)> eval;
    std::function<double(std::size_t)> coeff;      ///< A_n, closed form
    std::function<double(std::size_t)> sine_coeff; ///< B_n; identically 0 here
};

/// Catalogue lookup. Families: const, abs_sin_4 (4|sin|), abs_cos (|cos|),
/// power_sine:m (m >= 3), hurwitz:k (k >= 2), cos:k (k >= 1).
/// Throws UnknownDensityError / BadParamError.
AngularDensity density_catalog(const std::string& family, int param = 0);

/// Parses "family" or "family:param".
AngularDensity density_from_spec(const std::string& spec);

/// Fourier-side pair measure over line pairs meeting the body:
/// A_0 L^2 + pi^2 sum_n A_n c_n^2 (finite, exact for trig-polynomial bodies).
double pair_measure_fourier(const SupportBody& body, const AngularDensity& f);

/// Direct quadrature of the same measure,
/// integral of p(phi1) p(phi2) f(phi2 - phi1) over the period square, on a
/// uniform grid (difference-kink lines land on nodes) doubled until the
/// relative change is below tol. The double sum is reduced through the
/// circular correlation of the p samples, row order fixed.
QuadResult pair_measure_direct(const SupportBody& body, const AngularDensity& f, double tol,
                               std::size_t n0 = 64, std::size_t n_max = (1u << 16));

struct RigidMotion {
    double theta = 0.0;    ///< rotation angle
    PlanarPoint shift;     ///< translation, applied after the rotation
};

/// Body moved by p_new(phi) = p(phi - theta) + v . u(phi); revalidates, so
/// NotPositiveError is thrown when the origin leaves the body.
SupportBody rigid_motion(const SupportBody& body, double theta, PlanarPoint shift);

struct InvarianceResult {
    double base_value = 0.0;
    double max_rel_deviation = 0.0;
    std::vector<double> values;
};

/// Largest relative change of the Fourier-side pair measure over the given
/// motions. For pi-periodic densities this must vanish; densities with
/// A_1 != 0 expose the translation counterexample (reported, not asserted).
InvarianceResult invariance_check(const SupportBody& body, const AngularDensity& f,
                                  const std::vector<RigidMotion>& motions);

} // namespace visang
