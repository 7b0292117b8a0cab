#pragma once

#include "visang/geometry.hpp"

#include <functional>
#include <string>
#include <vector>

namespace visang {

/// Integrand g(omega) for integrals over the exterior of a body. decay_order
/// is the claimed smallest q with g(omega) = O(omega^q) as omega -> 0; the
/// improper integral needs q >= 3 and a spot check at omega = 1e-2, 1e-3,
/// 1e-4 guards it at runtime.
struct ExteriorIntegrand {
    std::string id;
    std::function<double(double)> eval;
    int decay_order = 3;
};

/// Integrand g2(omega1, omega2) with g2 = O((omega1 + omega2)^3) near 0.
struct SplitIntegrand {
    std::string id;
    std::function<double(double, double)> eval;
};

struct ExteriorResult {
    double value = 0.0;
    std::size_t angular_n = 0;
    std::size_t radial_panels = 0; ///< per refinement stage, inner = outer
    double last_delta = 0.0;
    bool converged = false;

    operator double() const { return value; }
};

/// Radial coordinate of the boundary in direction theta: the unique r > 0
/// with exterior margin zero at r u(theta), found by bisection on the
/// (convex in r) margin followed by Newton polish to |margin| < 1e-10.
double radial_boundary(const SupportBody& body, double theta);

/// Sampled radial boundary function on a uniform angle grid.
struct RadialProfile {
    std::vector<double> theta;
    std::vector<double> rho;
    double max_rho = 0.0;
};

RadialProfile radial_profile(const SupportBody& body, std::size_t n);

/// integral over P outside the body of g(omega(P)) dP, computed in polar
/// coordinates. The radial line is split at R0 = 2 max rho: the annulus
/// [rho(theta), R0] is integrated with Gauss-Legendre panels under
/// r = rho + s^2 (omega has square-root behaviour at the boundary), the tail
/// under r = R0/u, u in (0,1], which is exact for O(omega^3) integrands.
/// Angular direction: trapezoid from n = 128 with doubling; panel counts
/// double together with it. omega is recomputed from the tangent normals at
/// every node.
ExteriorResult exterior_integral(const SupportBody& body, const ExteriorIntegrand& g,
                                 double tol, double r0_factor = 2.0);

/// Same scheme for integrands of the split visual angle (omega1, omega2).
ExteriorResult exterior_integral_split(const SupportBody& body, const SplitIntegrand& g2,
                                       double tol, double r0_factor = 2.0);

} // namespace visang
