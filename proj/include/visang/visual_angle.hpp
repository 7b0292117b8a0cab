#pragma once

#include "visang/geometry.hpp"

#include <utility>

namespace visang {

/// Exterior test through the support function: P is exterior iff
/// max_phi [P.u(phi) - p(phi)] > 0.
struct ExteriorCheck {
    bool exterior = false;
    double margin = 0.0;   ///< max_phi h(phi)
    double phi_max = 0.0;  ///< maximising normal angle
};

ExteriorCheck is_exterior(const SupportBody& body, PlanarPoint p);

/// Tangent geometry of a strictly exterior point. The two support lines
/// through P have outward normal angles phi_a < phi_b. alpha and beta are
/// the line directions measured against the unit vector orthogonal to OP
/// (positively oriented frame), unwrapped modulo pi so that the radial
/// direction pi/2 lies strictly between them; beta - alpha then reproduces
/// the visual angle. For points beyond the support line in their own
/// direction (|P| > p(arg P)) this is the plain 0 < alpha < pi/2 < beta < pi
/// bracket; for exterior points inside that support line the bracket shifts
/// by pi on one side. omega1 = pi/2 - alpha and omega2 = beta - pi/2 are the
/// angles under which the two halves of the body cut by the line OP are seen.
struct VisualAngleData {
    PlanarPoint point;
    double phi_a = 0.0;
    double phi_b = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double omega = 0.0;  ///< from the normal angles: pi - circular distance
    double omega1 = 0.0; ///< pi/2 - alpha
    double omega2 = 0.0; ///< beta - pi/2
};

/// Outward normal angles in [0, 2pi) of the two support lines through P,
/// each root of h refined to |delta phi| < 1e-12. Requires margin > 1e-9.
/// Throws PointNotExteriorError / RootCountError.
std::pair<double, double> tangent_normals(const SupportBody& body, PlanarPoint p);

/// Visual angle from the normal angles alone (independent of the
/// direction-angle route): omega = pi - circ_dist(phi_a, phi_b).
double visual_angle(const SupportBody& body, PlanarPoint p);

/// Direction of the line through P with outward normal angle phi_normal,
/// measured in (0, pi) against the unit vector orthogonal to OP.
/// Throws DegenerateDirectionError when P is the origin.
double direction_angle(PlanarPoint p, double phi_normal);

/// (omega1, omega2) with omega1 + omega2 equal to the visual angle.
std::pair<double, double> omega_split(const SupportBody& body, PlanarPoint p);

/// Full tangent geometry in one pass (shared by probe and the exterior
/// integrators).
VisualAngleData analyze_point(const SupportBody& body, PlanarPoint p);

} // namespace visang
