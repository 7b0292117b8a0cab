#pragma once

// Test-only oracles, kept independent of the implementation paths they
// check: 1-D radial reductions for the centred disk, a boundary-polyline
// visual angle, and plain quadrature for Fourier/Gamma cross-checks.

#include "visang/geometry.hpp"
#include "visang/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracles {

// integral over the exterior of a centred disk of radius r of g(omega),
// with omega(P) = 2 asin(r/|P|): substituting |P| = r/sin(t) collapses it to
// 2 pi r^2 * integral_0^{pi/2} g(2t) cos t / sin^3 t dt, analytic on (0, pi/2].
inline double disk_exterior(const std::function<double(double)>& g, double r, double tol = 1e-11) {
    const auto integrand = [&g](double t) {
        return g(2.0 * t) * std::cos(t) / std::pow(std::sin(t), 3);
    };
    return 2.0 * std::numbers::pi * r * r *
           visang::gl_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, tol, 4).value;
}

// Same reduction for split integrands; by symmetry omega1 = omega2 = t for
// the centred disk.
inline double disk_exterior_split(const std::function<double(double, double)>& g2, double r,
                                  double tol = 1e-11) {
    const auto integrand = [&g2](double t) {
        return g2(t, t) * std::cos(t) / std::pow(std::sin(t), 3);
    };
    return 2.0 * std::numbers::pi * r * r *
           visang::gl_adaptive(integrand, 0.0, 0.5 * std::numbers::pi, tol, 4).value;
}

// Boundary point of the support parameterisation at normal angle phi.
inline visang::PlanarPoint boundary_point(const visang::SupportBody& body, double phi) {
    const visang::SupportEval e = body.eval(phi);
    return {e.p * std::cos(phi) - e.dp * std::sin(phi),
            e.p * std::sin(phi) + e.dp * std::cos(phi)};
}

// Visual angle as the width of the direction fan towards a dense boundary
// polyline: 2 pi minus the largest gap between consecutive ray directions.
inline double polyline_visual_angle(const visang::SupportBody& body, visang::PlanarPoint p,
                                    std::size_t n = 100000) {
    std::vector<double> ang(n);
    for (std::size_t j = 0; j < n; ++j) {
        const visang::PlanarPoint b =
            boundary_point(body, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                     static_cast<double>(n));
        ang[j] = std::atan2(b.y - p.y, b.x - p.x);
    }
    std::sort(ang.begin(), ang.end());
    double gap = ang.front() + 2.0 * std::numbers::pi - ang.back();
    for (std::size_t j = 1; j < n; ++j)
        gap = std::max(gap, ang[j] - ang[j - 1]);
    return 2.0 * std::numbers::pi - gap;
}

// integral_0^pi sin^m(x) cos(kx) dx by quadrature.
inline double sin_power_cos_quad(int m, int k) {
    return visang::gl_adaptive(
               [m, k](double x) { return std::pow(std::sin(x), m) * std::cos(k * x); }, 0.0,
               std::numbers::pi, 1e-13, 4)
        .value;
}

// Polyline arc length with one Richardson step (h^2 -> h^4).
inline double polyline_perimeter(const visang::SupportBody& body, std::size_t n = 1 << 15) {
    const auto length = [&body](std::size_t nn) {
        double total = 0.0;
        visang::PlanarPoint prev = boundary_point(body, 0.0);
        for (std::size_t j = 1; j <= nn; ++j) {
            const visang::PlanarPoint cur =
                boundary_point(body, 2.0 * std::numbers::pi * static_cast<double>(j % nn) /
                                         static_cast<double>(nn));
            total += std::hypot(cur.x - prev.x, cur.y - prev.y);
            prev = cur;
        }
        return total;
    };
    const double l1 = length(n), l2 = length(2 * n);
    return (4.0 * l2 - l1) / 3.0;
}

} // namespace oracles
