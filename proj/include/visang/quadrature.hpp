#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace visang {

/// Result of an adaptive quadrature together with its refinement metadata.
struct QuadResult {
    double value = 0.0;
    std::size_t n = 0;          ///< grid points per axis (trapezoid) or panels (GL)
    double last_delta = 0.0;    ///< |I_n - I_{n/2}| of the accepted step
    bool converged = false;

    operator double() const { return value; }
};

/// Integral of a 2*pi-periodic function over one period. Trapezoidal rule
/// with grid doubling from n0 until the relative change drops below tol.
/// Throws NoConvergenceError when n_max is exhausted.
QuadResult periodic_quad(const std::function<double(double)>& f, double tol,
                         std::size_t n0 = 64, std::size_t n_max = (1u << 20));

/// Same scheme for a doubly 2*pi-periodic integrand over one period square.
/// The grid is uniform and identical on both axes, so difference arguments
/// phi2 - phi1 land on multiples of 2*pi/n (kinks at 0 and pi on nodes for
/// even n).
QuadResult periodic_quad_2d(const std::function<double(double, double)>& f, double tol,
                            std::size_t n0 = 64, std::size_t n_max = (1u << 12));

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per n and cached.
const std::vector<double>& gauss_legendre_nodes(std::size_t n);
const std::vector<double>& gauss_legendre_weights(std::size_t n);

/// Gauss-Legendre integral of f over [a, b] split into `panels` equal panels
/// with `points` nodes each. Deterministic left-to-right accumulation.
double gl_panels(const std::function<double(double)>& f, double a, double b,
                 std::size_t panels, std::size_t points = 16);

/// gl_panels with panel doubling until the relative change is below tol.
QuadResult gl_adaptive(const std::function<double(double)>& f, double a, double b,
                       double tol, std::size_t panels0 = 2, std::size_t points = 16,
                       std::size_t max_doublings = 14);

} // namespace visang
