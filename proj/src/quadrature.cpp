#include "visang/quadrature.hpp"

#include "visang/errors.hpp"
#include "visang/stable_sum.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace visang {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

double trap_period(const std::function<double(double)>& f, std::size_t n) {
    StableSum s;
    const double h = two_pi / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
        s.add(f(h * static_cast<double>(j)));
    return s.get() * h;
}

double trap_period_2d(const std::function<double(double, double)>& f, std::size_t n) {
    const double h = two_pi / static_cast<double>(n);
    StableSum total;
    for (std::size_t i = 0; i < n; ++i) {
        StableSum row;
        const double x = h * static_cast<double>(i);
        for (std::size_t j = 0; j < n; ++j)
            row.add(f(x, h * static_cast<double>(j)));
        total.add(row.get());
    }
    return total.get() * h * h;
}

// Convergence test used by all doubling loops: relative where the value has
// a scale, with a small absolute floor so exact zeros terminate.
bool accepted(double cur, double prev, double tol, double scale_hint) {
    const double delta = std::fabs(cur - prev);
    const double scale = std::max({std::fabs(cur), std::fabs(prev), scale_hint});
    return delta <= tol * std::max(scale, 1e-300) || delta <= 1e-15 * (1.0 + scale_hint);
}

} // namespace

QuadResult periodic_quad(const std::function<double(double)>& f, double tol,
                         std::size_t n0, std::size_t n_max) {
    QuadResult res;
    double prev = trap_period(f, n0);
    double scale_hint = 0.0;
    for (std::size_t n = 2 * n0; n <= n_max; n *= 2) {
        const double cur = trap_period(f, n);
        scale_hint = std::max(scale_hint, std::fabs(cur));
        res.value = cur;
        res.n = n;
        res.last_delta = std::fabs(cur - prev);
        if (accepted(cur, prev, tol, scale_hint)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    throw NoConvergenceError("periodic_quad: no convergence after n=" + std::to_string(n_max));
}

QuadResult periodic_quad_2d(const std::function<double(double, double)>& f, double tol,
                            std::size_t n0, std::size_t n_max) {
    QuadResult res;
    double prev = trap_period_2d(f, n0);
    double scale_hint = 0.0;
    for (std::size_t n = 2 * n0; n <= n_max; n *= 2) {
        const double cur = trap_period_2d(f, n);
        scale_hint = std::max(scale_hint, std::fabs(cur));
        res.value = cur;
        res.n = n;
        res.last_delta = std::fabs(cur - prev);
        if (accepted(cur, prev, tol, scale_hint)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    throw NoConvergenceError("periodic_quad_2d: no convergence after n=" + std::to_string(n_max));
}

namespace {

// Newton iteration on Legendre polynomials; nodes accurate to ~1 ulp.
std::pair<std::vector<double>, std::vector<double>> compute_gl(std::size_t n) {
    std::vector<double> x(n), w(n);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / static_cast<double>(j);
            }
            pp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) < 1e-15)
                break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return {std::move(x), std::move(w)};
}

std::mutex gl_mutex;
std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> gl_cache;

const std::pair<std::vector<double>, std::vector<double>>& gl_rule(std::size_t n) {
    std::lock_guard<std::mutex> lock(gl_mutex);
    auto it = gl_cache.find(n);
    if (it == gl_cache.end())
        it = gl_cache.emplace(n, compute_gl(n)).first;
    return it->second;
}

} // namespace

const std::vector<double>& gauss_legendre_nodes(std::size_t n) { return gl_rule(n).first; }
const std::vector<double>& gauss_legendre_weights(std::size_t n) { return gl_rule(n).second; }

double gl_panels(const std::function<double(double)>& f, double a, double b,
                 std::size_t panels, std::size_t points) {
    const auto& x = gauss_legendre_nodes(points);
    const auto& w = gauss_legendre_weights(points);
    const double h = (b - a) / static_cast<double>(panels);
    StableSum s;
    for (std::size_t p = 0; p < panels; ++p) {
        const double mid = a + h * (static_cast<double>(p) + 0.5);
        const double half = 0.5 * h;
        for (std::size_t k = 0; k < points; ++k)
            s.add(w[k] * f(mid + half * x[k]) * half);
    }
    return s.get();
}

QuadResult gl_adaptive(const std::function<double(double)>& f, double a, double b,
                       double tol, std::size_t panels0, std::size_t points,
                       std::size_t max_doublings) {
    QuadResult res;
    double prev = gl_panels(f, a, b, panels0, points);
    double scale_hint = std::fabs(prev);
    std::size_t panels = panels0;
    for (std::size_t lvl = 0; lvl < max_doublings; ++lvl) {
        panels *= 2;
        const double cur = gl_panels(f, a, b, panels, points);
        scale_hint = std::max(scale_hint, std::fabs(cur));
        res.value = cur;
        res.n = panels;
        res.last_delta = std::fabs(cur - prev);
        if (accepted(cur, prev, tol, scale_hint)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    throw NoConvergenceError("gl_adaptive: no convergence after " +
                             std::to_string(panels) + " panels");
}

} // namespace visang
