#include "visang/exterior.hpp"

#include "visang/errors.hpp"
#include "visang/parallel.hpp"
#include "visang/quadrature.hpp"
#include "visang/stable_sum.hpp"
#include "visang/visual_angle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace visang {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

struct RayMax {
    double phi = 0.0;
    double h = 0.0;
};

// Maximum of h(phi) = P.u(phi) - p(phi) for P = r u(theta): dense grid
// argmax plus Newton on h' (golden-section fallback when Newton is not
// trustworthy).
RayMax ray_margin(const SupportBody& body, double r, double theta) {
    const std::size_t n = SupportBody::grid_size;
    const auto ct = grid_cos_table(n);
    const auto st = grid_sin_table(n);
    const auto pg = body.p_grid();
    const double ex = std::cos(theta), ey = std::sin(theta);
    std::size_t best = 0;
    double h_best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double h = r * (ct[j] * ex + st[j] * ey) - pg[j];
        if (h > h_best) {
            h_best = h;
            best = j;
        }
    }
    const double step = two_pi / static_cast<double>(n);
    double phi = step * static_cast<double>(best);
    bool ok = true;
    for (int it = 0; it < 8; ++it) {
        const SupportEval e = body.eval(phi);
        const double dh = -r * std::sin(phi - theta) - e.dp;
        const double ddh = -r * std::cos(phi - theta) - e.ddp;
        if (!(ddh < 0.0)) {
            ok = false;
            break;
        }
        const double delta = dh / ddh;
        phi -= delta;
        if (std::fabs(delta) > 2.0 * step) {
            ok = false;
            break;
        }
        if (std::fabs(delta) < 1e-13)
            break;
    }
    if (!ok)
        phi = step * static_cast<double>(best); // keep the grid argmax
    RayMax out;
    out.phi = phi;
    out.h = r * std::cos(phi - theta) - body.eval(phi).p;
    if (out.h < h_best) { // polish must not lose against the grid
        out.phi = step * static_cast<double>(best);
        out.h = h_best;
    }
    return out;
}

} // namespace

double radial_boundary(const SupportBody& body, double theta) {
    double lo = 0.0;
    double hi = body.support_upper_bound() + 1.0;
    // margin(r) is convex in r, negative at 0 and positive at hi: one root.
    for (int it = 0; it < 30; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (ray_margin(body, mid, theta).h > 0.0)
            hi = mid;
        else
            lo = mid;
    }
    double r = 0.5 * (lo + hi);
    for (int it = 0; it < 12; ++it) {
        const RayMax m = ray_margin(body, r, theta);
        if (std::fabs(m.h) < 1e-12)
            break;
        const double slope = std::cos(m.phi - theta);
        if (!(slope > 0.0))
            break;
        const double next = std::clamp(r - m.h / slope, lo, hi);
        if (next == r)
            break;
        r = next;
    }
    return r;
}

RadialProfile radial_profile(const SupportBody& body, std::size_t n) {
    RadialProfile out;
    out.theta.resize(n);
    out.rho.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        out.theta[j] = two_pi * static_cast<double>(j) / static_cast<double>(n);
        out.rho[j] = radial_boundary(body, out.theta[j]);
        out.max_rho = std::max(out.max_rho, out.rho[j]);
    }
    return out;
}

namespace {

void check_decay(const ExteriorIntegrand& g) {
    const double w[3] = {1e-2, 1e-3, 1e-4};
    double ratio[3];
    for (int i = 0; i < 3; ++i) {
        const double v = g.eval(w[i]);
        if (!std::isfinite(v))
            throw DecayCheckError("integrand " + g.id + " not finite at omega=" +
                                  std::to_string(w[i]));
        ratio[i] = std::fabs(v) / (w[i] * w[i] * w[i]);
    }
    const double floor = 1e-12 * (1.0 + ratio[0]);
    if (ratio[1] > 3.0 * ratio[0] + floor || ratio[2] > 3.0 * ratio[1] + floor)
        throw DecayCheckError("integrand " + g.id +
                              " decays slower than omega^3 near zero");
}

void check_decay_split(const SplitIntegrand& g2) {
    const double w[3] = {1e-2, 1e-3, 1e-4};
    double ratio[3];
    for (int i = 0; i < 3; ++i) {
        const double v = std::fabs(g2.eval(0.5 * w[i], 0.5 * w[i])) +
                         std::fabs(g2.eval(0.75 * w[i], 0.25 * w[i]));
        if (!std::isfinite(v))
            throw DecayCheckError("split integrand " + g2.id + " not finite near zero");
        ratio[i] = v / (w[i] * w[i] * w[i]);
    }
    const double floor = 1e-12 * (1.0 + ratio[0]);
    if (ratio[1] > 3.0 * ratio[0] + floor || ratio[2] > 3.0 * ratio[1] + floor)
        throw DecayCheckError("split integrand " + g2.id +
                              " decays slower than omega^3 near zero");
}

// Shared polar-grid engine; node_g evaluates the integrand at one exterior
// point.
ExteriorResult integrate_exterior(const SupportBody& body, const std::string& id,
                                  const std::function<double(PlanarPoint)>& node_g,
                                  double tol, double r0_factor) {
    // R0 fixed from a scan independent of the refinement level; the scan
    // doubles as the first boundary cache (identical grid angles).
    const RadialProfile profile = radial_profile(body, 256);
    const double r0 = r0_factor * profile.max_rho;

    const std::size_t gl_points = 16;
    const auto& gx = gauss_legendre_nodes(gl_points);
    const auto& gw = gauss_legendre_weights(gl_points);

    ExteriorResult res;
    std::vector<double> rho; // per angular node, halved stride on refinement
    double prev = std::numeric_limits<double>::quiet_NaN();
    double scale = 0.0;

    for (std::size_t level = 0; level < 5; ++level) {
        const std::size_t n_ang = 128u << level;
        const std::size_t panels = 2u << level;

        std::vector<double> rho_new(n_ang);
        if (level == 0) {
            for (std::size_t j = 0; j < n_ang; ++j)
                rho_new[j] = profile.rho[2 * j];
        } else if (level == 1) {
            rho_new = profile.rho;
        } else {
            parallel_rows(n_ang, [&](std::size_t j) {
                if (j % 2 == 0)
                    rho_new[j] = rho[j / 2];
                else
                    rho_new[j] = radial_boundary(
                        body, two_pi * static_cast<double>(j) / static_cast<double>(n_ang));
            });
        }
        rho = std::move(rho_new);

        std::vector<double> row(n_ang);
        parallel_rows(n_ang, [&](std::size_t j) {
            const double theta = two_pi * static_cast<double>(j) / static_cast<double>(n_ang);
            const double ex = std::cos(theta), ey = std::sin(theta);
            StableSum s;
            // annulus [rho, R0] under r = rho + t^2
            const double t_hi = std::sqrt(r0 - rho[j]);
            const double ph = t_hi / static_cast<double>(panels);
            for (std::size_t p = 0; p < panels; ++p) {
                const double mid = ph * (static_cast<double>(p) + 0.5);
                for (std::size_t q = 0; q < gl_points; ++q) {
                    const double t = mid + 0.5 * ph * gx[q];
                    const double r = rho[j] + t * t;
                    const double g = node_g({r * ex, r * ey});
                    s.add(gw[q] * 0.5 * ph * g * r * 2.0 * t);
                }
            }
            // tail beyond R0 under r = R0/u, u in (0, 1]
            const double pu = 1.0 / static_cast<double>(panels);
            for (std::size_t p = 0; p < panels; ++p) {
                const double mid = pu * (static_cast<double>(p) + 0.5);
                for (std::size_t q = 0; q < gl_points; ++q) {
                    const double u = mid + 0.5 * pu * gx[q];
                    const double r = r0 / u;
                    const double g = node_g({r * ex, r * ey});
                    s.add(gw[q] * 0.5 * pu * g * r0 * r0 / (u * u * u));
                }
            }
            row[j] = s.get();
        });

        StableSum total;
        for (std::size_t j = 0; j < n_ang; ++j)
            total.add(row[j]);
        const double cur = total.get() * two_pi / static_cast<double>(n_ang);
        scale = std::max(scale, std::fabs(cur));

        res.value = cur;
        res.angular_n = n_ang;
        res.radial_panels = panels;
        if (!std::isnan(prev)) {
            res.last_delta = std::fabs(cur - prev);
            if (res.last_delta <= tol * std::max(scale, 1e-300) ||
                res.last_delta <= 1e-15 * (1.0 + scale)) {
                res.converged = true;
                return res;
            }
        }
        prev = cur;
    }
    throw NoConvergenceError("exterior_integral(" + id + "): no convergence");
}

} // namespace

ExteriorResult exterior_integral(const SupportBody& body, const ExteriorIntegrand& g,
                                 double tol, double r0_factor) {
    check_decay(g);
    return integrate_exterior(body, g.id, [&body, &g](PlanarPoint p) {
        return g.eval(visual_angle(body, p));
    }, tol, r0_factor);
}

ExteriorResult exterior_integral_split(const SupportBody& body, const SplitIntegrand& g2,
                                       double tol, double r0_factor) {
    check_decay_split(g2);
    return integrate_exterior(body, g2.id, [&body, &g2](PlanarPoint p) {
        const VisualAngleData d = analyze_point(body, p);
        return g2.eval(d.omega1, d.omega2);
    }, tol, r0_factor);
}

} // namespace visang
