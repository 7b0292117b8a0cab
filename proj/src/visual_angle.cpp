#include "visang/visual_angle.hpp"

#include "visang/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

namespace visang {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double exterior_margin_min = 1e-9;

double h_of(const SupportBody& body, PlanarPoint p, double phi) {
    return p.x * std::cos(phi) + p.y * std::sin(phi) - body.eval(phi).p;
}

double dh_of(const SupportBody& body, PlanarPoint p, double phi) {
    return -p.x * std::sin(phi) + p.y * std::cos(phi) - body.eval(phi).dp;
}

double wrap_2pi(double phi) {
    phi = std::fmod(phi, two_pi);
    return phi < 0.0 ? phi + two_pi : phi;
}

// Golden-section maximum of h on a small bracket.
std::pair<double, double> refine_max(const SupportBody& body, PlanarPoint p, double lo,
                                     double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = h_of(body, p, x1), f2 = h_of(body, p, x2);
    for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
        if (f1 > f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = h_of(body, p, x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = h_of(body, p, x2);
        }
    }
    return f1 > f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

// One root of h inside a bracket with a sign change: bisection to ~1e-13,
// then two guarded Newton polish steps.
double refine_root(const SupportBody& body, PlanarPoint p, double lo, double hi, double f_lo) {
    for (int it = 0; it < 40; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = h_of(body, p, mid);
        if ((fm > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
    }
    double root = 0.5 * (lo + hi);
    for (int it = 0; it < 2; ++it) {
        const double d = dh_of(body, p, root);
        if (d == 0.0)
            break;
        const double step = h_of(body, p, root) / d;
        const double next = root - step;
        if (next <= lo || next >= hi)
            break;
        root = next;
    }
    return root;
}

} // namespace

ExteriorCheck is_exterior(const SupportBody& body, PlanarPoint p) {
    const std::size_t n = SupportBody::grid_size;
    const auto ct = grid_cos_table(n);
    const auto st = grid_sin_table(n);
    const auto pg = body.p_grid();
    std::size_t best = 0;
    double h_best = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
        const double h = p.x * ct[j] + p.y * st[j] - pg[j];
        if (h > h_best) {
            h_best = h;
            best = j;
        }
    }
    const double step = two_pi / static_cast<double>(n);
    const double phi0 = step * static_cast<double>(best);
    auto [phi_max, h_max] = refine_max(body, p, phi0 - step, phi0 + step);
    ExteriorCheck out;
    out.margin = h_max;
    out.phi_max = wrap_2pi(phi_max);
    out.exterior = h_max > 0.0;
    return out;
}

std::pair<double, double> tangent_normals(const SupportBody& body, PlanarPoint p) {
    // Scan h on a uniform grid; h > 0 on a single arc for a convex body,
    // so exactly two sign changes are expected. Doubles the grid if the
    // scan disagrees. Any grid sample above the margin threshold already
    // certifies the exterior precondition (the true margin is a max);
    // otherwise the precise margin decides.
    bool margin_checked = false;
    for (std::size_t n = 2048; n <= 32768; n *= 2) {
        const auto ct = grid_cos_table(n);
        const auto st = grid_sin_table(n);
        const auto pg = body.p_grid();
        const std::size_t stride = (n <= SupportBody::grid_size) ? SupportBody::grid_size / n : 0;
        std::vector<double> h(n);
        if (stride > 0) {
            for (std::size_t j = 0; j < n; ++j)
                h[j] = p.x * ct[j] + p.y * st[j] - pg[j * stride];
        } else {
            const double step = two_pi / static_cast<double>(n);
            for (std::size_t j = 0; j < n; ++j)
                h[j] = h_of(body, p, step * static_cast<double>(j));
        }
        if (!margin_checked) {
            double h_max = h[0];
            for (double v : h)
                h_max = std::max(h_max, v);
            if (h_max <= exterior_margin_min) {
                const ExteriorCheck ec = is_exterior(body, p);
                if (!(ec.margin > exterior_margin_min)) {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%.3e", ec.margin);
                    throw PointNotExteriorError("tangent_normals: margin " + std::string(buf) +
                                                " is not above 1e-9");
                }
            }
            margin_checked = true;
        }
        std::vector<std::size_t> brackets;
        for (std::size_t j = 0; j < n; ++j) {
            const bool pos = h[j] > 0.0;
            const bool pos_next = h[(j + 1) % n] > 0.0;
            if (pos != pos_next)
                brackets.push_back(j);
        }
        if (brackets.size() == 2) {
            const double step = two_pi / static_cast<double>(n);
            double roots[2];
            for (int r = 0; r < 2; ++r) {
                const double lo = step * static_cast<double>(brackets[r]);
                roots[r] = wrap_2pi(refine_root(body, p, lo, lo + step, h[brackets[r]]));
            }
            if (roots[0] > roots[1])
                std::swap(roots[0], roots[1]);
            return {roots[0], roots[1]};
        }
    }
    throw RootCountError("tangent_normals: could not bracket exactly two support lines");
}

double visual_angle(const SupportBody& body, PlanarPoint p) {
    const auto [phi_a, phi_b] = tangent_normals(body, p);
    const double d = phi_b - phi_a;
    const double circ = std::min(d, two_pi - d);
    return pi - circ;
}

double direction_angle(PlanarPoint p, double phi_normal) {
    const double r = std::hypot(p.x, p.y);
    if (r == 0.0)
        throw DegenerateDirectionError("direction_angle: point at the origin");
    // u orthogonal to OP, (u, OP) positively oriented.
    const double ux = p.y / r;
    const double uy = -p.x / r;
    // Line direction, flipped so that (u, v) is positively oriented.
    double tx = -std::sin(phi_normal);
    double ty = std::cos(phi_normal);
    double det = ux * ty - uy * tx;
    double dot = ux * tx + uy * ty;
    if (det < 0.0) {
        det = -det;
        dot = -dot;
    }
    return std::atan2(det, dot);
}

VisualAngleData analyze_point(const SupportBody& body, PlanarPoint p) {
    VisualAngleData out;
    out.point = p;
    const auto [phi_a, phi_b] = tangent_normals(body, p);
    out.phi_a = phi_a;
    out.phi_b = phi_b;
    const double d = phi_b - phi_a;
    out.omega = pi - std::min(d, two_pi - d);

    double d1 = direction_angle(p, phi_a);
    double d2 = direction_angle(p, phi_b);
    if (d1 > d2)
        std::swap(d1, d2);
    // Unwrap the direction pair modulo pi so the bracket contains the radial
    // direction pi/2 (the line OP always meets the body, the tangents never
    // pass through O).
    if (d1 < 0.5 * pi && 0.5 * pi < d2) {
        out.alpha = d1;
        out.beta = d2;
    } else if (d2 <= 0.5 * pi) {
        out.alpha = d2;
        out.beta = d1 + pi;
    } else {
        out.alpha = d2 - pi;
        out.beta = d1;
    }
    out.omega1 = 0.5 * pi - out.alpha;
    out.omega2 = out.beta - 0.5 * pi;
    return out;
}

std::pair<double, double> omega_split(const SupportBody& body, PlanarPoint p) {
    const VisualAngleData d = analyze_point(body, p);
    return {d.omega1, d.omega2};
}

} // namespace visang
