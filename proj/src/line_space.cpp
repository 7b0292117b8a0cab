#include "visang/line_space.hpp"

#include "visang/errors.hpp"
#include "visang/parallel.hpp"
#include "visang/special.hpp"
#include "visang/stable_sum.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace visang {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

} // namespace

bool line_hits(const SupportBody& body, LineCoords line) {
    return line.p <= body.eval(line.phi).p;
}

AngularDensity density_catalog(const std::string& family, int param) {
    AngularDensity d;
    d.family = family;
    d.param = param;
    d.sine_coeff = [](std::size_t) { return 0.0; }; // every catalogued density is even
    if (family == "const") {
        d.id = "const";
        d.periodicity = Periodicity::pi_periodic;
        d.eval = [](double) { return 1.0; };
        d.coeff = [](std::size_t n) { return n == 0 ? 1.0 : 0.0; };
    } else if (family == "abs_sin_4") {
        d.id = "abs_sin_4";
        d.periodicity = Periodicity::pi_periodic;
        d.eval = [](double x) { return 4.0 * std::fabs(std::sin(x)); };
        d.coeff = [](std::size_t n) {
            if (n == 0)
                return 8.0 / pi;
            if (n % 2 == 1)
                return 0.0;
            const double nn = static_cast<double>(n);
            return (16.0 / pi) / (1.0 - nn * nn);
        };
    } else if (family == "abs_cos") {
        d.id = "abs_cos";
        d.periodicity = Periodicity::pi_periodic;
        d.eval = [](double x) { return std::fabs(std::cos(x)); };
        d.coeff = [](std::size_t n) {
            if (n == 0)
                return 2.0 / pi;
            if (n % 2 == 1)
                return 0.0;
            const double nn = static_cast<double>(n);
            const double sign = (n / 2 % 2 == 0) ? 1.0 : -1.0;
            return sign * (4.0 / pi) / (1.0 - nn * nn);
        };
    } else if (family == "power_sine") {
        if (param < 3)
            throw BadParamError("power_sine density: m must be at least 3, got " +
                                std::to_string(param));
        const int m = param;
        d.id = "power_sine:" + std::to_string(m);
        d.periodicity = Periodicity::pi_periodic;
        d.eval = [m](double x) {
            const double s = std::fabs(std::sin(x));
            const double md = static_cast<double>(m);
            return md * (md - 1.0) * std::pow(s, md - 3.0) - md * md * std::pow(s, md - 1.0);
        };
        d.coeff = [m](std::size_t n) { return power_sine_coeff(m, n); };
    } else if (family == "hurwitz") {
        if (param < 2)
            throw BadParamError("hurwitz density: k must be at least 2, got " +
                                std::to_string(param));
        const int k = param;
        // The constant part is pi-periodic, the cos(kx) part only for even k.
        d.id = "hurwitz:" + std::to_string(k);
        d.periodicity = (k % 2 == 0) ? Periodicity::pi_periodic : Periodicity::general_2pi;
        const double amp = (k % 2 == 0 ? 1.0 : -1.0) * (static_cast<double>(k) * k - 1.0);
        d.eval = [k, amp](double x) { return 1.0 + amp * std::cos(k * x); };
        d.coeff = [k, amp](std::size_t n) {
            if (n == 0)
                return 1.0;
            return n == static_cast<std::size_t>(k) ? amp : 0.0;
        };
    } else if (family == "cos") {
        if (param < 1)
            throw BadParamError("cos density: k must be at least 1, got " +
                                std::to_string(param));
        const int k = param;
        d.id = "cos:" + std::to_string(k);
        d.periodicity = (k % 2 == 0) ? Periodicity::pi_periodic : Periodicity::anti_pi_periodic;
        d.eval = [k](double x) { return std::cos(k * x); };
        d.coeff = [k](std::size_t n) {
            return n == static_cast<std::size_t>(k) ? 1.0 : 0.0;
        };
    } else {
        throw UnknownDensityError("unknown density family: " + family);
    }
    return d;
}

AngularDensity density_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        return density_catalog(spec);
    const std::string family = spec.substr(0, colon);
    const std::string tail = spec.substr(colon + 1);
    int param = 0;
    try {
        std::size_t used = 0;
        param = std::stoi(tail, &used);
        if (used != tail.size())
            throw std::invalid_argument(tail);
    } catch (const std::exception&) {
        throw BadParamError("bad density parameter in '" + spec + "'");
    }
    return density_catalog(family, param);
}

double pair_measure_fourier(const SupportBody& body, const AngularDensity& f) {
    const double L = perimeter(body);
    const HarmonicSpectrum sp = body.spectrum();
    StableSum s(f.coeff(0) * L * L);
    for (std::size_t k = 1; k <= sp.c_sq.size(); ++k)
        s.add(pi * pi * f.coeff(k) * sp.c_sq[k - 1]);
    return s.get();
}

namespace {

// One trapezoid level of the pair integral: the double sum collapses onto
// the circular autocorrelation of the p samples, S(d) = sum_j p_j p_{j+d},
// which is symmetric in d <-> n-d.
double pair_trap_level(const SupportBody& body, const AngularDensity& f, std::size_t n) {
    std::vector<double> p(n);
    for (std::size_t j = 0; j < n; ++j)
        p[j] = body.eval(two_pi * static_cast<double>(j) / static_cast<double>(n)).p;

    const std::size_t half = n / 2;
    std::vector<double> corr(half + 1);
    parallel_rows(half + 1, [&](std::size_t d) {
        StableSum s;
        for (std::size_t j = 0; j + d < n; ++j)
            s.add(p[j] * p[j + d]);
        for (std::size_t j = n - d; j < n; ++j)
            s.add(p[j] * p[j + d - n]);
        corr[d] = s.get();
    });

    const double h = two_pi / static_cast<double>(n);
    StableSum total(f.eval(0.0) * corr[0]);
    for (std::size_t d = 1; d < half; ++d) {
        const double x = h * static_cast<double>(d);
        total.add((f.eval(x) + f.eval(two_pi - x)) * corr[d]);
    }
    if (n % 2 == 0)
        total.add(f.eval(pi) * corr[half]);
    return total.get() * h * h;
}

} // namespace

QuadResult pair_measure_direct(const SupportBody& body, const AngularDensity& f, double tol,
                               std::size_t n0, std::size_t n_max) {
    QuadResult res;
    double prev = pair_trap_level(body, f, n0);
    double scale = std::fabs(prev);
    for (std::size_t n = 2 * n0; n <= n_max; n *= 2) {
        const double cur = pair_trap_level(body, f, n);
        scale = std::max(scale, std::fabs(cur));
        res.value = cur;
        res.n = n;
        res.last_delta = std::fabs(cur - prev);
        if (res.last_delta <= tol * std::max(scale, 1e-300) ||
            res.last_delta <= 1e-15 * (1.0 + scale)) {
            res.converged = true;
            return res;
        }
        prev = cur;
    }
    throw NoConvergenceError("pair_measure_direct: no convergence for density " + f.id);
}

SupportBody rigid_motion(const SupportBody& body, double theta, PlanarPoint shift) {
    const std::size_t deg = std::max<std::size_t>(body.degree(), 1);
    std::vector<double> ca(deg, 0.0), cb(deg, 0.0);
    for (std::size_t k = 1; k <= body.degree(); ++k) {
        const double c = std::cos(static_cast<double>(k) * theta);
        const double s = std::sin(static_cast<double>(k) * theta);
        ca[k - 1] = body.cos_coeff(k) * c - body.sin_coeff(k) * s;
        cb[k - 1] = body.cos_coeff(k) * s + body.sin_coeff(k) * c;
    }
    ca[0] += shift.x;
    cb[0] += shift.y;
    return make_body(body.a0(), std::move(ca), std::move(cb));
}

InvarianceResult invariance_check(const SupportBody& body, const AngularDensity& f,
                                  const std::vector<RigidMotion>& motions) {
    InvarianceResult out;
    out.base_value = pair_measure_fourier(body, f);
    const double floor = std::max(std::fabs(out.base_value), 1e-30);
    for (const RigidMotion& m : motions) {
        const SupportBody moved = rigid_motion(body, m.theta, m.shift);
        const double val = pair_measure_fourier(moved, f);
        out.values.push_back(val);
        out.max_rel_deviation =
            std::max(out.max_rel_deviation, std::fabs(val - out.base_value) / floor);
    }
    return out;
}

} // namespace visang
