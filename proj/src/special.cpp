#include "visang/special.hpp"

#include "visang/errors.hpp"

#include <cmath>
#include <numbers>

namespace visang {

double inv_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x))
        return 0.0;
    if (x > 0.0)
        return std::exp(-std::lgamma(x));
    // negative non-integer: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    return std::sin(std::numbers::pi * x) * std::exp(std::lgamma(1.0 - x)) / std::numbers::pi;
}

double power_sine_coeff(int m, std::size_t k) {
    if (m < 3)
        throw BadParamError("power_sine: m must be at least 3");
    if (k % 2 == 1)
        return 0.0;
    double fact = 1.0;
    for (int i = 2; i <= m; ++i)
        fact *= static_cast<double>(i);
    const double kk = static_cast<double>(k);
    const double lead = fact / (std::ldexp(1.0, m - 2) * static_cast<double>(m - 2));
    const double sign = (k / 2 % 2 == 0) ? -1.0 : 1.0; // (-1)^(k/2 + 1)
    const double val = lead * sign * (kk * kk - 1.0) * inv_gamma(0.5 * (m + 1 + kk)) *
                       inv_gamma(0.5 * (m + 1 - kk));
    return k == 0 ? 0.5 * val : val;
}

double sin_power_cos_integral(int m, int k) {
    if (m < 0 || k < 0 || k % 2 != 0)
        throw BadParamError("sin_power_cos_integral: need m >= 0 and even k >= 0");
    double fact = 1.0;
    for (int i = 2; i <= m; ++i)
        fact *= static_cast<double>(i);
    const double sign = (k / 2 % 2 == 0) ? 1.0 : -1.0;
    return sign * std::ldexp(1.0, -m) * fact * std::numbers::pi *
           inv_gamma(1.0 + 0.5 * (m - k)) * inv_gamma(1.0 + 0.5 * (m + k));
}

} // namespace visang
