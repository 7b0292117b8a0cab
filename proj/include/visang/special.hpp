#pragma once

#include <cstddef>

namespace visang {

/// 1/Gamma(x). Returns exactly 0 at nonpositive integers (the poles of
/// Gamma); elsewhere evaluated through log-Gamma, with the reflection
/// formula for negative non-integer arguments.
double inv_gamma(double x);

/// Closed-form cosine Fourier coefficient A_k of the power-sine density
/// m(m-1)|sin|^{m-3} - m^2 |sin|^{m-1}, m >= 3. Zero for odd k; the
/// reciprocal-Gamma poles make the coefficients vanish for k > m-1 when m
/// is odd, so the series is finite there.
double power_sine_coeff(int m, std::size_t k);

/// I_{m,k} = integral of sin^m(x) cos(kx) over [0, pi], k even, via the
/// Gamma closed form.
double sin_power_cos_integral(int m, int k);

} // namespace visang
