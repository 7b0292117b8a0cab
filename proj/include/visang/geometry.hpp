#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace visang {

struct PlanarPoint {
    double x = 0.0;
    double y = 0.0;
};

/// p(phi), p'(phi), p''(phi) of a support function at one angle.
struct SupportEval {
    double p = 0.0;
    double dp = 0.0;
    double ddp = 0.0;
};

/// Truncated Fourier coefficients of a 2*pi-periodic function:
/// f(phi) = a0 + sum_k a[k-1] cos(k phi) + b[k-1] sin(k phi).
struct FourierCoeffs {
    double a0 = 0.0;
    std::vector<double> a;
    std::vector<double> b;
};

/// Squared harmonic amplitudes c_k^2 = a_k^2 + b_k^2, k >= 1. c_k^2 is
/// invariant under rigid motions for k >= 2; c_1^2 moves with translations.
struct HarmonicSpectrum {
    std::vector<double> c_sq; ///< index k-1 holds c_k^2

    double at(std::size_t k) const { return (k >= 1 && k <= c_sq.size()) ? c_sq[k - 1] : 0.0; }
};

/// A smooth planar convex body given by the truncated Fourier series of its
/// support function, with the coordinate origin an interior point. Instances
/// are validated on construction (p > 0 and p + p'' > 0 everywhere) and
/// immutable afterwards; they are safe to share across threads.
class SupportBody {
public:
    double a0() const { return a0_; }
    std::size_t degree() const { return cos_.size(); }
    double cos_coeff(std::size_t k) const { return (k >= 1 && k <= cos_.size()) ? cos_[k - 1] : 0.0; }
    double sin_coeff(std::size_t k) const { return (k >= 1 && k <= sin_.size()) ? sin_[k - 1] : 0.0; }

    SupportEval eval(double phi) const;

    HarmonicSpectrum spectrum() const;

    /// sup of p over all angles (a0 + sum |coeff| bound).
    double support_upper_bound() const;

    /// Smallest p + p'' found during validation (convexity margin).
    double convexity_margin() const { return convexity_margin_; }

    /// Measured sup-norm truncation error of an approximating construction
    /// (nonzero only for bodies produced by Fourier analysis, e.g. ellipses).
    double truncation_tail() const { return truncation_tail_; }

    /// Dense uniform samples of p on [0, 2pi), computed at validation time.
    /// Shared by the tangent-line scan and the exterior-margin search.
    std::span<const double> p_grid() const { return p_grid_; }
    static constexpr std::size_t grid_size = 4096;

private:
    SupportBody() = default;
    friend SupportBody make_body(double, std::vector<double>, std::vector<double>);
    friend SupportBody make_ellipse(double, double, std::size_t);

    double a0_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
    double convexity_margin_ = 0.0;
    double truncation_tail_ = 0.0;
    std::vector<double> p_grid_;
};

/// Cosine/sine tables of the shared uniform grid used for dense scans.
/// cos_table(n)[j] = cos(2 pi j / n); n must be a power of two <= 2^16.
std::span<const double> grid_cos_table(std::size_t n);
std::span<const double> grid_sin_table(std::size_t n);

/// Validates and builds a body. Throws NotPositiveError when p <= 0 somewhere
/// (origin not interior) and NotConvexError when p + p'' <= 0 somewhere.
/// Validation checks the sufficient coefficient bound
/// a0 > sum_k k^2 |c_k| first and falls back to a 4096-point grid scan with
/// local refinement near minima below 1e-3.
SupportBody make_body(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

SupportBody make_disk(double r);

/// Origin-centred ellipse with semi-axes a >= b > 0. The support function
/// sqrt(a^2 cos^2 + b^2 sin^2) is Fourier-analysed and truncated at k_max;
/// the measured sup-norm tail is stored on the body and must stay below
/// 1e-10 or TruncationError is thrown.
SupportBody make_ellipse(double a, double b, std::size_t k_max = 64);

/// Constant-width body: only odd harmonics allowed on top of a0.
/// Throws BadParamError if an even-k coefficient is nonzero.
SupportBody make_const_width(double a0, std::vector<double> cos_coeffs,
                             std::vector<double> sin_coeffs);

double perimeter(const SupportBody& body); ///< L = 2 pi a0
double area(const SupportBody& body);      ///< F = pi a0^2 + (pi/2) sum (1-k^2) c_k^2

SupportEval support_eval(const SupportBody& body, double phi);

/// Trapezoidal (discrete) Fourier analysis of uniform samples f(2 pi j / n),
/// spectrally accurate for smooth periodic inputs. Requires n >= 4 k_max.
FourierCoeffs fourier_analyze(std::span<const double> samples, std::size_t k_max);
FourierCoeffs fourier_analyze(const std::function<double(double)>& f, std::size_t n,
                              std::size_t k_max);

} // namespace visang
