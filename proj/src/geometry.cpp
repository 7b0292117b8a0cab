#include "visang/geometry.hpp"

#include "visang/errors.hpp"
#include "visang/stable_sum.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>

namespace visang {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

std::mutex table_mutex;
std::map<std::size_t, std::pair<std::vector<double>, std::vector<double>>> table_cache;

const std::pair<std::vector<double>, std::vector<double>>& grid_tables(std::size_t n) {
    std::lock_guard<std::mutex> lock(table_mutex);
    auto it = table_cache.find(n);
    if (it == table_cache.end()) {
        std::vector<double> c(n), s(n);
        for (std::size_t j = 0; j < n; ++j) {
            const double phi = two_pi * static_cast<double>(j) / static_cast<double>(n);
            c[j] = std::cos(phi);
            s[j] = std::sin(phi);
        }
        it = table_cache.emplace(n, std::make_pair(std::move(c), std::move(s))).first;
    }
    return it->second;
}

SupportEval eval_series(double a0, const std::vector<double>& ca, const std::vector<double>& cb,
                        double phi) {
    SupportEval out;
    out.p = a0;
    const double c1 = std::cos(phi);
    const double s1 = std::sin(phi);
    double ck = 1.0, sk = 0.0; // cos(k phi), sin(k phi), starting at k=0
    for (std::size_t i = 0; i < ca.size(); ++i) {
        const double cn = ck * c1 - sk * s1;
        const double sn = sk * c1 + ck * s1;
        ck = cn;
        sk = sn;
        const double k = static_cast<double>(i + 1);
        out.p += ca[i] * ck + cb[i] * sk;
        out.dp += k * (cb[i] * ck - ca[i] * sk);
        out.ddp -= k * k * (ca[i] * ck + cb[i] * sk);
    }
    return out;
}

// Golden-section minimum of fn on [lo, hi]; fn smooth, bracket small.
double refine_min(const std::function<double(double)>& fn, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = fn(x1), f2 = fn(x2);
    for (int it = 0; it < 80 && hi - lo > 1e-14; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = fn(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = fn(x2);
        }
    }
    return std::min(f1, f2);
}

// Smallest value of a sampled periodic function, with golden-section
// refinement around every grid minimum below the given cutoff.
double grid_min(const std::function<double(double)>& fn, const std::vector<double>& samples,
                double refine_below) {
    const std::size_t n = samples.size();
    const double h = two_pi / static_cast<double>(n);
    double best = samples[0];
    for (std::size_t j = 0; j < n; ++j)
        best = std::min(best, samples[j]);
    for (std::size_t j = 0; j < n; ++j) {
        const double prev = samples[(j + n - 1) % n];
        const double next = samples[(j + 1) % n];
        if (samples[j] <= prev && samples[j] <= next && samples[j] < refine_below) {
            const double phi = h * static_cast<double>(j);
            best = std::min(best, refine_min(fn, phi - h, phi + h));
        }
    }
    return best;
}

} // namespace

std::span<const double> grid_cos_table(std::size_t n) { return grid_tables(n).first; }
std::span<const double> grid_sin_table(std::size_t n) { return grid_tables(n).second; }

SupportEval SupportBody::eval(double phi) const { return eval_series(a0_, cos_, sin_, phi); }

SupportEval support_eval(const SupportBody& body, double phi) { return body.eval(phi); }

HarmonicSpectrum SupportBody::spectrum() const {
    HarmonicSpectrum sp;
    sp.c_sq.resize(cos_.size());
    for (std::size_t i = 0; i < cos_.size(); ++i)
        sp.c_sq[i] = cos_[i] * cos_[i] + sin_[i] * sin_[i];
    return sp;
}

double SupportBody::support_upper_bound() const {
    StableSum s(a0_);
    for (std::size_t i = 0; i < cos_.size(); ++i)
        s.add(std::hypot(cos_[i], sin_[i]));
    return s.get();
}

SupportBody make_body(double a0, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs) {
    if (cos_coeffs.size() != sin_coeffs.size())
        throw BadParamError("make_body: coefficient arrays must have equal length");
    if (!std::isfinite(a0))
        throw BadParamError("make_body: a0 not finite");
    for (double v : cos_coeffs)
        if (!std::isfinite(v))
            throw BadParamError("make_body: cos coefficient not finite");
    for (double v : sin_coeffs)
        if (!std::isfinite(v))
            throw BadParamError("make_body: sin coefficient not finite");

    // Drop an all-zero tail so degree() reflects the actual harmonic content.
    std::size_t k_max = cos_coeffs.size();
    while (k_max > 0 && cos_coeffs[k_max - 1] == 0.0 && sin_coeffs[k_max - 1] == 0.0)
        --k_max;
    cos_coeffs.resize(k_max);
    sin_coeffs.resize(k_max);

    SupportBody body;
    body.a0_ = a0;
    body.cos_ = std::move(cos_coeffs);
    body.sin_ = std::move(sin_coeffs);

    // Sufficient bound: |p - a0| and |p''| are both at most sum k^2 |c_k|,
    // so a0 above that sum settles positivity and convexity outright.
    StableSum bound;
    for (std::size_t i = 0; i < body.cos_.size(); ++i) {
        const double k = static_cast<double>(i + 1);
        bound.add(k * k * std::hypot(body.cos_[i], body.sin_[i]));
    }
    const bool shortcut = a0 > bound.get();

    const std::size_t n = SupportBody::grid_size;
    body.p_grid_.resize(n);
    std::vector<double> q(n);
    for (std::size_t j = 0; j < n; ++j) {
        const SupportEval e = body.eval(two_pi * static_cast<double>(j) / static_cast<double>(n));
        body.p_grid_[j] = e.p;
        q[j] = e.p + e.ddp;
    }

    if (shortcut) {
        double qmin = q[0];
        for (double v : q)
            qmin = std::min(qmin, v);
        body.convexity_margin_ = qmin;
        return body;
    }

    const double p_min =
        grid_min([&body](double phi) { return body.eval(phi).p; }, body.p_grid_, 1e-3);
    if (p_min <= 0.0)
        throw NotPositiveError("make_body: support function reaches " + std::to_string(p_min) +
                               "; origin is not interior");
    const double q_min = grid_min(
        [&body](double phi) {
            const SupportEval e = body.eval(phi);
            return e.p + e.ddp;
        },
        q, 1e-3);
    if (q_min <= 0.0)
        throw NotConvexError("make_body: p + p'' reaches " + std::to_string(q_min) +
                             "; boundary is not convex");
    body.convexity_margin_ = q_min;
    return body;
}

SupportBody make_disk(double r) {
    if (!(r > 0.0))
        throw BadParamError("make_disk: radius must be positive");
    return make_body(r, {}, {});
}

SupportBody make_ellipse(double a, double b, std::size_t k_max) {
    if (!(a >= b && b > 0.0))
        throw BadParamError("make_ellipse: need a >= b > 0");
    const auto p_exact = [a, b](double phi) {
        const double c = std::cos(phi), s = std::sin(phi);
        return std::sqrt(a * a * c * c + b * b * s * s);
    };
    const std::size_t n = 16 * k_max;
    FourierCoeffs fc = fourier_analyze(p_exact, n, k_max);
    SupportBody body = make_body(fc.a0, std::move(fc.a), std::move(fc.b));

    double tail = 0.0;
    for (std::size_t j = 0; j < SupportBody::grid_size; ++j) {
        const double phi = two_pi * static_cast<double>(j) / SupportBody::grid_size;
        tail = std::max(tail, std::fabs(body.eval(phi).p - p_exact(phi)));
    }
    if (tail > 1e-10) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.3e", tail);
        throw TruncationError("make_ellipse: Fourier tail " + std::string(buf) +
                              " above tolerance at k_max=" + std::to_string(k_max));
    }
    body.truncation_tail_ = tail;
    return body;
}

SupportBody make_const_width(double a0, std::vector<double> cos_coeffs,
                             std::vector<double> sin_coeffs) {
    cos_coeffs.resize(std::max(cos_coeffs.size(), sin_coeffs.size()), 0.0);
    sin_coeffs.resize(cos_coeffs.size(), 0.0);
    for (std::size_t i = 0; i < cos_coeffs.size(); ++i) {
        const std::size_t k = i + 1;
        if (k % 2 == 0 && (cos_coeffs[i] != 0.0 || sin_coeffs[i] != 0.0))
            throw BadParamError("make_const_width: even harmonic k=" + std::to_string(k) +
                                " must vanish");
    }
    return make_body(a0, std::move(cos_coeffs), std::move(sin_coeffs));
}

double perimeter(const SupportBody& body) { return two_pi * body.a0(); }

double area(const SupportBody& body) {
    StableSum s(std::numbers::pi * body.a0() * body.a0());
    const HarmonicSpectrum sp = body.spectrum();
    for (std::size_t k = 1; k <= sp.c_sq.size(); ++k) {
        const double kk = static_cast<double>(k) * static_cast<double>(k);
        s.add(0.5 * std::numbers::pi * (1.0 - kk) * sp.c_sq[k - 1]);
    }
    return s.get();
}

FourierCoeffs fourier_analyze(std::span<const double> samples, std::size_t k_max) {
    const std::size_t n = samples.size();
    if (n < 4 * k_max || n == 0)
        throw BadParamError("fourier_analyze: need at least 4*k_max samples");
    FourierCoeffs out;
    out.a.resize(k_max);
    out.b.resize(k_max);
    StableSum mean;
    for (double v : samples)
        mean.add(v);
    out.a0 = mean.get() / static_cast<double>(n);
    const auto& ct = grid_tables(n).first;
    const auto& st = grid_tables(n).second;
    for (std::size_t k = 1; k <= k_max; ++k) {
        StableSum sa, sb;
        std::size_t idx = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sa.add(samples[j] * ct[idx]);
            sb.add(samples[j] * st[idx]);
            idx += k;
            if (idx >= n)
                idx -= n;
        }
        out.a[k - 1] = 2.0 * sa.get() / static_cast<double>(n);
        out.b[k - 1] = 2.0 * sb.get() / static_cast<double>(n);
    }
    return out;
}

FourierCoeffs fourier_analyze(const std::function<double(double)>& f, std::size_t n,
                              std::size_t k_max) {
    std::vector<double> samples(n);
    for (std::size_t j = 0; j < n; ++j)
        samples[j] = f(two_pi * static_cast<double>(j) / static_cast<double>(n));
    return fourier_analyze(samples, k_max);
}

} // namespace visang
