#pragma once

#include <cstddef>

namespace visang {

/// Neumaier compensated accumulator. All quadrature reductions in the
/// library go through this so that results do not depend on summation
/// length or partitioning tricks of the optimizer.
class StableSum {
    double sum_ = 0.0;
    double carry_ = 0.0;

public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }

    StableSum& operator+=(double x) {
        add(x);
        return *this;
    }

    double get() const { return sum_ + carry_; }
};

} // namespace visang
