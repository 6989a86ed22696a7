#pragma once

#include <cmath>

#ifdef __FAST_MATH__
#error "fast-math is enabled; it would defeat compensated summation"
#endif

namespace rankdist {

/// Neumaier-compensated accumulator. The double sums in the exact
/// distortion formulas run over n^2 terms of magnitude ~1 with heavy
/// cancellation; plain accumulation would eat into the row-sum-zero
/// tolerance budget.
struct NeumaierSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            carry += (sum - t) + x;
        else
            carry += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + carry; }
};

}  // namespace rankdist
