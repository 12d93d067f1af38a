// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace mlpide {

// Neumaier-compensated accumulator. The running compensation keeps long
// averages accurate to a few ulp independent of summand count or magnitude
// ordering; value() folds the compensation in.
class KahanSum {
public:
    void add(double v) noexcept {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v)) {
            comp_ += (sum_ - t) + v;
        } else {
            comp_ += (v - t) + sum_;
        }
        sum_ = t;
    }

    KahanSum& operator+=(double v) noexcept {
        add(v);
        return *this;
    }

    double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace mlpide
