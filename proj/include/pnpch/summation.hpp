/// @file summation.hpp
/// @brief Compensated (Neumaier) reductions.
///
/// Mass-conservation and mean-zero assertions downstream are checked at
/// 1e-13 on grids up to N = 800, which plain left-to-right summation does
/// not reliably deliver.

#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace pnpch {

/// Neumaier running sum: carries a separate compensation term.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

/// Compensated dot product (products accumulated with Neumaier correction).
inline double compensated_dot(std::span<const double> a, std::span<const double> b) {
    CompensatedSum s;
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) s.add(a[i] * b[i]);
    return s.value();
}

} // namespace pnpch
