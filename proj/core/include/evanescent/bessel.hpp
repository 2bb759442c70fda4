#pragma once

#include <cstddef>
#include <vector>

namespace evanescent {

// Bessel functions of the first kind, orders 0 and 1, in double precision.
// Absolute error stays below 1e-14 for |x| <= 1e4. NaN arguments throw
// std::invalid_argument.
double bessel_j0(double x);
double bessel_j1(double x);

/// Positive zeros of J_order, strictly increasing.
struct BesselZeroTable
{
    int order = 1;
    std::vector<double> zeros;

    std::size_t size() const { return zeros.size(); }
    double operator[](std::size_t i) const { return zeros[i]; }
};

/// n-th positive zero of J1 (n >= 1), McMahon estimate refined by Newton.
double j1_zero(std::size_t n);
/// n-th positive zero of J0 (n >= 1).
double j0_zero(std::size_t n);

/// First n zeros of J1; n = 0 gives an empty table, n > 1e6 throws.
BesselZeroTable j1_zeros(std::size_t n);
BesselZeroTable j0_zeros(std::size_t n);

}  // namespace evanescent
