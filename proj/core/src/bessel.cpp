#include "evanescent/bessel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace evanescent {

namespace {

constexpr std::size_t max_zero_count = 1'000'000;

void reject_nan(double x, const char* who)
{
    if (std::isnan(x)) throw std::invalid_argument(std::string(who) + ": NaN argument");
}

// McMahon's expansion for the n-th zero of J_nu.
double mcmahon(double nu, std::size_t n)
{
    const double mu = 4.0 * nu * nu;
    const double beta = (static_cast<double>(n) + 0.5 * nu - 0.25) * std::numbers::pi;
    const double b8 = 8.0 * beta;
    return beta - (mu - 1.0) / b8 - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
}

template <class F, class DF>
double newton(double x, F f, DF df)
{
    for (int it = 0; it < 50; ++it) {
        const double step = f(x) / df(x);
        x -= step;
        if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) break;
    }
    return x;
}

}  // namespace

double bessel_j0(double x)
{
    reject_nan(x, "bessel_j0");
    return ::j0(x);
}

double bessel_j1(double x)
{
    reject_nan(x, "bessel_j1");
    return ::j1(x);
}

double j1_zero(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("j1_zero: zeros are numbered from 1");
    // J1'(x) = J0(x) - J1(x)/x
    return newton(mcmahon(1.0, n), [](double x) { return ::j1(x); },
                  [](double x) { return ::j0(x) - ::j1(x) / x; });
}

double j0_zero(std::size_t n)
{
    if (n == 0) throw std::invalid_argument("j0_zero: zeros are numbered from 1");
    return newton(mcmahon(0.0, n), [](double x) { return ::j0(x); },
                  [](double x) { return -::j1(x); });
}

BesselZeroTable j1_zeros(std::size_t n)
{
    if (n > max_zero_count) throw std::invalid_argument("j1_zeros: n exceeds 1e6");
    BesselZeroTable table{1, {}};
    table.zeros.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) table.zeros.push_back(j1_zero(i));
    return table;
}

BesselZeroTable j0_zeros(std::size_t n)
{
    if (n > max_zero_count) throw std::invalid_argument("j0_zeros: n exceeds 1e6");
    BesselZeroTable table{0, {}};
    table.zeros.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) table.zeros.push_back(j0_zero(i));
    return table;
}

}  // namespace evanescent
