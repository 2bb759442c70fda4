#pragma once

// Brute-force inverse of the 2D plane-wave expansion:
//   H(r) = (2 pi)^-2 int d^2k e^{i k_t . r_t} H(k_t, z)
// in polar coordinates. The angle is done with the periodic trapezoid rule,
// the radial integral with Gauss-Legendre bisection after k = k0 sin t on the
// propagating band and k = k0 cosh s on the evanescent band (both remove the
// square-root endpoint behaviour at k = k0). No Bessel-function reduction is
// used, so the check is independent of the reflected-field engine.

#include "evanescent/dipole.hpp"
#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

inline evanescent::FieldVector inverse_fourier_free(double omega, double m0, const evanescent::Point3& p,
                                                    double abs_tol)
{
    using evanescent::complex;
    const double k0 = evanescent::wave_number(omega);
    const double k_max = 50.0 / std::abs(p.z);
    const int angles = 2 * static_cast<int>(k_max * std::hypot(p.x, p.y)) + 128;
    const complex I{0.0, 1.0};

    // k * angular integral, one component at a time
    auto ring = [&](double k, int comp) -> complex {
        return k * periodic_trapezoid(
                       [&](double phi) {
                           const double kx = k * std::cos(phi), ky = k * std::sin(phi);
                           const auto f = evanescent::h_fourier_free(omega, m0, kx, ky, p.z);
                           const complex c = comp == 0 ? f.x : (comp == 1 ? f.y : f.z);
                           return std::exp(I * (kx * p.x + ky * p.y)) * c;
                       },
                       angles);
    };

    complex out[3];
    for (int comp = 0; comp < 3; ++comp) {
        const complex prop = integrate(
            [&](double t) { return ring(k0 * std::sin(t), comp) * (k0 * std::cos(t)); }, 0.0,
            0.5 * std::numbers::pi, abs_tol, 4);
        const complex evan = integrate(
            [&](double s) { return ring(k0 * std::cosh(s), comp) * (k0 * std::sinh(s)); }, 0.0,
            std::acosh(k_max / k0), abs_tol, 32);
        out[comp] = (prop + evan) / (4.0 * std::numbers::pi * std::numbers::pi);
    }
    return {out[0], out[1], out[2]};
}

}  // namespace oracle
