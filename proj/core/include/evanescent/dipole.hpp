#pragma once

#include "evanescent/materials.hpp"

namespace evanescent {

/// Point in cm.
struct Point3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Complex phasor amplitudes (time factor e^{-i omega t} implied). Magnetic
/// fields in Oe, electric fields in statV/cm.
struct FieldVector
{
    complex x;
    complex y;
    complex z;
};

/// Oscillating dipole m = (0, 0, m0) at height h above the plate.
struct DipoleConfig
{
    double m0 = 0.0;     ///< erg/Oe
    double h = 0.0;      ///< cm
    double omega = 0.0;  ///< rad/s

    /// Throws std::invalid_argument unless m0, h, omega are positive and finite.
    void validate() const;
    /// k0 h; the near-zone treatment assumes this is well below 1e-3.
    double k0h() const;
    bool outside_near_zone() const { return k0h() > 1e-3; }
};

/// N loops of radius R (cm) carrying I0 (statA).
struct CoilSpec
{
    int loops = 1;
    double current = 0.0;
    double radius = 0.0;

    void validate() const;
};

/// m0 = pi N I0 R^2 / c, erg/Oe.
double coil_moment(const CoilSpec& coil);

/// Magnetic field of a z-oriented dipole at the origin in free space, with the
/// full e^{i k0 r} retardation. Throws at the origin.
FieldVector h_free(double omega, double m0, const Point3& p);

/// Electric field of the same dipole; E_z is identically zero.
FieldVector e_free(double omega, double m0, const Point3& p);

/// 2D Fourier transform of h_free over the (x, y) plane at height z != 0:
///   H_a = -2 pi i m0 k_a sign(z) e^{-q|z|},  H_z = 2 pi m0 (k_t^2 / q) e^{-q|z|}
/// with q from outgoing_q. Throws std::domain_error at q = 0, k_t != 0.
FieldVector h_fourier_free(double omega, double m0, double kx, double ky, double z);

/// |H_x| of an ideal-metal image dipole at the dipole height, static limit:
/// 6 m0 x h / (x^2 + 4 h^2)^{5/2}. The field computed from the reflected-wave
/// integral carries the opposite sign (the image moment is reversed).
double h_x_ideal_closed(double m0, double h, double x);

}  // namespace evanescent
