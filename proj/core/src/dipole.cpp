#include "evanescent/dipole.hpp"

#include "evanescent/reflection.hpp"
#include "evanescent/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace evanescent {

namespace {

constexpr complex I{0.0, 1.0};
constexpr double two_pi = 2.0 * std::numbers::pi;

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

double radius(const Point3& p)
{
    const double r = std::hypot(p.x, p.y, p.z);
    if (r == 0.0) throw std::invalid_argument("field point coincides with the dipole");
    return r;
}

}  // namespace

void DipoleConfig::validate() const
{
    require_positive(m0, "m0");
    require_positive(h, "h");
    require_positive(omega, "omega");
}

double DipoleConfig::k0h() const { return wave_number(omega) * h; }

void CoilSpec::validate() const
{
    if (loops < 1) throw std::invalid_argument("coil needs at least one loop");
    require_positive(current, "coil current");
    require_positive(radius, "coil radius");
}

double coil_moment(const CoilSpec& coil)
{
    coil.validate();
    return std::numbers::pi * coil.loops * coil.current * coil.radius * coil.radius / constants::c;
}

FieldVector h_free(double omega, double m0, const Point3& p)
{
    const double r = radius(p);
    const double k0 = wave_number(omega);
    const double r2 = r * r;
    const complex phase = std::exp(I * (k0 * r));
    // radial-transverse bracket (k0^2/r + 3 i k0/r^2 - 3/r^3)
    const complex b3 = k0 * k0 / r + 3.0 * I * k0 / r2 - 3.0 / (r2 * r);
    const complex b1 = k0 * k0 / r + I * k0 / r2 - 1.0 / (r2 * r);
    const complex lateral = -m0 * p.z / r2 * b3 * phase;
    return {lateral * p.x, lateral * p.y, m0 * (b1 - p.z * p.z / r2 * b3) * phase};
}

FieldVector e_free(double omega, double m0, const Point3& p)
{
    const double r = radius(p);
    const double k0 = wave_number(omega);
    const complex amp = I * m0 * k0 * (I * k0 / (r * r) - 1.0 / (r * r * r)) * std::exp(I * (k0 * r));
    return {amp * p.y, -amp * p.x, 0.0};
}

FieldVector h_fourier_free(double omega, double m0, double kx, double ky, double z)
{
    if (z == 0.0) throw std::invalid_argument("h_fourier_free: z must be non-zero");
    const double kt2 = kx * kx + ky * ky;
    const complex q = outgoing_q(std::sqrt(kt2), wave_number(omega));
    const complex decay = std::exp(-q * std::abs(z));
    const double sgn = z > 0.0 ? 1.0 : -1.0;
    const complex lateral = -two_pi * I * m0 * sgn * decay;
    complex hz = 0.0;
    if (kt2 != 0.0) {
        if (q == 0.0) throw std::domain_error("h_fourier_free: H_z is singular at k_t = k0");
        hz = two_pi * m0 * kt2 / q * decay;
    }
    return {lateral * kx, lateral * ky, hz};
}

double h_x_ideal_closed(double m0, double h, double x)
{
    require_positive(h, "h");
    const double d2 = x * x + 4.0 * h * h;
    return 6.0 * m0 * x * h / (d2 * d2 * std::sqrt(d2));
}

}  // namespace evanescent
