#include "evanescent/reflection.hpp"

#include "evanescent/units.hpp"

#include <cmath>
#include <stdexcept>

namespace evanescent {

namespace {

void require_passive(complex eps)
{
    if (eps.imag() < 0.0) throw std::invalid_argument("permittivity with Im(eps) < 0 is not passive under e^{-i omega t}");
}

void require_spectral_args(double omega, double k_t)
{
    if (!(omega > 0.0)) throw std::invalid_argument("omega must be positive");
    if (!(k_t >= 0.0)) throw std::invalid_argument("k_t must be non-negative");
}

}  // namespace

complex principal_sqrt(complex z)
{
    complex s = std::sqrt(z);
    if (s.real() == 0.0 && s.imag() < 0.0) s = -s;
    return s;
}

complex transverse_q(double k_t, double k0, complex eps)
{
    return principal_sqrt(k_t * k_t - eps * (k0 * k0));
}

complex outgoing_q(double k_t, double k0)
{
    const double d = k_t * k_t - k0 * k0;
    if (d >= 0.0) return {std::sqrt(d), 0.0};
    return {0.0, -std::sqrt(-d)};
}

complex r_s(double omega, double k_t, complex eps)
{
    require_spectral_args(omega, k_t);
    require_passive(eps);
    const double k0 = wave_number(omega);
    const complex numerator = (eps - 1.0) * (k0 * k0);
    if (numerator == 0.0) return 0.0;
    const complex sum = transverse_q(k_t, k0) + transverse_q(k_t, k0, eps);
    // q^2 - q_eps^2 = (eps - 1) k0^2
    return numerator / (sum * sum);
}

complex r_p(double omega, double k_t, complex eps)
{
    require_spectral_args(omega, k_t);
    require_passive(eps);
    const double k0 = wave_number(omega);
    const complex q = transverse_q(k_t, k0);
    const complex q_eps = transverse_q(k_t, k0, eps);
    const complex den = eps * q + q_eps;
    if (den == 0.0) return 0.0;
    return (eps * q - q_eps) / den;
}

complex r_s_scaled(double w, complex K)
{
    if (!(w >= 0.0)) throw std::invalid_argument("r_s_scaled: w must be non-negative");
    return r_s_scaled(complex(w, 0.0), K);
}

complex r_s_scaled(complex w, complex K)
{
    if (K == 0.0) return 0.0;
    const complex sum = w + principal_sqrt(w * w - K);
    return K / (sum * sum);
}

}  // namespace evanescent
