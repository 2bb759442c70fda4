#include "evanescent/report.hpp"

#include "evanescent/reflected_field.hpp"
#include "evanescent/units.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

namespace evanescent {

namespace {

// 1 erg/Oe = 1e-3 A m^2
constexpr double emu_to_si_moment = 1e-3;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt(complex v)
{
    return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

}  // namespace

ParamsReport params_report(const MetalParams& metal, double m0, double h, const std::vector<double>& omegas)
{
    metal.validate();
    if (!(m0 > 0.0)) throw std::invalid_argument("m0 must be positive");

    ParamsReport r;
    r.m0 = m0;
    r.m0_si = m0 * emu_to_si_moment;
    r.h = h;
    r.omega_h = omega_h(h);
    r.omega_threshold = omega_threshold(metal, h);
    r.plasma_like = metal.gamma == 0.0;

    for (double omega : omegas) {
        FrequencyEntry e;
        e.omega = omega;
        e.k_drude = k_factor(omega, h, eps_drude(omega, metal));
        e.k_plasma = k_factor(omega, h, eps_plasma(omega, metal));
        e.k0h = wave_number(omega) * h;
        e.propagating_suppression = propagating_suppression_factor(omega, h);
        e.e_over_h = e.k0h;
        e.electric_negligible = e.e_over_h < 1e-3;
        r.frequencies.push_back(e);
    }
    return r;
}

ParamsReport params_report(const MetalParams& metal, const CoilSpec& coil, double h, const std::vector<double>& omegas)
{
    ParamsReport r = params_report(metal, coil_moment(coil), h, omegas);
    r.current_si = convert_current(coil.current, CurrentUnit::statA, CurrentUnit::A);
    return r;
}

void print_report(std::ostream& os, const ParamsReport& r)
{
    os << "m0                  = " << fmt(r.m0) << " erg/Oe (" << fmt(r.m0_si) << " A m^2)\n";
    if (r.current_si > 0.0) os << "coil current        = " << fmt(r.current_si) << " A\n";
    os << "h                   = " << fmt(r.h) << " cm\n";
    os << "omega_h = c/h       = " << fmt(r.omega_h) << " rad/s\n";
    os << "Omega (crossover)   = " << fmt(r.omega_threshold) << " rad/s";
    if (r.plasma_like) os << "  [gamma = 0: plasma-like at all frequencies]";
    os << '\n';
    for (const FrequencyEntry& e : r.frequencies) {
        os << "omega = " << fmt(e.omega) << " rad/s\n"
           << "  K drude           = " << fmt(e.k_drude) << "  |K| = " << fmt(std::abs(e.k_drude)) << '\n'
           << "  K plasma          = " << fmt(e.k_plasma) << '\n'
           << "  k0 h              = " << fmt(e.k0h) << '\n'
           << "  1/(k0 h)^3        = " << fmt(e.propagating_suppression) << '\n'
           << "  |E|/|H| ~ k0 r    = " << fmt(e.e_over_h)
           << (e.electric_negligible ? "  [electric field negligible]" : "  [electric field NOT negligible]") << '\n';
    }
}

}  // namespace evanescent
