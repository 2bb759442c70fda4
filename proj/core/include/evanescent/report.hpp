#pragma once

#include "evanescent/dipole.hpp"
#include "evanescent/materials.hpp"

#include <iosfwd>
#include <vector>

namespace evanescent {

struct FrequencyEntry
{
    double omega = 0.0;
    complex k_drude;
    complex k_plasma;
    double k0h = 0.0;
    /// 1/(k0 h)^3
    double propagating_suppression = 0.0;
    /// |E|/|H| ~ k0 r at r = h
    double e_over_h = 0.0;
    bool electric_negligible = true;
};

struct ParamsReport
{
    double m0 = 0.0;       ///< erg/Oe
    double m0_si = 0.0;    ///< A m^2
    double current_si = 0.0;
    double h = 0.0;
    double omega_h = 0.0;
    double omega_threshold = 0.0;
    bool plasma_like = false;  ///< gamma = 0: no crossover, reflection stays plasma-like
    std::vector<FrequencyEntry> frequencies;
};

/// Derived quantities for a coil at height h over the given metal.
ParamsReport params_report(const MetalParams& metal, const CoilSpec& coil, double h, const std::vector<double>& omegas);

/// Same, for a dipole moment given directly.
ParamsReport params_report(const MetalParams& metal, double m0, double h, const std::vector<double>& omegas);

void print_report(std::ostream& os, const ParamsReport& report);

}  // namespace evanescent
