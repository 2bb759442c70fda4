#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string_view>

namespace evanescent {

using complex = std::complex<double>;

/// Drude parameters of the plate metal, both in rad/s.
struct MetalParams
{
    double omega_p = 0.0;
    double gamma = 0.0;

    void validate() const;
};

/// Copper: omega_p = 1.12e16 rad/s, gamma = 1.38e13 rad/s.
inline constexpr MetalParams copper{1.12e16, 1.38e13};

enum class ModelTag { Drude, Plasma, IdealMetal, CustomReflection };

std::string_view to_string(ModelTag tag);
/// "drude", "plasma", "ideal" or "custom" (case-sensitive).
ModelTag parse_model_tag(std::string_view name);

/// s-polarized reflection coefficient as a function of (omega, k_t).
using ReflectionHook = std::function<complex(double omega, double k_t)>;

/// Response of the plate. IdealMetal means R_s = -1 everywhere; a
/// CustomReflection model supplies R_s directly, which is how spatially
/// nonlocal responses plug in.
struct ResponseModel
{
    ModelTag tag = ModelTag::Drude;
    MetalParams metal = copper;
    ReflectionHook custom;

    static ResponseModel drude(MetalParams m = copper) { return {ModelTag::Drude, m, {}}; }
    static ResponseModel plasma(MetalParams m = copper) { return {ModelTag::Plasma, m, {}}; }
    static ResponseModel ideal_metal() { return {ModelTag::IdealMetal, {}, {}}; }
    static ResponseModel custom_reflection(ReflectionHook hook)
    {
        return {ModelTag::CustomReflection, {}, std::move(hook)};
    }

    /// Local permittivity at omega; empty for IdealMetal and CustomReflection.
    std::optional<complex> permittivity(double omega) const;
};

/// 1 - omega_p^2 / (omega (omega + i gamma)). Requires omega > 0.
complex eps_drude(double omega, const MetalParams& metal);
/// 1 - omega_p^2 / omega^2. Requires omega > 0.
double eps_plasma(double omega, const MetalParams& metal);

/// omega_h = c/h in rad/s.
double omega_h(double h);

/// K = (eps - 1) omega^2 / omega_h^2.
complex k_factor(double omega, double h, complex eps);

/// Crossover frequency gamma omega_h^2 / omega_p^2 below which Drude
/// reflection of evanescent waves collapses.
double omega_threshold(const MetalParams& metal, double h);

}  // namespace evanescent
