#include "evanescent/materials.hpp"

#include "evanescent/units.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace evanescent {

namespace {

void require_positive(double v, const char* what)
{
    if (!(v > 0.0) || !std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be positive and finite");
}

}  // namespace

void MetalParams::validate() const
{
    require_positive(omega_p, "omega_p");
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw std::invalid_argument("gamma must be non-negative");
}

std::string_view to_string(ModelTag tag)
{
    switch (tag) {
        case ModelTag::Drude: return "drude";
        case ModelTag::Plasma: return "plasma";
        case ModelTag::IdealMetal: return "ideal";
        case ModelTag::CustomReflection: return "custom";
    }
    return "?";
}

ModelTag parse_model_tag(std::string_view name)
{
    if (name == "drude") return ModelTag::Drude;
    if (name == "plasma") return ModelTag::Plasma;
    if (name == "ideal") return ModelTag::IdealMetal;
    if (name == "custom") return ModelTag::CustomReflection;
    throw std::invalid_argument("unknown response model '" + std::string(name) + "'");
}

std::optional<complex> ResponseModel::permittivity(double omega) const
{
    switch (tag) {
        case ModelTag::Drude: return eps_drude(omega, metal);
        case ModelTag::Plasma: return complex(eps_plasma(omega, metal), 0.0);
        default: return std::nullopt;
    }
}

complex eps_drude(double omega, const MetalParams& metal)
{
    require_positive(omega, "omega");
    return 1.0 - metal.omega_p * metal.omega_p / (omega * complex(omega, metal.gamma));
}

double eps_plasma(double omega, const MetalParams& metal)
{
    require_positive(omega, "omega");
    const double ratio = metal.omega_p / omega;
    return 1.0 - ratio * ratio;
}

double omega_h(double h)
{
    require_positive(h, "h");
    return constants::c / h;
}

complex k_factor(double omega, double h, complex eps)
{
    require_positive(omega, "omega");
    const double scale = omega / omega_h(h);
    return (eps - 1.0) * (scale * scale);
}

double omega_threshold(const MetalParams& metal, double h)
{
    const double wh = omega_h(h);
    return metal.gamma * wh * wh / (metal.omega_p * metal.omega_p);
}

}  // namespace evanescent
