#pragma once

#include "evanescent/dipole.hpp"
#include "evanescent/materials.hpp"
#include "evanescent/quadrature.hpp"
#include "evanescent/sweep.hpp"
#include "evanescent/units.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace evanescent {

class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Everything a run needs. Defaults reproduce the copper plate with the
/// N = 10, I0 = 3e9 statA, R = 1 mm coil at h = 10 mm.
struct ScenarioConfig
{
    MetalParams metal = copper;
    CoilSpec coil{10, 3e9, 0.1};
    std::optional<double> m0;  ///< overrides the coil when set

    double h = 1.0;
    double x = 1.0;
    double y = 0.0;
    double omega = 100.0;

    std::vector<ModelTag> models{ModelTag::Drude};

    SweepVariable sweep_variable = SweepVariable::Separation;
    std::vector<double> grid;  ///< empty: derive from the geometry

    QuadratureConfig quadrature;

    FieldUnit unit = FieldUnit::Oe;
    bool json = false;
    std::string out_path;  ///< empty: stdout

    double moment() const;
    DipoleConfig dipole() const;
    std::vector<ResponseModel> response_models() const;
    SweepSpec sweep_spec() const;
};

/// Parses a JSON document with optional sections metal, coil or m0,
/// geometry, sweep, quadrature and output. Unknown keys are rejected.
ScenarioConfig parse_config(std::string_view json_text, ScenarioConfig base = {});
ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base = {});

/// "a" -> {a}; "a:b:n" -> n points from a to b (log spaced when log_spaced).
std::vector<double> parse_range(std::string_view text, bool log_spaced);

}  // namespace evanescent
