#pragma once

#include "evanescent/dipole.hpp"
#include "evanescent/materials.hpp"
#include "evanescent/quadrature.hpp"
#include "evanescent/reflected_field.hpp"
#include "evanescent/units.hpp"

#include <string>
#include <vector>

namespace evanescent {

enum class SweepVariable { Separation, Frequency };

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);

/// One family of curves: H_x at the dipole height along a grid of lateral
/// separations (fixed omega) or of frequencies (fixed x), for each model.
struct SweepSpec
{
    SweepVariable variable = SweepVariable::Separation;
    std::vector<double> grid;           ///< cm or rad/s, strictly increasing
    DipoleConfig fixed;                 ///< omega is ignored for frequency sweeps
    double x = 1.0;                     ///< cm, used for frequency sweeps
    double y = 0.0;                     ///< cm
    std::vector<ResponseModel> models;
    FieldUnit output_units = FieldUnit::Oe;

    void validate() const;
};

struct ResultRow
{
    ModelTag model = ModelTag::Drude;
    double omega = 0.0;   ///< rad/s
    double x = 0.0;       ///< cm
    double h = 0.0;       ///< cm
    double re_hx = 0.0;
    double im_hx = 0.0;
    double abs_re_hx = 0.0;
    FieldUnit unit = FieldUnit::Oe;
    double est_error = 0.0;  ///< same unit as the field columns
    int segments = 0;
    bool converged = true;
    std::string error;  ///< engine failure for this row; field columns are NaN when set

    bool operator==(const ResultRow&) const = default;
};

ResultRow make_row(const FieldResult& r, double omega, double x, double h, FieldUnit unit);

/// One row per (model, grid point), ordered by model (as listed) then
/// grid value. Grid points run on up to `threads` workers (0 = hardware
/// concurrency); the result does not depend on the thread count.
std::vector<ResultRow> run_sweep(const SweepSpec& spec, const QuadratureConfig& cfg, unsigned threads = 0);

std::vector<double> linear_grid(double start, double stop, int points);
std::vector<double> log_grid(double start, double stop, int points);

/// Curve families behind the separation and frequency plots for the
/// copper/10 mm scenario. Panel 'a' sweeps x in [h, 2.5h] at omega = 2, 10,
/// 100 rad/s; panel 'b' sweeps omega in [1, 100] rad/s (log) at x = h, 2h.
/// figure2 adds the plasma model; figure3 is Drude only.
std::vector<SweepSpec> figure2_specs(const DipoleConfig& base, const MetalParams& metal, char panel,
                                     FieldUnit unit);
std::vector<SweepSpec> figure3_specs(const DipoleConfig& base, const MetalParams& metal, char panel,
                                     FieldUnit unit);

struct RatioResult
{
    double ratio = 0.0;   ///< |Re H_x|_plasma / |Re H_x|_drude, +inf when Drude vanishes
    FieldResult plasma;
    FieldResult drude;
    std::string diagnostic;
};

/// Plasma-to-Drude ratio of |Re H_x| at (x, 0, h).
RatioResult discrimination_ratio(double x, double omega, const DipoleConfig& dipole, const MetalParams& metal,
                                 const QuadratureConfig& cfg = {});

/// Same ratio for two arbitrary models (numerator over denominator).
RatioResult discrimination_ratio(double x, const DipoleConfig& dipole, const ResponseModel& numerator,
                                 const ResponseModel& denominator, const QuadratureConfig& cfg = {});

}  // namespace evanescent
