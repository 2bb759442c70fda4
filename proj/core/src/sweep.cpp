#include "evanescent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace evanescent {

std::string_view to_string(SweepVariable v)
{
    return v == SweepVariable::Separation ? "separation" : "frequency";
}

SweepVariable parse_sweep_variable(std::string_view name)
{
    if (name == "separation" || name == "separation_x" || name == "x") return SweepVariable::Separation;
    if (name == "frequency" || name == "omega") return SweepVariable::Frequency;
    throw std::invalid_argument("unknown sweep variable '" + std::string(name) + "'");
}

void SweepSpec::validate() const
{
    if (grid.empty()) throw std::invalid_argument("sweep grid is empty");
    if (std::adjacent_find(grid.begin(), grid.end(), std::greater_equal<>{}) != grid.end())
        throw std::invalid_argument("sweep grid must be strictly increasing");
    if (models.empty()) throw std::invalid_argument("sweep needs at least one model");
    if (!(fixed.m0 > 0.0) || !(fixed.h > 0.0)) throw std::invalid_argument("sweep needs positive m0 and h");
    if (variable == SweepVariable::Separation && !(fixed.omega > 0.0))
        throw std::invalid_argument("separation sweep needs a positive omega");
    if (variable == SweepVariable::Frequency && !(grid.front() > 0.0))
        throw std::invalid_argument("frequency grid must be positive");
}

ResultRow make_row(const FieldResult& r, double omega, double x, double h, FieldUnit unit)
{
    ResultRow row;
    row.model = r.model;
    row.omega = omega;
    row.x = x;
    row.h = h;
    row.re_hx = convert_field(r.value.real(), unit);
    row.im_hx = convert_field(r.value.imag(), unit);
    row.abs_re_hx = std::abs(row.re_hx);
    row.unit = unit;
    row.est_error = convert_field(r.est_error, unit);
    row.segments = r.segments_used;
    row.converged = r.converged;
    return row;
}

namespace {

ResultRow failed_row(ModelTag tag, double omega, double x, double h, FieldUnit unit, std::string what)
{
    const double nan = std::numeric_limits<double>::quiet_NaN();
    ResultRow row{tag, omega, x, h, nan, nan, nan, unit, nan, 0, false, std::move(what)};
    return row;
}

}  // namespace

std::vector<ResultRow> run_sweep(const SweepSpec& spec, const QuadratureConfig& cfg, unsigned threads)
{
    spec.validate();
    cfg.validate();

    const std::size_t n_grid = spec.grid.size();
    const std::size_t n_jobs = n_grid * spec.models.size();
    std::vector<ResultRow> rows(n_jobs);

    auto evaluate = [&](std::size_t job) {
        const ResponseModel& model = spec.models[job / n_grid];
        const double g = spec.grid[job % n_grid];
        DipoleConfig d = spec.fixed;
        double x = spec.x;
        if (spec.variable == SweepVariable::Separation)
            x = g;
        else
            d.omega = g;
        try {
            rows[job] = make_row(h_x_reflected(x, spec.y, d, model, cfg), d.omega, x, d.h, spec.output_units);
        } catch (const std::exception& e) {
            rows[job] = failed_row(model.tag, d.omega, x, d.h, spec.output_units, e.what());
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n_jobs));
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t j = next++; j < n_jobs; j = next++) evaluate(j);
            });
    }
    return rows;
}

std::vector<double> linear_grid(double start, double stop, int points)
{
    if (points < 1) throw std::invalid_argument("grid needs at least one point");
    if (points == 1) return {start};
    if (!(stop > start)) throw std::invalid_argument("grid stop must exceed start");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = start + (stop - start) * i / (points - 1);
    g.back() = stop;
    return g;
}

std::vector<double> log_grid(double start, double stop, int points)
{
    if (!(start > 0.0)) throw std::invalid_argument("log grid needs a positive start");
    std::vector<double> g = linear_grid(std::log(start), std::log(stop), points);
    for (double& v : g) v = std::exp(v);
    g.front() = start;
    if (points > 1) g.back() = stop;
    return g;
}

namespace {

constexpr double preset_omegas[] = {2.0, 10.0, 100.0};

std::vector<SweepSpec> preset(const DipoleConfig& base, const MetalParams& metal, char panel, FieldUnit unit,
                              bool with_plasma)
{
    if (panel != 'a' && panel != 'b') throw std::invalid_argument("panel must be 'a' or 'b'");
    std::vector<SweepSpec> specs;
    if (panel == 'a') {
        const std::vector<double> xs = linear_grid(base.h, 2.5 * base.h, 31);
        for (double omega : preset_omegas) {
            SweepSpec s{SweepVariable::Separation, xs, base, 0.0, 0.0, {ResponseModel::drude(metal)}, unit};
            s.fixed.omega = omega;
            specs.push_back(std::move(s));
        }
        if (with_plasma) {
            SweepSpec s{SweepVariable::Separation, xs, base, 0.0, 0.0, {ResponseModel::plasma(metal)}, unit};
            s.fixed.omega = 100.0;
            specs.push_back(std::move(s));
        }
    } else {
        const std::vector<double> ws = log_grid(1.0, 100.0, 41);
        std::vector<ResponseModel> models{ResponseModel::drude(metal)};
        if (with_plasma) models.push_back(ResponseModel::plasma(metal));
        for (double x : {base.h, 2.0 * base.h}) specs.push_back({SweepVariable::Frequency, ws, base, x, 0.0, models, unit});
    }
    return specs;
}

}  // namespace

std::vector<SweepSpec> figure2_specs(const DipoleConfig& base, const MetalParams& metal, char panel, FieldUnit unit)
{
    return preset(base, metal, panel, unit, true);
}

std::vector<SweepSpec> figure3_specs(const DipoleConfig& base, const MetalParams& metal, char panel, FieldUnit unit)
{
    return preset(base, metal, panel, unit, false);
}

RatioResult discrimination_ratio(double x, const DipoleConfig& dipole, const ResponseModel& numerator,
                                 const ResponseModel& denominator, const QuadratureConfig& cfg)
{
    RatioResult out;
    out.plasma = h_x_reflected(x, 0.0, dipole, numerator, cfg);
    out.drude = h_x_reflected(x, 0.0, dipole, denominator, cfg);
    const double num = std::abs(out.plasma.value.real());
    const double den = std::abs(out.drude.value.real());
    const double floor = std::max(cfg.abs_tol_floor, out.drude.est_error);
    if (den <= floor) {
        out.ratio = std::numeric_limits<double>::infinity();
        out.diagnostic = "denominator |Re H_x| is below its absolute error floor";
    } else {
        out.ratio = num / den;
    }
    if (!out.plasma.converged || !out.drude.converged) {
        if (!out.diagnostic.empty()) out.diagnostic += "; ";
        out.diagnostic += "quadrature did not converge";
    }
    return out;
}

RatioResult discrimination_ratio(double x, double omega, const DipoleConfig& dipole, const MetalParams& metal,
                                 const QuadratureConfig& cfg)
{
    DipoleConfig d = dipole;
    d.omega = omega;
    return discrimination_ratio(x, d, ResponseModel::plasma(metal), ResponseModel::drude(metal), cfg);
}

}  // namespace evanescent
