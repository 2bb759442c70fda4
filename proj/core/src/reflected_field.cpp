#include "evanescent/reflected_field.hpp"

#include "evanescent/bessel.hpp"
#include "evanescent/reflection.hpp"
#include "evanescent/units.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace evanescent {

namespace {

constexpr complex I{0.0, 1.0};
constexpr double two_pi = 2.0 * std::numbers::pi;
// Below this rho the J1 kernel is replaced by its leading Taylor term.
constexpr double taylor_rho = 1e-6;

// int_U^inf u^n e^{-rate u} du
double exp_moment_tail(int n, double rate, double U)
{
    double sum = 0.0;
    double coeff = 1.0;  // n!/(n-k)!
    for (int k = 0; k <= n; ++k) {
        sum += coeff * std::pow(U, n - k) / std::pow(rate, k + 1);
        coeff *= n - k;
    }
    return std::exp(-rate * U) * sum;
}

void check_model(const ResponseModel& model)
{
    if (model.tag == ModelTag::Drude || model.tag == ModelTag::Plasma) model.metal.validate();
    if (model.tag == ModelTag::CustomReflection && !model.custom)
        throw std::invalid_argument("custom reflection model without a hook");
}

// w on the propagating band (u < u0), outgoing branch.
complex propagating_w(double u, double u0) { return {0.0, -std::sqrt(u0 * u0 - u * u)}; }

FieldResult finish(const QuadratureOutcome& q, double scale, ModelTag tag)
{
    return {q.value * scale, q.error * std::abs(scale), q.panels, tag, q.converged};
}

// int_{u0}^inf u^2 J1(u rho) R_s e^{-2w} du (rho >= taylor_rho), or
// int_{u0}^inf u^3 R_s e^{-2w} du / 2 in the Taylor regime.
QuadratureOutcome lateral_integral(double rho, const ScaledReflection& rs, const QuadratureConfig& cfg)
{
    const double u0 = rs.u0();
    const bool taylor = rho < taylor_rho;

    BesselPanelPlan plan;
    plan.start = u0;
    plan.bessel_order = 1;
    plan.scale = taylor ? 0.0 : rho;
    plan.max_panel_width = 4.0;
    if (taylor) {
        plan.integrand = [&rs, u0](double u) {
            const double w = std::sqrt(std::max(u * u - u0 * u0, 0.0));
            return 0.5 * u * u * u * rs(u, w) * std::exp(-2.0 * w);
        };
        plan.tail_bound = [u0](double U) { return 0.5 * std::exp(2.0 * u0) * exp_moment_tail(3, 2.0, U); };
    } else {
        plan.integrand = [&rs, u0, rho](double u) {
            const double w = std::sqrt(std::max(u * u - u0 * u0, 0.0));
            return u * u * bessel_j1(u * rho) * rs(u, w) * std::exp(-2.0 * w);
        };
        plan.tail_bound = [u0](double U) { return std::exp(2.0 * u0) * exp_moment_tail(2, 2.0, U); };
    }

    QuadratureOutcome out = integrate_bessel_panels(plan, cfg);

    if (cfg.include_propagating && u0 > 0.0) {
        const ComplexIntegrand band = [&rs, u0, rho, taylor](double u) {
            const complex w = propagating_w(u, u0);
            const complex kernel = taylor ? 0.5 * u * u * u : u * u * bessel_j1(u * rho);
            return kernel * rs(u, w) * std::exp(-2.0 * w);
        };
        const AdaptiveResult p = integrate_adaptive(band, 0.0, u0, cfg.abs_tol_floor, cfg.rel_tol);
        out.value += p.value;
        out.error += p.error;
        out.converged = out.converged && p.converged;
    }
    return out;
}

}  // namespace

ScaledReflection::ScaledReflection(const ResponseModel& model, double omega, double h)
    : tag_(model.tag), K_(0.0), omega_(omega), h_(h), u0_(wave_number(omega) * h), hook_(model.custom)
{
    check_model(model);
    if (auto eps = model.permittivity(omega)) {
        if (eps->imag() < 0.0) throw std::invalid_argument("permittivity with Im(eps) < 0 is not passive");
        K_ = k_factor(omega, h, *eps);
    }
}

complex ScaledReflection::operator()(double u, complex w) const
{
    switch (tag_) {
        case ModelTag::IdealMetal: return -1.0;
        case ModelTag::CustomReflection: return hook_(omega_, u / h_);
        default: return r_s_scaled(w, K_);
    }
}

FieldVector h_fourier_above_plate(double kx, double ky, double z, const DipoleConfig& dipole,
                                  const ResponseModel& model)
{
    dipole.validate();
    if (!(z > 0.0)) throw std::invalid_argument("h_fourier_above_plate: z must be above the plate");

    const double h = dipole.h;
    const double kt2 = kx * kx + ky * ky;
    const double kt = std::sqrt(kt2);
    const complex q = outgoing_q(kt, wave_number(dipole.omega));
    const ScaledReflection rs(model, dipole.omega, h);
    const complex image = rs(kt * h, q * h) * std::exp(-q * (z + h));
    const complex direct = std::exp(-q * std::abs(z - h));
    const double sgn = z > h ? 1.0 : (z < h ? -1.0 : 0.0);

    const complex lateral = -two_pi * I * dipole.m0 * (image + sgn * direct);
    complex hz = 0.0;
    if (kt2 != 0.0) {
        if (q == 0.0) throw std::domain_error("h_fourier_above_plate: H_z is singular at k_t = k0");
        hz = two_pi * dipole.m0 * kt2 / q * (image + direct);
    }
    return {lateral * kx, lateral * ky, hz};
}

FieldResult h_x_reflected(double x, double y, const DipoleConfig& dipole, const ResponseModel& model,
                          const QuadratureConfig& cfg)
{
    dipole.validate();
    cfg.validate();
    check_model(model);
    const double rt = std::hypot(x, y);
    if (rt == 0.0) return {0.0, 0.0, 0, model.tag, true};

    const double h = dipole.h;
    const double rho = rt / h;
    const ScaledReflection rs(model, dipole.omega, h);
    const QuadratureOutcome q = lateral_integral(rho, rs, cfg);

    const double amplitude = dipole.m0 / (h * h * h);
    // Taylor regime: (x/r_t) J1(u rho) -> (x/h) u/2, the u/2 lives in the integrand.
    const double prefactor = rho < taylor_rho ? x / h : x / rt;
    return finish(q, amplitude * prefactor, model.tag);
}

FieldResult h_y_reflected(double x, double y, const DipoleConfig& dipole, const ResponseModel& model,
                          const QuadratureConfig& cfg)
{
    return h_x_reflected(y, x, dipole, model, cfg);
}

FieldResult h_z_reflected(double x, double y, double z, const DipoleConfig& dipole, const ResponseModel& model,
                          const QuadratureConfig& cfg)
{
    dipole.validate();
    cfg.validate();
    check_model(model);
    if (!(z > 0.0)) throw std::invalid_argument("h_z_reflected: z must be above the plate");

    const double h = dipole.h;
    const double rho = std::hypot(x, y) / h;
    const double zeta = (z + h) / h;
    const ScaledReflection rs(model, dipole.omega, h);
    const double u0 = rs.u0();

    // Leading panel in u = u0 cosh(s), where du / w = ds removes the 1/w
    // singularity at the lower limit.
    const double width = 8.0 / zeta;
    double first_end = u0 + width;
    if (rho > 0.0) first_end = std::min(first_end, j0_zero(1) / rho);
    if (first_end <= u0) first_end = u0 + width;

    BesselPanelPlan plan;
    plan.start = first_end;
    plan.bessel_order = 0;
    plan.scale = rho;
    plan.max_panel_width = width;
    plan.integrand = [&rs, u0, rho, zeta](double u) {
        const double w = std::sqrt(std::max(u * u - u0 * u0, 0.0));
        return u * u * u / w * bessel_j0(u * rho) * rs(u, w) * std::exp(-zeta * w);
    };
    plan.tail_bound = [u0, zeta](double U) {
        const double ratio = U / std::sqrt(U * U - u0 * u0);
        return ratio * std::exp(zeta * u0) * exp_moment_tail(2, zeta, U);
    };
    plan.leading = LeadingPiece{
        [&rs, u0, rho, zeta](double s) {
            const double u = u0 * std::cosh(s);
            const double w = u0 * std::sinh(s);
            return u * u * u * bessel_j0(u * rho) * rs(u, w) * std::exp(-zeta * w);
        },
        0.0, std::acosh(first_end / u0)};

    QuadratureOutcome q = integrate_bessel_panels(plan, cfg);

    if (cfg.include_propagating && u0 > 0.0) {
        // u = u0 sin(t) on the propagating band: du / w = i dt
        const ComplexIntegrand band = [&rs, u0, rho, zeta](double t) {
            const double u = u0 * std::sin(t);
            const complex w{0.0, -u0 * std::cos(t)};
            return I * u * u * u * bessel_j0(u * rho) * rs(u, w) * std::exp(-zeta * w);
        };
        const AdaptiveResult p =
            integrate_adaptive(band, 0.0, 0.5 * std::numbers::pi, cfg.abs_tol_floor, cfg.rel_tol);
        q.value += p.value;
        q.error += p.error;
        q.converged = q.converged && p.converged;
    }

    return finish(q, dipole.m0 / (h * h * h), model.tag);
}

FieldResult h_z_above_plate(double x, double y, double z, const DipoleConfig& dipole,
                            const ResponseModel& model, const QuadratureConfig& cfg)
{
    FieldResult result = h_z_reflected(x, y, z, dipole, model, cfg);
    result.value += h_free(dipole.omega, dipole.m0, {x, y, z - dipole.h}).z;
    return result;
}

double propagating_suppression_factor(double omega, double h)
{
    if (!(omega > 0.0) || !(h > 0.0)) throw std::invalid_argument("omega and h must be positive");
    const double k0h = wave_number(omega) * h;
    return 1.0 / (k0h * k0h * k0h);
}

}  // namespace evanescent
