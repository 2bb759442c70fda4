#pragma once

// Error-controlled quadrature for exponentially damped Bessel-type
// integrands on [lower, inf). The range is cut into panels between
// consecutive zeros of J_order(scale u); each panel is refined with an
// adaptive 21-point Gauss-Kronrod rule, and panels are added until the
// contribution of the last panel and an analytic bound on the remaining
// tail are both negligible. A final global pass bisects the worst
// sub-intervals until the summed error estimate meets the tolerance.

#include <complex>
#include <cstddef>
#include <functional>
#include <optional>

namespace evanescent {

struct QuadratureConfig
{
    double rel_tol = 1e-9;
    double abs_tol_floor = 1e-300;
    int max_segments = 10000;
    double tail_epsilon = 1e-14;
    /// Also integrate the propagating band [0, k0] (diagnostic, off by default).
    bool include_propagating = false;

    /// rel_tol in (0, 1e-3], max_segments >= 16, tail_epsilon in (0, 1).
    void validate() const;
};

/// Single 21-point Gauss-Kronrod evaluation of f on [a, b].
struct RuleEstimate
{
    std::complex<double> value;
    double error = 0.0;
};

using ComplexIntegrand = std::function<std::complex<double>(double)>;

RuleEstimate gauss_kronrod21(const ComplexIntegrand& f, double a, double b);

/// Adaptive bisection of [a, b] until the error estimate drops below
/// max(abs_tol, rel_tol |value|) or max_intervals is exhausted.
struct AdaptiveResult
{
    std::complex<double> value;
    double error = 0.0;
    int intervals = 0;
    bool converged = false;
};

AdaptiveResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, double abs_tol,
                                  double rel_tol, int max_intervals = 2000);

/// A finite leading piece integrated in its own variable, e.g. after a
/// substitution that removes an endpoint singularity.
struct LeadingPiece
{
    ComplexIntegrand integrand;
    double lo = 0.0;
    double hi = 0.0;
};

struct BesselPanelPlan
{
    ComplexIntegrand integrand;       ///< integrand in u on [start, inf)
    double start = 0.0;               ///< lower limit for the panel sequence
    int bessel_order = 1;             ///< 0 or 1; panel ends sit on zeros of J_order(scale u)
    double scale = 1.0;               ///< argument multiplier; 0 means no oscillation
    double max_panel_width = 4.0;     ///< panels never exceed this width
    std::function<double(double)> tail_bound;  ///< bound on |integral over [U, inf)|
    std::optional<LeadingPiece> leading;       ///< integrated before the panels
};

struct QuadratureOutcome
{
    std::complex<double> value;
    double error = 0.0;    ///< summed interval estimates plus the tail bound
    int panels = 0;        ///< Bessel-zero panels consumed
    int intervals = 0;     ///< Gauss-Kronrod intervals in the final partition
    bool converged = false;
};

QuadratureOutcome integrate_bessel_panels(const BesselPanelPlan& plan, const QuadratureConfig& cfg);

}  // namespace evanescent
