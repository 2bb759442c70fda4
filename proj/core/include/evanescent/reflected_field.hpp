#pragma once

// Magnetic field of the vertical dipole above a thick plate, built from the
// s-polarized evanescent waves reflected by the metal. The integrals are
// evaluated in dimensionless form: u = k_t h, rho = r_t / h, u0 = k0 h and
// w = (u^2 - u0^2)^{1/2}, so that
//
//   H_x = (m0 / h^3) (x / r_t) int_{u0}^inf u^2 J1(u rho) R_s(w) e^{-2w} du
//
// at the dipole height z = h. Reflection enters only through R_s(w; K).

#include "evanescent/dipole.hpp"
#include "evanescent/materials.hpp"
#include "evanescent/quadrature.hpp"

namespace evanescent {

struct FieldResult
{
    complex value;          ///< Oe
    double est_error = 0.0; ///< absolute, Oe
    int segments_used = 0;
    ModelTag model = ModelTag::Drude;
    bool converged = true;  ///< false: value is partial, est_error exceeds the tolerance
};

/// R_s of a response model expressed on the dimensionless variables of one
/// dipole configuration.
class ScaledReflection
{
public:
    ScaledReflection(const ResponseModel& model, double omega, double h);

    /// R_s at u = k_t h with w = h q (complex on the propagating band).
    complex operator()(double u, complex w) const;

    complex k() const { return K_; }
    double u0() const { return u0_; }

private:
    ModelTag tag_;
    complex K_;
    double omega_;
    double h_;
    double u0_;
    ReflectionHook hook_;
};

/// Fourier components of the field above the plate (z > 0): the image term
/// R_s e^{-q(z+h)} plus the direct term of the dipole at height h. At z = h
/// the lateral direct term uses sign(0) = 0.
FieldVector h_fourier_above_plate(double kx, double ky, double z, const DipoleConfig& dipole,
                                  const ResponseModel& model);

/// Lateral field H_x at (x, y, h) produced by the reflected evanescent waves.
/// Returns exactly zero with zero error when x = y = 0.
FieldResult h_x_reflected(double x, double y, const DipoleConfig& dipole, const ResponseModel& model,
                          const QuadratureConfig& cfg = {});
/// H_y at (x, y, h); equal to h_x_reflected(y, x).
FieldResult h_y_reflected(double x, double y, const DipoleConfig& dipole, const ResponseModel& model,
                          const QuadratureConfig& cfg = {});

/// Reflected part of H_z at (x, y, z), z > 0:
///   (m0/h^3) int_{u0}^inf (u^3/w) J0(u rho) R_s(w) e^{-w (z+h)/h} du
/// Defined on the dipole axis at z = h, where the direct field is singular.
FieldResult h_z_reflected(double x, double y, double z, const DipoleConfig& dipole, const ResponseModel& model,
                          const QuadratureConfig& cfg = {});

/// H_z at (x, y, z), z > 0: reflected evanescent waves plus the direct dipole field.
FieldResult h_z_above_plate(double x, double y, double z, const DipoleConfig& dipole,
                            const ResponseModel& model, const QuadratureConfig& cfg = {});

/// 1/(k0 h)^3, the suppression of the propagating band relative to the evanescent one.
double propagating_suppression_factor(double omega, double h);

}  // namespace evanescent
