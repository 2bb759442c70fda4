#pragma once

#include "evanescent/materials.hpp"

namespace evanescent {

/// Complex square root on the branch Re >= 0; when Re == 0 the branch with
/// Im >= 0 is taken.
complex principal_sqrt(complex z);

/// (k_t^2 - eps k0^2)^{1/2} on the principal_sqrt branch. With eps = 1 this
/// is the vacuum q; for k_t > k0 it is real and positive.
complex transverse_q(double k_t, double k0, complex eps = 1.0);

/// Vacuum q obeying the radiation condition for the time factor e^{-i omega t}:
/// real positive for k_t >= k0 and -i (k0^2 - k_t^2)^{1/2} for k_t < k0, so that
/// e^{-q|z|} is an outgoing wave. Only used for the propagating band.
complex outgoing_q(double k_t, double k0);

/// Fresnel coefficient for s-polarization, (q - q_eps)/(q + q_eps).
/// Throws std::invalid_argument when Im eps < 0.
complex r_s(double omega, double k_t, complex eps);

/// Fresnel coefficient for p-polarization, (eps q - q_eps)/(eps q + q_eps).
complex r_p(double omega, double k_t, complex eps);

/// R_s in terms of w = h q and K = (eps - 1) omega^2 h^2 / c^2:
/// (w - sqrt(w^2 - K)) / (w + sqrt(w^2 - K)). Stays well conditioned for |K| up
/// to ~1e300 because it is evaluated as K / (w + sqrt(w^2 - K))^2.
complex r_s_scaled(double w, complex K);

/// Same as r_s_scaled for complex w (propagating band diagnostics).
complex r_s_scaled(complex w, complex K);

}  // namespace evanescent
