#ifndef SPHBM_ORACLES_HPP
#define SPHBM_ORACLES_HPP

#include "sphbm/rng.hpp"
#include "sphbm/sphere.hpp"

namespace sphbm {

// Independent Euler-Maruyama oracles. They integrate the defining SDEs using
// nothing but base normal draws, so they share no distributional code with
// the exact samplers they validate.

/// dZ = (I - Z Z^T) dB - ((d-1)/2) Z dt, renormalized to the sphere after
/// every step; a final partial step covers t mod dt.
SpherePoint euler_maruyama_sphere(const SpherePoint& z0, double t, double dt, RngStream& rng);

/// dW = sqrt(W(1-W)) dB + (theta1(1-W) - theta2 W)/2 dt, clamped to [0,1]
/// after every step.
double euler_maruyama_wf(double x, double t, double dt, double theta1, double theta2,
                         RngStream& rng);

}  // namespace sphbm

#endif
