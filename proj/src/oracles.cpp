#include "sphbm/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sphbm/vecmath.hpp"

namespace sphbm {

SpherePoint euler_maruyama_sphere(const SpherePoint& z0, double t, double dt, RngStream& rng) {
  if (!(dt > 0.0)) throw std::domain_error("euler_maruyama_sphere: dt must be > 0");
  if (!(t > 0.0) || dt > t) throw std::domain_error("euler_maruyama_sphere: need 0 < dt <= t");

  const int d = z0.dim();
  const double drift = -0.5 * (d - 1);
  std::vector<double> z(z0.coords());
  std::vector<double> db(static_cast<std::size_t>(d));

  double remaining = t;
  while (remaining > 0.0) {
    const double h = std::min(dt, remaining);
    remaining -= h;
    const double sqrt_h = std::sqrt(h);
    for (double& b : db) b = sqrt_h * rng.normal();
    const double zb = dot(z, db);
    for (int i = 0; i < d; ++i) {
      const std::size_t k = static_cast<std::size_t>(i);
      z[k] += db[k] - zb * z[k] + drift * z[k] * h;
    }
    normalize_inplace(z);
  }
  return SpherePoint(std::move(z));
}

double euler_maruyama_wf(double x, double t, double dt, double theta1, double theta2,
                         RngStream& rng) {
  if (!(dt > 0.0)) throw std::domain_error("euler_maruyama_wf: dt must be > 0");
  if (!(t > 0.0) || dt > t) throw std::domain_error("euler_maruyama_wf: need 0 < dt <= t");
  if (!(x >= 0.0) || !(x <= 1.0)) throw std::domain_error("euler_maruyama_wf: x must be in [0,1]");

  double w = x;
  double remaining = t;
  while (remaining > 0.0) {
    const double h = std::min(dt, remaining);
    remaining -= h;
    const double diffusion = std::sqrt(std::max(w * (1.0 - w), 0.0) * h);
    w += 0.5 * (theta1 * (1.0 - w) - theta2 * w) * h + diffusion * rng.normal();
    w = std::clamp(w, 0.0, 1.0);
  }
  return w;
}

}  // namespace sphbm
