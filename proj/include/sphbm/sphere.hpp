#ifndef SPHBM_SPHERE_HPP
#define SPHBM_SPHERE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "sphbm/rng.hpp"
#include "sphbm/wright_fisher.hpp"

namespace sphbm {

/// A point on S^{d-1}, unit norm within 1e-12. Construction accepts inputs up
/// to 1e-9 off the sphere and renormalizes.
class SpherePoint {
 public:
  explicit SpherePoint(std::vector<double> coords);
  static SpherePoint north_pole(int d);

  int dim() const { return static_cast<int>(coords_.size()); }
  const std::vector<double>& coords() const { return coords_; }
  double operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<double> coords_;
};

/// The reflection O(z) = I - 2 u u^T with u = (e_d - z)/|e_d - z|, so that
/// O(z) e_d = z; the identity when z is (numerically) the north pole itself.
/// Applied as a rank-1 update, never materialized.
class HouseholderFrame {
 public:
  static HouseholderFrame to(const SpherePoint& z);

  int dim() const { return d_; }
  bool is_identity() const { return !u_.has_value(); }
  const std::vector<double>* reflector() const { return u_ ? &*u_ : nullptr; }

  std::vector<double> apply(std::vector<double> v) const;

 private:
  HouseholderFrame(int d, std::optional<std::vector<double>> u) : d_(d), u_(std::move(u)) {}
  int d_ = 0;
  std::optional<std::vector<double>> u_;
};

/// An increment sample with its internal components: the point equals
/// O(z) (2 sqrt(X(1-X)) Y^T, 1-2X)^T with radial = X and angular = Y.
struct IncrementDraw {
  SpherePoint point;
  double radial = 0.0;
  std::vector<double> angular;
  double time = 0.0;
};

/// Increment sampler for Brownian motion on S^{d-1} at a fixed time step;
/// caches the Wright-Fisher machinery across draws. d = 2 is routed to the
/// rotation-by-N(0,t) construction on the circle.
class SphereBrownianSampler {
 public:
  SphereBrownianSampler(int d, double t, const WfOptions& opts = {});

  int dim() const { return d_; }
  double time_step() const { return t_; }

  IncrementDraw sample(const SpherePoint& z, RngStream& rng);

 private:
  int d_;
  double t_;
  std::unique_ptr<WfIncrementSampler> wf_;  // null for d == 2
};

HouseholderFrame householder_to(const SpherePoint& z);

/// One exact increment of spherical BM started at z over time t.
IncrementDraw sample_increment(const SpherePoint& z, double t, RngStream& rng,
                               const WfOptions& opts = {});

/// Exact path skeleton at the given strictly increasing times (> 0).
std::vector<SpherePoint> sample_path(const SpherePoint& z0, const std::vector<double>& times,
                                     RngStream& rng, const WfOptions& opts = {});

/// Increment of BM on the sphere of radius R: R Z_{t/R^2} by time-space scaling.
/// z is a point with |z| = R (within 1e-9 R); the output has the same norm.
std::vector<double> sample_increment_radius(const std::vector<double>& z, double radius, double t,
                                            RngStream& rng, const WfOptions& opts = {});

/// d = 2 increment: rotate z by an angle drawn from N(0, t).
SpherePoint sample_circle_increment(const SpherePoint& z, double t, RngStream& rng);

/// arccos of the inner product, clamped to [-1, 1].
double geodesic_distance(const SpherePoint& z, const SpherePoint& w);

/// Number of draws whose pre-renormalization norm drifted beyond 1e-10 from 1
/// (diagnostic; renormalization is a guard, not a correction).
std::uint64_t sphere_renorm_exceedances();

}  // namespace sphbm

#endif
