#include "sphbm/sphere.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sphbm/distributions.hpp"
#include "sphbm/vecmath.hpp"

namespace sphbm {

namespace {

std::atomic<std::uint64_t> g_renorm_exceedances{0};

constexpr double kUnitTol = 1e-9;        // construction acceptance window
constexpr double kPoleThreshold = 1e-12; // |e_d - z| below this -> identity frame
constexpr double kRenormWarn = 1e-10;

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.size() < 2) throw std::domain_error("SpherePoint: dimension must be >= 2");
  const double n = norm(coords_);
  if (std::abs(n - 1.0) > kUnitTol)
    throw std::domain_error("SpherePoint: |coords| = " + std::to_string(n) + " is not 1");
  scale_inplace(coords_, 1.0 / n);
}

SpherePoint SpherePoint::north_pole(int d) {
  if (d < 2) throw std::domain_error("SpherePoint: dimension must be >= 2");
  std::vector<double> v(static_cast<std::size_t>(d), 0.0);
  v.back() = 1.0;
  return SpherePoint(std::move(v));
}

HouseholderFrame HouseholderFrame::to(const SpherePoint& z) {
  const int d = z.dim();
  std::vector<double> u(z.coords());
  for (double& x : u) x = -x;
  u.back() += 1.0;  // u = e_d - z, unnormalized
  const double n = norm(u);
  if (n < kPoleThreshold) return HouseholderFrame(d, std::nullopt);
  scale_inplace(u, 1.0 / n);
  return HouseholderFrame(d, std::move(u));
}

std::vector<double> HouseholderFrame::apply(std::vector<double> v) const {
  if (static_cast<int>(v.size()) != d_)
    throw std::domain_error("HouseholderFrame: dimension mismatch");
  if (!u_) return v;
  const double c = 2.0 * dot(v, *u_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * (*u_)[i];
  return v;
}

HouseholderFrame householder_to(const SpherePoint& z) { return HouseholderFrame::to(z); }

SphereBrownianSampler::SphereBrownianSampler(int d, double t, const WfOptions& opts)
    : d_(d), t_(t) {
  if (d < 2) throw std::domain_error("sphere sampler: d must be >= 2");
  if (!(t > 0.0)) throw std::domain_error("sphere sampler: t must be > 0");
  if (d >= 3) {
    const double half = 0.5 * (d - 1);
    wf_ = std::make_unique<WfIncrementSampler>(WrightFisherLaw{half, half, 0.0, t}, opts);
  }
}

IncrementDraw SphereBrownianSampler::sample(const SpherePoint& z, RngStream& rng) {
  if (z.dim() != d_) throw std::domain_error("sphere sampler: starting point dimension mismatch");

  double x;
  std::vector<double> y;
  if (d_ == 2) {
    // Z = exp(iW): the same skew-product shape with X = (1 - cos W)/2 and
    // Y = sign(sin W) on S^0.
    const double w = std::sqrt(t_) * rng.normal();
    x = 0.5 * (1.0 - std::cos(w));
    y = {std::sin(w) >= 0.0 ? 1.0 : -1.0};
  } else {
    x = wf_->sample(rng);
    y = uniform_sphere(d_ - 1, rng);
  }

  std::vector<double> v(static_cast<std::size_t>(d_));
  const double r = 2.0 * std::sqrt(x * (1.0 - x));
  for (int i = 0; i + 1 < d_; ++i) v[static_cast<std::size_t>(i)] = r * y[static_cast<std::size_t>(i)];
  v.back() = 1.0 - 2.0 * x;

  v = HouseholderFrame::to(z).apply(std::move(v));
  const double n = norm(v);
  if (std::abs(n - 1.0) > kRenormWarn) g_renorm_exceedances.fetch_add(1, std::memory_order_relaxed);
  scale_inplace(v, 1.0 / n);

  return IncrementDraw{SpherePoint(std::move(v)), x, std::move(y), t_};
}

IncrementDraw sample_increment(const SpherePoint& z, double t, RngStream& rng,
                               const WfOptions& opts) {
  return SphereBrownianSampler(z.dim(), t, opts).sample(z, rng);
}

std::vector<SpherePoint> sample_path(const SpherePoint& z0, const std::vector<double>& times,
                                     RngStream& rng, const WfOptions& opts) {
  double prev = 0.0;
  for (const double t : times) {
    if (!(t > prev)) throw std::domain_error("sample_path: times must be strictly increasing and > 0");
    prev = t;
  }
  std::vector<SpherePoint> path;
  path.reserve(times.size());
  const SpherePoint* current = &z0;
  prev = 0.0;
  for (const double t : times) {
    path.push_back(sample_increment(*current, t - prev, rng, opts).point);
    current = &path.back();
    prev = t;
  }
  return path;
}

std::vector<double> sample_increment_radius(const std::vector<double>& z, double radius, double t,
                                            RngStream& rng, const WfOptions& opts) {
  if (!(radius > 0.0)) throw std::domain_error("sample_increment_radius: radius must be > 0");
  const double n = norm(z);
  if (std::abs(n - radius) > 1e-9 * radius)
    throw std::domain_error("sample_increment_radius: |z| differs from the radius");
  std::vector<double> unit(z);
  scale_inplace(unit, 1.0 / n);
  IncrementDraw draw = sample_increment(SpherePoint(std::move(unit)), t / (radius * radius), rng, opts);
  std::vector<double> out(draw.point.coords());
  scale_inplace(out, radius);
  return out;
}

SpherePoint sample_circle_increment(const SpherePoint& z, double t, RngStream& rng) {
  if (z.dim() != 2) throw std::domain_error("sample_circle_increment: d must be 2");
  if (!(t > 0.0)) throw std::domain_error("sample_circle_increment: t must be > 0");
  const double w = std::sqrt(t) * rng.normal();
  const double c = std::cos(w), s = std::sin(w);
  return SpherePoint({c * z[0] - s * z[1], s * z[0] + c * z[1]});
}

double geodesic_distance(const SpherePoint& z, const SpherePoint& w) {
  if (z.dim() != w.dim()) throw std::domain_error("geodesic_distance: dimension mismatch");
  const double c = dot(z.coords(), w.coords());
  return std::acos(std::clamp(c, -1.0, 1.0));
}

std::uint64_t sphere_renorm_exceedances() {
  return g_renorm_exceedances.load(std::memory_order_relaxed);
}

}  // namespace sphbm
