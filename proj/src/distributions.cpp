#include "sphbm/distributions.hpp"

#include <cmath>
#include <stdexcept>

#include "sphbm/vecmath.hpp"

namespace sphbm {

double standard_normal(RngStream& rng) { return rng.normal(); }

namespace {

// Marsaglia-Tsang (2000) for shape >= 1.
double gamma_marsaglia_tsang(double shape, RngStream& rng) {
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = rng.normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

}  // namespace

double gamma_sample(double shape, RngStream& rng) {
  if (!(shape > 0.0)) throw std::domain_error("gamma_sample: shape must be > 0");
  if (shape >= 1.0) return gamma_marsaglia_tsang(shape, rng);
  // G(a) = G(a+1) U^{1/a}; computed in log space so tiny shapes underflow
  // gracefully instead of producing 0 * inf.
  const double g = gamma_marsaglia_tsang(shape + 1.0, rng);
  const double u = rng.uniform_open();
  return std::exp(std::log(g) + std::log(u) / shape);
}

double beta_sample(double a, double b, RngStream& rng) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("beta_sample: shapes must be > 0");
  const double x = gamma_sample(a, rng);
  const double y = gamma_sample(b, rng);
  double r = x / (x + y);
  // The ratio can round onto a boundary when the magnitudes are wildly
  // different; the law itself never charges {0, 1}.
  if (r <= 0.0) r = std::nextafter(0.0, 1.0);
  if (r >= 1.0) r = std::nextafter(1.0, 0.0);
  return r;
}

std::int64_t binomial_sample(std::int64_t n, double p, RngStream& rng) {
  if (n < 0) throw std::domain_error("binomial_sample: n must be >= 0");
  if (!(p >= 0.0) || !(p <= 1.0)) throw std::domain_error("binomial_sample: p must be in [0,1]");
  if (n == 0 || p == 0.0) return 0;
  if (p == 1.0) return n;
  const bool flip = p > 0.5;
  const double q = flip ? 1.0 - p : p;
  std::int64_t count = 0;
  if (n <= 64) {
    for (std::int64_t i = 0; i < n; ++i) count += rng.uniform() < q ? 1 : 0;
  } else {
    // Geometric waiting times between successes; O(n q) expected.
    const double log1mq = std::log1p(-q);
    std::int64_t pos = 0;
    for (;;) {
      const double skip = std::floor(std::log(rng.uniform_open()) / log1mq);
      if (skip >= static_cast<double>(n)) break;  // guards int64 overflow
      pos += static_cast<std::int64_t>(skip) + 1;
      if (pos > n) break;
      ++count;
    }
  }
  return flip ? n - count : count;
}

std::vector<double> uniform_sphere(int m, RngStream& rng) {
  if (m < 1) throw std::domain_error("uniform_sphere: m must be >= 1");
  if (m == 1) return {rng.uniform() < 0.5 ? -1.0 : 1.0};
  std::vector<double> v(static_cast<std::size_t>(m));
  for (;;) {
    for (double& x : v) x = rng.normal();
    if (normalize_inplace(v) > 1e-100) return v;
  }
}

}  // namespace sphbm
