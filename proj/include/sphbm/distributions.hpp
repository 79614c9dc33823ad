#ifndef SPHBM_DISTRIBUTIONS_HPP
#define SPHBM_DISTRIBUTIONS_HPP

#include <cstdint>
#include <vector>

#include "sphbm/rng.hpp"

namespace sphbm {

/// One N(0, 1) variate.
double standard_normal(RngStream& rng);

/// Gamma(shape, scale 1) via Marsaglia-Tsang squeeze; shape < 1 handled through
/// the boosting identity G(a) = G(a+1) U^{1/a}. Throws std::domain_error for
/// shape <= 0.
double gamma_sample(double shape, RngStream& rng);

/// Beta(a, b) variate, strictly inside (0, 1). Throws std::domain_error for
/// nonpositive parameters.
double beta_sample(double a, double b, RngStream& rng);

/// Binomial(n, p). Plain inversion for n <= 64, geometric waiting times above.
/// Throws std::domain_error for p outside [0, 1] or n < 0.
std::int64_t binomial_sample(std::int64_t n, double p, RngStream& rng);

/// Uniform point on S^{m-1} in R^m (m >= 1). Unit norm within 1e-12.
std::vector<double> uniform_sphere(int m, RngStream& rng);

}  // namespace sphbm

#endif
