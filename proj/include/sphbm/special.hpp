#ifndef SPHBM_SPECIAL_HPP
#define SPHBM_SPECIAL_HPP

namespace sphbm {

/// Regularized incomplete beta I_x(a, b); the CDF of Beta(a, b) at x.
/// Conventions at degenerate shapes: a == 0 gives the point mass at 0
/// (I = 1 for x >= 0), b == 0 gives the point mass at 1.
double beta_cdf(double a, double b, double x);

/// Upper regularized incomplete gamma Q(a, x).
double gamma_upper_q(double a, double x);

double digamma(double x);
double trigamma(double x);

/// Standard normal CDF.
double normal_cdf(double x);

/// Kolmogorov distribution tail Q(lambda) = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_q(double lambda);

/// log C(m, l) + l log(x) + (m - l) log(1 - x); -inf when the mass is zero.
double log_binomial_pmf(int l, int m, double x);

double log_factorial(int n);

}  // namespace sphbm

#endif
