#ifndef SPHBM_DEATH_PROCESS_HPP
#define SPHBM_DEATH_PROCESS_HPP

#include <utility>
#include <vector>

#include "sphbm/rng.hpp"

namespace sphbm {

/// Parameters of the lineage-death marginal: a pure death process on the
/// non-negative integers in which state m decays at rate m(m+theta-1)/2,
/// entered from infinity and observed at time t. theta = theta1 + theta2.
struct DeathProcessLaw {
  double theta = 0.0;
  double t = 0.0;
  /// Relative width target for the alternating-series envelopes.
  double truncation_tolerance = 1e-12;
};

/// Time horizon below which the alternating series is numerically fragile and
/// samplers refuse to run it by default.
inline constexpr double kExactRegimeFloor = 0.05;

/// What a sampler should do when t is below the exact-regime floor.
enum class SmallTimePolicy {
  require_exact_regime,  // throw RegimeError below the floor
  force_exact,           // run the series anyway (may raise ConvergenceError)
  gaussian,              // use the normal approximation
};

/// Lazy evaluator of the PMF q_m(t) via its alternating series, with rigorous
/// lower/upper envelopes from consecutive partial sums. Caches per-m state so
/// envelopes can be refined incrementally. Not thread-shareable; create one
/// per thread (laws themselves are plain values).
class DeathProcessSeries {
 public:
  explicit DeathProcessSeries(const DeathProcessLaw& law);

  const DeathProcessLaw& law() const { return law_; }

  /// Envelope midpoint, clamped to [0, 1].
  double pmf(int m);

  /// Rigorous bounds on q_m(t): lower <= q_m <= upper.
  std::pair<double, double> envelope(int m);

  /// Prefix-sum bounds on the CDF over {0, ..., m}.
  double cdf_lower(int m);
  double cdf_upper(int m);

  /// Tightens the envelope of q_m by one order of magnitude if floating-point
  /// precision still allows; returns true when the width actually shrank.
  bool refine(int m);

  /// Smallest M with sum_{m<=M} q_m >= 1 - tail_tol (by the lower envelope).
  int truncation_point(double tail_tol);

 private:
  // The alternating terms pass through magnitudes ~e^{c/t} before they cancel
  // to O(1), so the series is evaluated in quad precision internally; the
  // published envelopes are doubles rounded outward.
  struct Entry {
    // Resumable series state.
    __float128 partial = 0;       // alternating partial sum through k_last
    __float128 prev_partial = 0;  // partial sum through k_last - 1
    __float128 log_poch = 0;      // log (theta+m)_(k_last-1)
    __float128 log_fac_km = 0;    // log (k_last - m)!
    double max_term = 0.0;
    int k_last = -1;
    int mono_from = -1;           // certificate index; -1 until established
    bool exhausted = false;       // tail identically zero or fp floor reached
    double target_width = 0.0;
    double lower = 0.0;
    double upper = 1.0;
  };

  void ensure(int m);
  void extend(Entry& e, int m);  // run the series until e.target_width is met

  DeathProcessLaw law_;
  std::vector<Entry> entries_;
  std::vector<double> cum_lower_;
  std::vector<double> cum_upper_;
  bool cum_dirty_ = true;
  void rebuild_cums();
};

/// q_m(t) for a single m. Convenience wrapper; batch callers should hold a
/// DeathProcessSeries.
double death_pmf(const DeathProcessLaw& law, int m);

/// Exact draw from {q_m(t)} by inversion on the refining envelopes.
int sample_ainf(DeathProcessSeries& series, RngStream& rng,
                SmallTimePolicy policy = SmallTimePolicy::require_exact_regime,
                double exact_floor = kExactRegimeFloor);
int sample_ainf(const DeathProcessLaw& law, RngStream& rng,
                SmallTimePolicy policy = SmallTimePolicy::require_exact_regime,
                double exact_floor = kExactRegimeFloor);

struct GaussianMoments {
  double mean = 0.0;
  double variance = 0.0;
};

enum class GaussianCalibration {
  analytic,  // small-t asymptotic moments
  table,     // oracle-estimated calibration table
};

/// Small-t asymptotic mean/variance of the marginal.
GaussianMoments ainf_gaussian_moments(double theta, double t);

/// Oracle-estimated moments, bilinearly interpolated over a (theta, log t)
/// grid and clamped to the grid edges.
GaussianMoments ainf_gaussian_moments_table(double theta, double t);

/// Rounded, clamped-at-zero Gaussian draw approximating the marginal.
int sample_ainf_gaussian(const DeathProcessLaw& law, RngStream& rng,
                         GaussianCalibration calibration = GaussianCalibration::analytic);

/// Monte Carlo oracle: the death process started at n, observed at t, by
/// summing exponential holding times. Only consumes uniform draws.
int simulate_death_process(int n, double theta, double t, RngStream& rng);

}  // namespace sphbm

#endif
