#include "sphbm/death_process.hpp"

#include <quadmath.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "sphbm/errors.hpp"

namespace sphbm {

namespace {

constexpr int kTermCap = 100000;
constexpr double kLogOverflow = 11000.0;  // quad-precision exp range
// Widest envelope the series is allowed to report; beyond this the
// cancellation has eaten the value and the evaluation must fail loudly.
constexpr double kMaxHonestWidth = 1e-6;

void check_law(const DeathProcessLaw& law) {
  if (!(law.t > 0.0)) throw std::domain_error("death process: t must be > 0");
  if (!(law.theta >= 0.0)) throw std::domain_error("death process: theta must be >= 0");
}

}  // namespace

DeathProcessSeries::DeathProcessSeries(const DeathProcessLaw& law) : law_(law) {
  check_law(law_);
}

// Runs the alternating series
//   q_m(t) = sum_{k>=m} (-1)^{k-m} b_k(m),
//   b_k(m) = (theta+2k-1) (theta+m)_(k-1) / (m! (k-m)!) * exp(-k(k+theta-1)t/2)
// until consecutive partial sums bracket the limit within the entry's target
// width. The k = 0 term (only reachable for m = 0) equals 1 exactly.
void DeathProcessSeries::extend(Entry& e, int m) {
  const __float128 theta = law_.theta;
  const __float128 t = law_.t;
  const __float128 log_fac_m = lgammaq(static_cast<__float128>(m) + 1);

  // Initialize resumable state on first use.
  if (e.k_last < 0) {
    if (m == 0) {
      e.partial = 1;  // k = 0 term is exactly 1
      e.prev_partial = 0;
      e.max_term = 1.0;
      e.k_last = 0;
      e.log_poch = 0;  // value at k = 1 (empty product)
      e.log_fac_km = 0;
    } else {
      // log (theta+m)_(m-1) for the first term k = m.
      __float128 lp = 0;
      for (int j = 0; j <= m - 2; ++j) lp += logq(theta + m + j);
      e.log_poch = lp;
      e.log_fac_km = 0;
      const __float128 logb =
          logq(theta + 2 * m - 1) + lp - log_fac_m - __float128(0.5) * m * (m + theta - 1) * t;
      if (logb > kLogOverflow)
        throw ConvergenceError("death_pmf: series term overflows (t too small)");
      const __float128 b = expq(logb);
      e.prev_partial = 0;
      e.partial = b;
      e.max_term = static_cast<double>(b);
      e.k_last = m;
    }
  }

  int terms_used = e.k_last - m;
  while (!e.exhausted) {
    const int k = e.k_last + 1;
    if (++terms_used > kTermCap)
      throw ConvergenceError("death_pmf: term cap exceeded before convergence (t=" +
                             std::to_string(law_.t) + ")");

    // Advance the running logs from k-1 to k. The pochhammer (theta+m)_(k-1)
    // is still the empty product at k = 1, so the first factor appears at k = 2.
    if (k >= 2) e.log_poch += logq(theta + m + (k - 2));
    e.log_fac_km += logq(static_cast<__float128>(k - m));
    const __float128 logb = logq(theta + 2 * k - 1) + e.log_poch - log_fac_m - e.log_fac_km -
                            __float128(0.5) * k * (k + theta - 1) * t;
    if (logb > kLogOverflow)
      throw ConvergenceError("death_pmf: series term overflows (t too small)");
    const __float128 b = expq(logb);
    e.max_term = std::max(e.max_term, static_cast<double>(b));

    e.prev_partial = e.partial;
    e.partial += ((k - m) % 2 == 0) ? b : -b;
    e.k_last = k;

    // Monotone-decrease certificate: the term ratio is bounded by
    //   (1 + 2/(theta+2k-1)) (1 + max(0, theta+2m-2)/(k+1-m)) e^{-(2k+theta)t/2},
    // a product of positive decreasing factors, so once it drops below 1 at
    // some k the terms decrease for every later index.
    if (e.mono_from < 0) {
      const double c = std::max(0.0, law_.theta + 2.0 * m - 2.0);
      const double ratio_bound = (1.0 + 2.0 / (law_.theta + 2.0 * k - 1.0)) *
                                 (1.0 + c / (k + 1.0 - m)) *
                                 std::exp(-0.5 * (2.0 * k + law_.theta) * law_.t);
      if (ratio_bound < 1.0) e.mono_from = k;
    }

    // Once the tail alternates with decreasing magnitudes, consecutive
    // partial sums bracket the limit.
    if (e.mono_from >= 0 && e.k_last >= e.mono_from) {
      // Guard band for quad-precision roundoff in the terms and the sum.
      const double fuzz = e.max_term * 2e-32 * (terms_used + 2) + 1e-30;
      double lo = static_cast<double>(e.partial < e.prev_partial ? e.partial : e.prev_partial) - fuzz;
      double hi = static_cast<double>(e.partial > e.prev_partial ? e.partial : e.prev_partial) + fuzz;
      lo = std::clamp(lo, 0.0, 1.0);
      hi = std::clamp(hi, 0.0, 1.0);
      e.lower = lo;
      e.upper = hi;
      const double width = hi - lo;
      if (b == 0 || width <= 2.0 * fuzz) {
        // At the floating-point floor; cannot tighten further.
        if (width > kMaxHonestWidth)
          throw ConvergenceError("death_pmf: cancellation exceeds envelope tolerance (t=" +
                                 std::to_string(law_.t) + " is too small for the series)");
        e.exhausted = true;
        break;
      }
      if (width <= e.target_width) break;
    }
  }
  cum_dirty_ = true;
}

void DeathProcessSeries::ensure(int m) {
  if (m < 0) throw std::domain_error("death_pmf: m must be >= 0");
  if (static_cast<std::size_t>(m) >= entries_.size()) {
    const std::size_t old = entries_.size();
    entries_.resize(static_cast<std::size_t>(m) + 1);
    for (std::size_t j = old; j < entries_.size(); ++j) {
      entries_[j].target_width = law_.truncation_tolerance;
      extend(entries_[j], static_cast<int>(j));
    }
  }
}

void DeathProcessSeries::rebuild_cums() {
  cum_lower_.assign(entries_.size(), 0.0);
  cum_upper_.assign(entries_.size(), 0.0);
  double lo = 0.0, hi = 0.0;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    lo += entries_[j].lower;
    hi += entries_[j].upper;
    cum_lower_[j] = std::min(lo, 1.0);
    cum_upper_[j] = std::min(hi, 1.0);
  }
  cum_dirty_ = false;
}

double DeathProcessSeries::pmf(int m) {
  ensure(m);
  const Entry& e = entries_[static_cast<std::size_t>(m)];
  return std::clamp(0.5 * (e.lower + e.upper), 0.0, 1.0);
}

std::pair<double, double> DeathProcessSeries::envelope(int m) {
  ensure(m);
  const Entry& e = entries_[static_cast<std::size_t>(m)];
  return {e.lower, e.upper};
}

double DeathProcessSeries::cdf_lower(int m) {
  ensure(m);
  if (cum_dirty_) rebuild_cums();
  return cum_lower_[static_cast<std::size_t>(m)];
}

double DeathProcessSeries::cdf_upper(int m) {
  ensure(m);
  if (cum_dirty_) rebuild_cums();
  return cum_upper_[static_cast<std::size_t>(m)];
}

bool DeathProcessSeries::refine(int m) {
  ensure(m);
  Entry& e = entries_[static_cast<std::size_t>(m)];
  if (e.exhausted) return false;
  const double before = e.upper - e.lower;
  e.target_width = std::max(before / 16.0, 0.0);
  extend(e, m);
  return (e.upper - e.lower) < before;
}

int DeathProcessSeries::truncation_point(double tail_tol) {
  // The mass of the marginal sits near 2/t with a super-exponential right
  // tail, so this cap is astronomically generous; hitting it means the
  // envelope sums are not reaching 1.
  const int cap = static_cast<int>(80.0 / law_.t) + 2048;
  for (int m = 0; m <= cap; ++m) {
    if (cdf_lower(m) >= 1.0 - tail_tol) return m;
  }
  throw ConvergenceError("death process: PMF mass does not reach 1 - " +
                         std::to_string(tail_tol) + " within m <= " + std::to_string(cap));
}

double death_pmf(const DeathProcessLaw& law, int m) {
  DeathProcessSeries series(law);
  return series.pmf(m);
}

int sample_ainf(DeathProcessSeries& series, RngStream& rng, SmallTimePolicy policy,
                double exact_floor) {
  const DeathProcessLaw& law = series.law();
  if (policy == SmallTimePolicy::gaussian) return sample_ainf_gaussian(law, rng);
  if (policy == SmallTimePolicy::require_exact_regime && law.t < exact_floor)
    throw RegimeError("sample_ainf: t=" + std::to_string(law.t) +
                      " is below the exact-regime floor " + std::to_string(exact_floor) +
                      "; opt into the Gaussian approximation for small t");

  const double u = rng.uniform_open();
  int m = 0;
  int stalls = 0;
  for (;;) {
    if (u <= series.cdf_lower(m)) return m;
    if (u > series.cdf_upper(m)) {
      ++m;
      stalls = 0;
      continue;
    }
    // u falls inside the envelope gap around the CDF at m: tighten every
    // component of the prefix sum and retry.
    bool progressed = false;
    for (int j = 0; j <= m; ++j) progressed = series.refine(j) || progressed;
    if (!progressed && ++stalls >= 2) {
      // Envelopes are at the floating-point floor (gap ~1e-15); resolving to
      // the lower cell biases the law by less than the gap itself.
      return m;
    }
  }
}

int sample_ainf(const DeathProcessLaw& law, RngStream& rng, SmallTimePolicy policy,
                double exact_floor) {
  DeathProcessSeries series(law);
  return sample_ainf(series, rng, policy, exact_floor);
}

GaussianMoments ainf_gaussian_moments(double theta, double t) {
  if (!(t > 0.0)) throw std::domain_error("ainf_gaussian_moments: t must be > 0");
  if (!(theta >= 0.0)) throw std::domain_error("ainf_gaussian_moments: theta must be >= 0");
  const double beta = 0.5 * (theta - 1.0) * t;
  double eta, shape;
  if (std::abs(beta) < 1e-3) {
    eta = 1.0 / (1.0 + beta / 2.0 + beta * beta / 6.0);
    shape = 1.0 / 3.0 + beta / 6.0;
  } else {
    const double em = std::expm1(beta);  // e^beta - 1
    eta = beta / em;
    const double g = 1.0 + std::exp(-beta) - 2.0 * eta;
    const double denom = -std::expm1(-beta);  // 1 - e^{-beta}
    shape = g / (denom * denom);
  }
  GaussianMoments mom;
  mom.mean = 2.0 * eta / t;
  mom.variance = std::max(mom.mean * shape, 1e-12);
  return mom;
}

int sample_ainf_gaussian(const DeathProcessLaw& law, RngStream& rng,
                         GaussianCalibration calibration) {
  check_law(law);
  const GaussianMoments mom = calibration == GaussianCalibration::analytic
                                  ? ainf_gaussian_moments(law.theta, law.t)
                                  : ainf_gaussian_moments_table(law.theta, law.t);
  const double draw = mom.mean + std::sqrt(mom.variance) * rng.normal();
  return static_cast<int>(std::max(0.0, std::round(draw)));
}

int simulate_death_process(int n, double theta, double t, RngStream& rng) {
  if (n < 1) throw std::domain_error("simulate_death_process: n must be >= 1");
  if (!(t > 0.0)) throw std::domain_error("simulate_death_process: t must be > 0");
  if (!(theta >= 0.0)) throw std::domain_error("simulate_death_process: theta must be >= 0");
  int m = n;
  double elapsed = 0.0;
  while (m > 0) {
    const double rate = 0.5 * m * (m + theta - 1.0);
    if (rate <= 0.0) break;  // absorbing below the mutation-free floor
    elapsed += rng.exponential(rate);
    if (elapsed > t) break;
    --m;
  }
  return m;
}

}  // namespace sphbm
