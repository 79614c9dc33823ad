#include "sphbm/wright_fisher.hpp"

#include <cmath>
#include <stdexcept>

#include "sphbm/distributions.hpp"
#include "sphbm/errors.hpp"
#include "sphbm/special.hpp"

namespace sphbm {

namespace {

void check_law(const WrightFisherLaw& law) {
  if (!(law.theta1 >= 0.0) || !(law.theta2 >= 0.0))
    throw std::domain_error("wright_fisher: mutation parameters must be >= 0");
  if (!(law.x >= 0.0) || !(law.x <= 1.0))
    throw std::domain_error("wright_fisher: x must be in [0,1]");
  if (!(law.t > 0.0)) throw std::domain_error("wright_fisher: t must be > 0");
  // A zero mutation parameter with the start pinned at the matching boundary
  // makes that boundary absorbing from the first instant; unsupported.
  if (law.theta1 == 0.0 && law.x == 0.0)
    throw std::domain_error("wright_fisher: theta1 = 0 with x = 0 (absorbing boundary)");
  if (law.theta2 == 0.0 && law.x == 1.0)
    throw std::domain_error("wright_fisher: theta2 = 0 with x = 1 (absorbing boundary)");
}

}  // namespace

WfIncrementSampler::WfIncrementSampler(const WrightFisherLaw& law, const WfOptions& opts)
    : law_(law), opts_(opts) {
  check_law(law_);
  const double theta = law_.theta1 + law_.theta2;
  if (law_.t < opts_.exact_floor) {
    if (!opts_.approx_small_t)
      throw RegimeError("wright_fisher: t=" + std::to_string(law_.t) +
                        " is below the exact-regime floor " + std::to_string(opts_.exact_floor) +
                        "; pass the approx option to use the Gaussian count draw");
    gaussian_path_ = true;
  } else {
    series_ = std::make_unique<DeathProcessSeries>(DeathProcessLaw{theta, law_.t});
  }
}

WfIncrementDetail WfIncrementSampler::sample_detail(RngStream& rng) {
  const double theta = law_.theta1 + law_.theta2;
  WfIncrementDetail d;
  d.mixture_count =
      gaussian_path_
          ? sample_ainf_gaussian(DeathProcessLaw{theta, law_.t}, rng, opts_.calibration)
          : sample_ainf(*series_, rng, SmallTimePolicy::force_exact);
  d.binomial_count = static_cast<int>(binomial_sample(d.mixture_count, law_.x, rng));
  const double a = law_.theta1 + d.binomial_count;
  const double b = law_.theta2 + (d.mixture_count - d.binomial_count);
  if (a == 0.0)
    d.value = 0.0;  // Beta(0, b): all mass at 0 (fixation without mutation)
  else if (b == 0.0)
    d.value = 1.0;
  else
    d.value = beta_sample(a, b, rng);
  return d;
}

double sample_wf_increment(const WrightFisherLaw& law, RngStream& rng, const WfOptions& opts) {
  return WfIncrementSampler(law, opts).sample(rng);
}

WfIncrementDetail sample_wf_increment_detail(const WrightFisherLaw& law, RngStream& rng,
                                             const WfOptions& opts) {
  return WfIncrementSampler(law, opts).sample_detail(rng);
}

WfMixtureCdf::WfMixtureCdf(const WrightFisherLaw& law, double tail_tol) {
  check_law(law);
  if (!(tail_tol > 0.0)) throw std::domain_error("WfMixtureCdf: tail_tol must be > 0");
  DeathProcessSeries series(DeathProcessLaw{law.theta1 + law.theta2, law.t});
  const int m_end = series.truncation_point(tail_tol);
  for (int m = 0; m <= m_end; ++m) {
    const double qm = series.pmf(m);
    if (qm <= 0.0) continue;
    for (int l = 0; l <= m; ++l) {
      const double w = qm * std::exp(log_binomial_pmf(l, m, law.x));
      if (w <= 0.0) continue;
      const double a = law.theta1 + l;
      const double b = law.theta2 + (m - l);
      if (a == 0.0)
        mass_at_zero_ += w;
      else if (b == 0.0)
        mass_at_one_ += w;
      else
        components_.push_back({w, a, b});
    }
  }
}

double WfMixtureCdf::operator()(double y) const {
  if (!(y >= 0.0) || !(y <= 1.0)) throw std::domain_error("WfMixtureCdf: y must be in [0,1]");
  if (y == 0.0) return mass_at_zero_;
  if (y == 1.0) return 1.0;
  double f = mass_at_zero_;
  for (const Component& c : components_) f += c.weight * beta_cdf(c.a, c.b, y);
  return std::min(f, 1.0);
}

double WfMixtureCdf::density(double y, double h) const {
  const double lo = std::max(0.0, y - h);
  const double hi = std::min(1.0, y + h);
  if (hi <= lo) return 0.0;
  return ((*this)(hi) - (*this)(lo)) / (hi - lo);
}

}  // namespace sphbm
