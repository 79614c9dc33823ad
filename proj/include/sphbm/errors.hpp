#ifndef SPHBM_ERRORS_HPP
#define SPHBM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sphbm {

/// Alternating-series machinery failed to converge (term cap hit or the
/// coefficient magnitudes overflow double precision). Expected only for
/// time horizons far below the exact-regime floor.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

/// The requested time horizon is below the exact-regime floor and the caller
/// did not opt into the Gaussian approximation.
class RegimeError : public std::domain_error {
 public:
  explicit RegimeError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace sphbm

#endif
