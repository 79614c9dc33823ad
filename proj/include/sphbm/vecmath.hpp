#ifndef SPHBM_VECMATH_HPP
#define SPHBM_VECMATH_HPP

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace sphbm {

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(std::span<const double> a) { return std::sqrt(dot(a, a)); }

inline void scale_inplace(std::vector<double>& a, double c) {
  for (double& x : a) x *= c;
}

/// Rescales to unit Euclidean norm; returns the norm it found.
inline double normalize_inplace(std::vector<double>& a) {
  const double n = norm(a);
  if (n > 0.0) scale_inplace(a, 1.0 / n);
  return n;
}

}  // namespace sphbm

#endif
