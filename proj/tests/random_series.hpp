#pragma once

// Hand-rolled generators for property tests, independent of the library's
// fixture generator.

#include <complex>
#include <cstddef>
#include <random>

#include "hdisc/harmonic_series.hpp"

namespace prop {

using Complex = std::complex<double>;
using Series = hdisc::HarmonicSeries<double>;

class Gen {
public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Complex complex(double scale = 1.0) { return {uniform(-scale, scale), uniform(-scale, scale)}; }

  /// Uniform in the disc of radius rmax.
  Complex point(double rmax) {
    const double r = rmax * std::sqrt(uniform(0.0, 1.0));
    return std::polar(r, uniform(-3.141592653589793, 3.141592653589793));
  }

  /// Random series with degrees up to max_degree in each part (possibly empty parts).
  Series series(std::size_t max_degree) {
    const auto na = static_cast<Eigen::Index>(index(0, max_degree + 1));
    const auto nb = static_cast<Eigen::Index>(index(0, max_degree + 1));
    hdisc::CoefficientVector<double> a(na);
    hdisc::CoefficientVector<double> b(nb);
    for (Eigen::Index n = 0; n < na; ++n) a(n) = complex() / (1.0 + 0.1 * n);
    for (Eigen::Index n = 0; n < nb; ++n) b(n) = complex() / (1.0 + 0.1 * n);
    return {a, b};
  }

private:
  std::mt19937_64 rng_;
};

}  // namespace prop
