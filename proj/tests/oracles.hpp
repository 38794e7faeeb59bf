#pragma once

// Reference computations for the tests. These deliberately avoid the library's
// evaluation paths: direct powers instead of Horner, long double accumulation
// instead of compensated sums, dense midpoint rules instead of the uniform and
// Gauss rules under test.

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hdisc/harmonic_series.hpp"

namespace oracle {

using Complex = std::complex<double>;
using LComplex = std::complex<long double>;

inline LComplex direct_power_sum(const hdisc::CoefficientVector<double>& c, LComplex z) {
  LComplex acc = 0;
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    acc += LComplex(c(n).real(), c(n).imag()) * std::pow(z, static_cast<int>(n));
  }
  return acc;
}

/// sum a_n z^n + conj(sum b_n z^n) with explicit powers in long double.
inline Complex evaluate(const hdisc::HarmonicSeries<double>& f, Complex z) {
  const LComplex zl(z.real(), z.imag());
  const LComplex v = direct_power_sum(f.a(), zl) + std::conj(direct_power_sum(f.b(), zl));
  return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

/// (1 / 2 pi) integral of |f(r e^{i theta})|^2 by a dense midpoint rule in long double.
inline double fine_circle_mean(const hdisc::HarmonicSeries<double>& f, double r,
                               std::size_t points = 20000) {
  long double acc = 0;
  for (std::size_t k = 0; k < points; ++k) {
    const double theta = -std::numbers::pi + 2 * std::numbers::pi * (k + 0.5) / points;
    acc += std::norm(evaluate(f, std::polar(r, theta)));
  }
  return static_cast<double>(acc / points);
}

inline double fine_circle_mean(const std::function<double(double)>& g, std::size_t points = 20000) {
  long double acc = 0;
  for (std::size_t k = 0; k < points; ++k) {
    acc += g(-std::numbers::pi + 2 * std::numbers::pi * (k + 0.5) / points);
  }
  return static_cast<double>(acc / points);
}

/// Exact sum of doubles as a rational, rounded once at the end.
inline double exact_sum(const std::vector<double>& values) {
  using boost::multiprecision::cpp_rational;
  cpp_rational acc = 0;
  for (const double v : values) acc += cpp_rational(v);
  return static_cast<double>(acc);
}

/// Naive left-to-right sum.
inline double naive_sum(const std::vector<double>& values) {
  double acc = 0;
  for (const double v : values) acc += v;
  return acc;
}

/// Brute-force sum over coefficient slots, long double.
inline double norm_squared(const hdisc::HarmonicSeries<double>& f) {
  long double acc = 0;
  for (Eigen::Index n = 0; n < f.a().size(); ++n) acc += std::norm(LComplex(f.a()(n)));
  for (Eigen::Index n = 0; n < f.b().size(); ++n) acc += std::norm(LComplex(f.b()(n)));
  return static_cast<double>(acc);
}

/// 2 sum |alpha|^(2n) for n = 0..degree, the squared norm of a truncated kernel.
inline double geometric_kernel_norm2(double abs_alpha, std::size_t degree) {
  long double acc = 0;
  long double p = 1;
  for (std::size_t n = 0; n <= degree; ++n) {
    acc += 2 * p;
    p *= static_cast<long double>(abs_alpha) * abs_alpha;
  }
  return static_cast<double>(acc);
}

}  // namespace oracle
