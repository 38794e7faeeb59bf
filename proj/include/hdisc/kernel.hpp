#pragma once

// Reproducing kernel K_alpha(z) = 1/(1 - conj(alpha) z) + 1/(1 - alpha conj(z)),
// its truncations, and the pointwise growth estimate.

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <limits>

#include "hdisc/harmonic_series.hpp"
#include "hdisc/space_ops.hpp"

namespace hdisc {

/// A point strictly inside the unit disc.
template <std::floating_point T>
class KernelPoint {
public:
  explicit KernelPoint(std::complex<T> alpha) : alpha_(alpha) {
    require_in_disc(alpha, "KernelPoint");
  }

  const std::complex<T>& alpha() const noexcept { return alpha_; }

  /// 1 - |alpha|^2, without cancellation near the boundary.
  T defect() const {
    const T m = std::abs(alpha_);
    return (T(1) - m) * (T(1) + m);
  }

private:
  std::complex<T> alpha_;
};

template <std::floating_point T>
std::complex<T> kernel_eval(const KernelPoint<T>& p, const std::complex<T>& z) {
  require_in_disc(z, "kernel_eval");
  const auto& a = p.alpha();
  const std::complex<T> one(1);
  return one / (one - std::conj(a) * z) + one / (one - a * std::conj(z));
}

/// a_n = b_n = conj(alpha)^n for n = 0..degree. Then
/// <f, K> = sum a_n alpha^n + conj(b_n alpha^n) = f(alpha).
template <std::floating_point T>
HarmonicSeries<T> kernel_series(const KernelPoint<T>& p, std::size_t degree) {
  CoefficientVector<T> c(static_cast<Eigen::Index>(degree + 1));
  const auto base = std::conj(p.alpha());
  std::complex<T> power(1);
  for (Eigen::Index n = 0; n < c.size(); ++n) {
    c(n) = power;
    power *= base;
  }
  return {c, c};
}

/// ||K_alpha|| = sqrt(2 / (1 - |alpha|^2))
template <std::floating_point T>
T kernel_norm(const KernelPoint<T>& p) {
  return std::sqrt(T(2) / p.defect());
}

/// ||K_alpha||^2 - ||kernel_series(p, degree)||^2 = 2 |alpha|^(2 degree + 2) / (1 - |alpha|^2).
template <std::floating_point T>
T kernel_tail(const KernelPoint<T>& p, std::size_t degree) {
  const T m2 = std::norm(p.alpha());
  if (m2 == 0) return 0;
  return T(2) * std::pow(m2, static_cast<T>(degree + 1)) / p.defect();
}

/// Smallest degree whose per-part kernel tail |alpha|^(2 degree + 2) / (1 - |alpha|^2)
/// is at most `tail`.
template <std::floating_point T>
std::size_t sufficient_degree(const KernelPoint<T>& p, T tail = T(1e-10)) {
  const T m2 = std::norm(p.alpha());
  if (m2 == 0) return 0;
  const T needed = std::log(tail * p.defect()) / std::log(m2) - T(1);
  std::size_t d = needed > 0 ? static_cast<std::size_t>(std::ceil(needed)) : 0;
  while (kernel_tail(p, d) / 2 > tail) ++d;
  return d;
}

/// <f, K_alpha^(D)> against f(alpha) with D = max_degree(f), scaled by 1 + |f(alpha)|.
/// Exact for polynomial f up to roundoff.
template <std::floating_point T>
IdentityReport<T> reproduce_check(const HarmonicSeries<T>& f, const KernelPoint<T>& p,
                                  T tol = T(1e-12)) {
  const auto k = kernel_series(p, f.max_degree());
  const auto lhs = inner_product(f, k);
  const auto rhs = evaluate(f, p.alpha());
  auto rep = make_report<T>("reproduction", lhs.real(), rhs.real(), 1 + std::abs(rhs), tol);
  rep.residual = std::abs(lhs - rhs);
  rep.rel_residual = rep.residual / (1 + std::abs(rhs));
  rep.passed = rep.rel_residual <= tol;
  return rep;
}

template <std::floating_point T>
struct GrowthRecord {
  std::complex<T> z;
  T value = 0;
  T bound = 0;
  T slack = 0;
  bool passed = false;
};

/// |f(z)| against 2 ||f|| / sqrt(1 - |z|^2).
template <std::floating_point T>
GrowthRecord<T> growth_bound(const HarmonicSeries<T>& f, const std::complex<T>& z) {
  require_in_disc(z, "growth_bound");
  GrowthRecord<T> rec;
  rec.z = z;
  rec.value = std::abs(evaluate(f, z));
  const T m = std::abs(z);
  rec.bound = T(2) * norm(f) / std::sqrt((T(1) - m) * (T(1) + m));
  rec.slack = rec.bound - rec.value;
  rec.passed = rec.slack >= -T(1e-12) * rec.bound;
  return rec;
}

/// |K(alpha)| sqrt(1 - |alpha|^2) / (2 ||K||) for K = kernel_series(p, degree).
/// Tends to 1/sqrt(2): the kernel attains only that fraction of the growth bound.
/// Requires the truncation tail |alpha|^(2 degree + 2) / (1 - |alpha|^2) <= 1e-10.
template <std::floating_point T>
T sharpness_probe(const KernelPoint<T>& p, std::size_t degree) {
  if (kernel_tail(p, degree) / 2 > T(1e-10)) {
    throw InvalidInput("sharpness_probe: degree too small for kernel tail <= 1e-10");
  }
  const auto k = kernel_series(p, degree);
  return std::abs(evaluate(k, p.alpha())) * std::sqrt(p.defect()) / (T(2) * norm(k));
}

}  // namespace hdisc
