#pragma once

// Norm-level quantities on the harmonic Hardy space: coefficient norm and inner
// product, integral means (series and circle quadrature), the Littlewood-Paley
// area functional, and a sampled sup norm.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <string>
#include <vector>

#include "hdisc/harmonic_series.hpp"
#include "hdisc/quadrature.hpp"

namespace hdisc {

/// Which form of an identity a report checks. `paper_literal` is the formula as
/// usually stated; `corrected` adds the constant-term cross contribution
/// 2 Re(a_0 b_0) that the literal form drops.
enum class Variant { standard, paper_literal, corrected };

inline const char* to_string(Variant v) {
  switch (v) {
    case Variant::paper_literal:
      return "paper-literal";
    case Variant::corrected:
      return "corrected";
    case Variant::standard:
      break;
  }
  return "standard";
}

template <std::floating_point T>
struct IdentityReport {
  std::string name;
  T lhs = 0;
  T rhs = 0;
  T residual = 0;
  T rel_residual = 0;
  T tolerance = 0;
  bool passed = false;
  Variant variant = Variant::standard;
  /// Analytic difference between the two sides, when one is known.
  T gap = 0;
};

/// passed iff |lhs - rhs| / scale <= tolerance. A zero scale compares the raw
/// residual.
template <std::floating_point T>
IdentityReport<T> make_report(std::string name, T lhs, T rhs, T scale, T tolerance,
                              Variant variant = Variant::standard, T gap = 0) {
  IdentityReport<T> rep;
  rep.name = std::move(name);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.residual = std::abs(lhs - rhs);
  rep.rel_residual = scale > 0 ? rep.residual / scale : rep.residual;
  rep.tolerance = tolerance;
  rep.passed = rep.rel_residual <= tolerance;
  rep.variant = variant;
  rep.gap = gap;
  return rep;
}

/// Scale for a relative comparison: max(|lhs|, |rhs|).
template <std::floating_point T>
T magnitude(T lhs, T rhs) {
  return std::max(std::abs(lhs), std::abs(rhs));
}

namespace detail {

/// |a_n|^2 + |b_n|^2 for each n. Both parts enter each term symmetrically, so
/// swapping h and g leaves every addend bit-identical.
template <std::floating_point T>
std::vector<T> squared_moduli(const HarmonicSeries<T>& f) {
  const auto len = std::max(f.a().size(), f.b().size());
  std::vector<T> terms;
  terms.reserve(static_cast<std::size_t>(len));
  for (Eigen::Index n = 0; n < len; ++n) terms.push_back(std::norm(f.a(n)) + std::norm(f.b(n)));
  return terms;
}

}  // namespace detail

template <std::floating_point T>
T norm_squared(const HarmonicSeries<T>& f) {
  return stable_sum(detail::squared_moduli(f));
}

/// (sum |a_n|^2 + |b_n|^2)^(1/2)
template <std::floating_point T>
T norm(const HarmonicSeries<T>& f) {
  return std::sqrt(norm_squared(f));
}

/// Plain l2 norm of an interleaved sequence.
template <std::floating_point T>
T l2_norm(const L2Sequence<T>& s) {
  std::vector<T> terms;
  terms.reserve(static_cast<std::size_t>(s.c().size()));
  for (Eigen::Index k = 0; k < s.c().size(); ++k) terms.push_back(std::norm(s.c()(k)));
  return std::sqrt(stable_sum(terms));
}

/// <f, F> = sum a_n conj(A_n) + conj(b_n) B_n
template <std::floating_point T>
std::complex<T> inner_product(const HarmonicSeries<T>& f, const HarmonicSeries<T>& g) {
  std::vector<T> re;
  std::vector<T> im;
  const auto na = std::min(f.a().size(), g.a().size());
  const auto nb = std::min(f.b().size(), g.b().size());
  re.reserve(static_cast<std::size_t>(na + nb));
  im.reserve(static_cast<std::size_t>(na + nb));
  for (Eigen::Index n = 0; n < na; ++n) {
    const auto t = f.a()(n) * std::conj(g.a()(n));
    re.push_back(t.real());
    im.push_back(t.imag());
  }
  for (Eigen::Index n = 0; n < nb; ++n) {
    const auto t = std::conj(f.b()(n)) * g.b()(n);
    re.push_back(t.real());
    im.push_back(t.imag());
  }
  return {stable_sum(re), stable_sum(im)};
}

/// sum (|a_n|^2 + |b_n|^2) r^(2n), for 0 <= r <= 1. At r = 1 this is norm^2.
template <std::floating_point T>
T integral_mean_series(const HarmonicSeries<T>& f, T r) {
  if (!std::isfinite(r) || r < 0 || r > 1) {
    throw DomainError("integral_mean_series: r must lie in [0, 1]");
  }
  const auto len = std::max(f.a().size(), f.b().size());
  std::vector<T> terms;
  terms.reserve(static_cast<std::size_t>(len));
  T weight = 1;
  const T r2 = r * r;
  for (Eigen::Index n = 0; n < len; ++n) {
    terms.push_back((std::norm(f.a(n)) + std::norm(f.b(n))) * weight);
    weight *= r2;
  }
  return stable_sum(terms);
}

/// 2 Re(a_0 b_0): the constant Fourier mode of 2 Re(h g), which the circle
/// mean of |h + conj(g)|^2 picks up at every radius.
template <std::floating_point T>
T integral_mean_cross_term(const HarmonicSeries<T>& f) {
  return T(2) * (f.a(0) * f.b(0)).real();
}

/// Uniform-rule mean of |f(r e^{i theta})|^2. The integrand is a trigonometric
/// polynomial of degree <= 2 max_degree, so nodes >= 2 max_degree + 1 is exact.
template <std::floating_point T>
T integral_mean_quad(const HarmonicSeries<T>& f, T r, std::size_t nodes, Parallelism par = {}) {
  if (!std::isfinite(r) || r < 0 || r >= 1) {
    throw DomainError("integral_mean_quad: r must lie in [0, 1)");
  }
  if (nodes < 1) throw InvalidInput("integral_mean_quad: nodes must be >= 1");
  return circle_average<T>(
      [&](T theta) { return std::norm(evaluate(f, std::polar(r, theta))); }, nodes, par);
}

/// Smallest node count for which integral_mean_quad is exact on f.
template <std::floating_point T>
std::size_t exact_circle_nodes(const HarmonicSeries<T>& f) {
  return 2 * f.max_degree() + 1;
}

template <std::floating_point T>
struct VariantPair {
  IdentityReport<T> corrected;
  IdentityReport<T> paper_literal;
};

/// Circle-mean quadrature against the series, scaled by 1 + |series|.
/// The corrected variant includes integral_mean_cross_term.
template <std::floating_point T>
VariantPair<T> means_identity_check(const HarmonicSeries<T>& f, T r, std::size_t nodes, T tol,
                                    Parallelism par = {}) {
  const T quad = integral_mean_quad(f, r, nodes, par);
  const T series = integral_mean_series(f, r);
  const T cross = integral_mean_cross_term(f);
  return {make_report<T>("integral-means", quad, series + cross, 1 + std::abs(series + cross),
                         tol, Variant::corrected),
          make_report<T>("integral-means", quad, series, 1 + std::abs(series), tol,
                         Variant::paper_literal, cross)};
}

/// sum_{n >= 1} (|a_n|^2 + |b_n|^2)
template <std::floating_point T>
T lp_series(const HarmonicSeries<T>& f) {
  const auto len = std::max(f.a().size(), f.b().size());
  std::vector<T> terms;
  for (Eigen::Index n = 1; n < len; ++n) terms.push_back(std::norm(f.a(n)) + std::norm(f.b(n)));
  return stable_sum(terms);
}

/// Same quantity through the radial moments: 4 sum n^2 (|a_n|^2 + |b_n|^2) / (4 n^2).
template <std::floating_point T>
T lp_series_moment_form(const HarmonicSeries<T>& f) {
  const auto len = std::max(f.a().size(), f.b().size());
  std::vector<T> terms;
  for (Eigen::Index n = 1; n < len; ++n) {
    const T n2 = static_cast<T>(n) * static_cast<T>(n);
    const T moment = T(1) / (T(4) * n2);
    terms.push_back(T(4) * n2 * (std::norm(f.a(n)) + std::norm(f.b(n))) * moment);
  }
  return stable_sum(terms);
}

/// |h'(z)|^2 + |g'(z)|^2
template <std::floating_point T>
T derivative_density(const DerivativeParts<T>& d, const std::complex<T>& z) {
  return std::norm(evaluate(d.h_prime, z)) + std::norm(evaluate(d.g_prime, z));
}

/// 2 * integral over the disc of (|h'|^2 + |g'|^2) log(1/|z|) dA, dA = r dr dtheta / pi.
/// The angular integral reduces to 2 pi times a circle mean, giving
/// 4 * integral_0^1 mean(r) log(1/r) r dr.
template <std::floating_point T>
T lp_quad(const HarmonicSeries<T>& f, const QuadratureGrid<T>& grid, Parallelism par = {}) {
  validate(grid);
  const auto d = derivative_parts(f);
  if (d.h_prime.is_zero() && d.g_prime.is_zero()) return 0;
  const auto radial = [&](T r) {
    return circle_average<T>(
        [&](T theta) { return derivative_density(d, std::polar(r, theta)); }, grid.circle_nodes);
  };
  return T(4) * radial_log_integral<T>(radial, grid, par);
}

/// Corrected: norm^2 against |a_0|^2 + |b_0|^2 + lp_quad. Paper-literal: norm^2
/// against |f(0)|^2 + lp_quad, which is short by 2 Re(a_0 b_0).
template <std::floating_point T>
VariantPair<T> lp_identity_check(const HarmonicSeries<T>& f, const QuadratureGrid<T>& grid,
                                 T tol, Parallelism par = {}) {
  if (!(tol > 0)) throw InvalidInput("lp_identity_check: tol must be > 0");
  const T lhs = norm_squared(f);
  const T area = lp_quad(f, grid, par);
  const T constants = std::norm(f.a(0)) + std::norm(f.b(0));
  const T at_origin = std::norm(f.a(0) + std::conj(f.b(0)));
  const T corrected_rhs = constants + area;
  const T literal_rhs = at_origin + area;
  return {make_report<T>("littlewood-paley", lhs, corrected_rhs, magnitude(lhs, corrected_rhs),
                         tol, Variant::corrected),
          make_report<T>("littlewood-paley", lhs, literal_rhs, magnitude(lhs, literal_rhs), tol,
                         Variant::paper_literal, integral_mean_cross_term(f))};
}

/// max |f| over the uniform node set on |z| = r; a lower bound for sup |f|.
template <std::floating_point T>
T sup_estimate(const HarmonicSeries<T>& f, T r, std::size_t nodes, Parallelism par = {}) {
  if (!std::isfinite(r) || r < 0 || r >= 1) throw DomainError("sup_estimate: r must lie in [0, 1)");
  if (nodes < 1) throw InvalidInput("sup_estimate: nodes must be >= 1");
  const auto values = parallel_fill<T>(
      nodes,
      [&](std::size_t k) { return std::abs(evaluate(f, std::polar(r, circle_node<T>(k, nodes)))); },
      par);
  return *std::max_element(values.begin(), values.end());
}

}  // namespace hdisc
