#pragma once

// Deterministic integration primitives: compensated summation, the uniform
// circle rule, and a graded Gauss-Legendre rule for integrals against the
// weight log(1/r) r on (0, 1).
//
// Every reduction runs in a fixed index order. Samples may be computed on
// several threads, but they are always written into an indexed buffer first
// and summed serially, so results do not depend on the thread count.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include <Eigen/Core>

#include "hdisc/errors.hpp"

namespace hdisc {

/// Thread budget for sample evaluation. Reductions stay serial.
struct Parallelism {
  unsigned threads = 1;
};

/// out[i] = fn(i) for i in [0, count), split over par.threads workers.
/// fn must be safe to call concurrently.
template <typename T, typename Fn>
std::vector<T> parallel_fill(std::size_t count, Fn&& fn, Parallelism par = {}) {
  std::vector<T> out(count);
  const std::size_t workers =
      std::min<std::size_t>(std::max(1u, par.threads), std::max<std::size_t>(count, 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(count, lo + chunk);
      if (lo >= hi) break;
      pool.emplace_back([&out, &fn, lo, hi] {
        for (std::size_t i = lo; i < hi; ++i) out[i] = fn(i);
      });
    }
  }
  return out;
}

/// Neumaier's variant of Kahan summation. Handles addends larger than the
/// running sum, which plain Kahan does not.
template <std::floating_point T>
class CompensatedSum {
public:
  void add(T value) {
    const T t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  T value() const { return sum_ + compensation_; }

private:
  T sum_ = 0;
  T compensation_ = 0;
};

/// Compensated sum of `values` in the given order.
/// Throws InvalidInput on a non-finite entry.
template <std::floating_point T>
T stable_sum(std::span<const T> values) {
  CompensatedSum<T> acc;
  for (const T v : values) {
    if (!std::isfinite(v)) throw InvalidInput("stable_sum: non-finite addend");
    acc.add(v);
  }
  return acc.value();
}

template <std::floating_point T>
T stable_sum(const std::vector<T>& values) {
  return stable_sum(std::span<const T>(values));
}

/// k-th node of the uniform rule: -pi + 2 pi k / nodes.
template <std::floating_point T>
T circle_node(std::size_t k, std::size_t nodes) {
  return -std::numbers::pi_v<T> +
         T(2) * std::numbers::pi_v<T> * static_cast<T>(k) / static_cast<T>(nodes);
}

/// Mean of sample(theta) over the uniform node set on [-pi, pi). Exact up to
/// roundoff for trigonometric polynomials of degree < nodes.
template <std::floating_point T, typename Sample>
T circle_average(Sample&& sample, std::size_t nodes, Parallelism par = {}) {
  if (nodes < 1) throw InvalidInput("circle_average: nodes must be >= 1");
  const auto values = parallel_fill<T>(
      nodes, [&](std::size_t k) { return static_cast<T>(sample(circle_node<T>(k, nodes))); },
      par);
  for (const T v : values) {
    if (!std::isfinite(v)) throw InvalidInput("circle_average: non-finite sample");
  }
  return stable_sum(std::span<const T>(values)) / static_cast<T>(nodes);
}

/// Gauss-Legendre rule mapped to [0, 1].
template <std::floating_point T>
struct GaussLegendreRule {
  Eigen::Array<T, Eigen::Dynamic, 1> nodes;
  Eigen::Array<T, Eigen::Dynamic, 1> weights;
};

/// Newton iteration on the three-term recurrence, carried out in long double.
template <std::floating_point T>
GaussLegendreRule<T> gauss_legendre(std::size_t order) {
  if (order < 1) throw InvalidInput("gauss_legendre: order must be >= 1");
  using W = long double;
  const auto n = static_cast<int>(order);
  GaussLegendreRule<T> rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    W x = std::cos(std::numbers::pi_v<W> * (static_cast<W>(i) + W(0.75)) /
                   (static_cast<W>(n) + W(0.5)));
    W dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      W p0 = 1;
      W p1 = x;
      for (int k = 2; k <= n; ++k) {
        const W p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<W>(n) * (x * p1 - p0) / (x * x - 1);
      const W dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= std::numeric_limits<W>::epsilon() * 4) break;
    }
    // Recompute the derivative at the converged node.
    {
      W p0 = 1;
      W p1 = x;
      for (int k = 2; k <= n; ++k) {
        const W p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<W>(n) * (x * p1 - p0) / (x * x - 1);
    }
    const W w = 2 / ((1 - x * x) * dp * dp);
    // Nodes ascending on [0, 1]; x is the i-th largest root.
    rule.nodes(n - 1 - i) = static_cast<T>((1 + x) / 2);
    rule.nodes(i) = static_cast<T>((1 - x) / 2);
    rule.weights(n - 1 - i) = static_cast<T>(w / 2);
    rule.weights(i) = static_cast<T>(w / 2);
  }
  return rule;
}

/// Circle node count plus graded radial panels for area integrals on the disc.
/// Panel k spans [(k/P)^g, ((k+1)/P)^g], clustering toward the log singularity
/// at r = 0.
template <std::floating_point T>
struct QuadratureGrid {
  std::size_t circle_nodes = 2;
  std::size_t radial_panels = 32;
  std::size_t panel_order = 16;
  T grading_exponent = 3;
};

template <std::floating_point T>
void validate(const QuadratureGrid<T>& grid) {
  if (grid.circle_nodes < 1) throw InvalidInput("grid: circle_nodes must be >= 1");
  if (grid.radial_panels < 1) throw InvalidInput("grid: radial_panels must be >= 1");
  if (grid.panel_order < 1) throw InvalidInput("grid: panel_order must be >= 1");
  if (!std::isfinite(grid.grading_exponent) || grid.grading_exponent < 1) {
    throw InvalidInput("grid: grading_exponent must be finite and >= 1");
  }
}

/// 32 panels of order 16, grading 3; circle_nodes = 2 max_degree + 2.
template <std::floating_point T>
QuadratureGrid<T> default_grid(std::size_t max_degree = 0) {
  return QuadratureGrid<T>{2 * max_degree + 2, 32, 16, T(3)};
}

template <std::floating_point T>
Eigen::Array<T, Eigen::Dynamic, 1> panel_breakpoints(const QuadratureGrid<T>& grid) {
  validate(grid);
  const auto panels = static_cast<Eigen::Index>(grid.radial_panels);
  Eigen::Array<T, Eigen::Dynamic, 1> t(panels + 1);
  for (Eigen::Index k = 0; k <= panels; ++k) {
    t(k) = std::pow(static_cast<T>(k) / static_cast<T>(panels), grid.grading_exponent);
  }
  t(panels) = 1;
  return t;
}

/// log(1/r) for r in (0, 1], accurate near r = 1.
template <std::floating_point T>
T log_inverse(T r) {
  return r > T(0.5) ? -std::log1p(r - T(1)) : -std::log(r);
}

/// Radial node r_j together with its full weight w_j log(1/r_j) r_j.
template <std::floating_point T>
struct RadialNodes {
  std::vector<T> radii;
  std::vector<T> weights;
};

template <std::floating_point T>
RadialNodes<T> radial_log_nodes(const QuadratureGrid<T>& grid) {
  const auto breaks = panel_breakpoints(grid);
  const auto rule = gauss_legendre<T>(grid.panel_order);
  RadialNodes<T> out;
  out.radii.reserve(grid.radial_panels * grid.panel_order);
  out.weights.reserve(grid.radial_panels * grid.panel_order);
  for (Eigen::Index p = 0; p + 1 < breaks.size(); ++p) {
    const T lo = breaks(p);
    const T width = breaks(p + 1) - lo;
    for (Eigen::Index j = 0; j < rule.nodes.size(); ++j) {
      const T r = lo + width * rule.nodes(j);
      out.radii.push_back(r);
      out.weights.push_back(width * rule.weights(j) * log_inverse(r) * r);
    }
  }
  return out;
}

/// Approximates the integral of g(r) log(1/r) r over (0, 1). Never samples the
/// endpoints. Throws InvalidInput on a non-finite sample.
template <std::floating_point T, typename Radial>
T radial_log_integral(Radial&& g, const QuadratureGrid<T>& grid, Parallelism par = {}) {
  const auto nodes = radial_log_nodes(grid);
  const auto terms = parallel_fill<T>(
      nodes.radii.size(),
      [&](std::size_t j) { return nodes.weights[j] * static_cast<T>(g(nodes.radii[j])); },
      par);
  for (const T v : terms) {
    if (!std::isfinite(v)) throw InvalidInput("radial_log_integral: non-finite sample");
  }
  return stable_sum(std::span<const T>(terms));
}

}  // namespace hdisc
