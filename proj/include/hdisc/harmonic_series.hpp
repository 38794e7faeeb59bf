#pragma once

// Truncated complex-valued harmonic functions f = h + conj(g) on the unit disc,
// stored as the Taylor coefficients a_n of h and b_n of g.

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <utility>

#include <Eigen/Core>

#include "hdisc/errors.hpp"

namespace hdisc {

template <std::floating_point T>
using CoefficientVector = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, 1>;

template <std::floating_point T>
bool is_finite(const std::complex<T>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

namespace detail {

template <std::floating_point T>
void require_finite(const CoefficientVector<T>& c, const char* what) {
  for (Eigen::Index i = 0; i < c.size(); ++i) {
    if (!is_finite(c(i))) throw InvalidInput(std::string(what) + ": non-finite coefficient");
  }
}

/// Drops trailing exact zeros.
template <std::floating_point T>
CoefficientVector<T> trimmed(CoefficientVector<T> c) {
  Eigen::Index n = c.size();
  while (n > 0 && c(n - 1) == std::complex<T>(0)) --n;
  c.conservativeResize(n);
  return c;
}

template <std::floating_point T>
CoefficientVector<T> padded(const CoefficientVector<T>& c, Eigen::Index n) {
  CoefficientVector<T> out = CoefficientVector<T>::Zero(n);
  out.head(c.size()) = c;
  return out;
}

template <std::floating_point T>
CoefficientVector<T> from_list(std::initializer_list<std::complex<T>> values) {
  CoefficientVector<T> c(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& v : values) c(i++) = v;
  return c;
}

template <std::floating_point T>
bool same(const CoefficientVector<T>& x, const CoefficientVector<T>& y) {
  return x.size() == y.size() && (x.size() == 0 || (x.array() == y.array()).all());
}

/// Horner evaluation of sum c_n z^n.
template <std::floating_point T>
std::complex<T> horner(const CoefficientVector<T>& c, const std::complex<T>& z) {
  std::complex<T> acc(0);
  for (Eigen::Index n = c.size(); n-- > 0;) acc = acc * z + c(n);
  return acc;
}

}  // namespace detail

/// f = h + conj(g) with h = sum a_n z^n and g = sum b_n z^n. Always canonical:
/// entries finite and no trailing exact zeros in either part. Empty parts are
/// the zero function.
template <std::floating_point T>
class HarmonicSeries {
public:
  using Scalar = T;
  using Complex = std::complex<T>;
  using Coefficients = CoefficientVector<T>;

  HarmonicSeries() = default;

  HarmonicSeries(Coefficients a, Coefficients b) {
    detail::require_finite(a, "HarmonicSeries");
    detail::require_finite(b, "HarmonicSeries");
    a_ = detail::trimmed(std::move(a));
    b_ = detail::trimmed(std::move(b));
  }

  HarmonicSeries(std::initializer_list<Complex> a, std::initializer_list<Complex> b)
      : HarmonicSeries(detail::from_list<T>(a), detail::from_list<T>(b)) {}

  const Coefficients& a() const noexcept { return a_; }
  const Coefficients& b() const noexcept { return b_; }

  Complex a(Eigen::Index n) const { return n < a_.size() ? a_(n) : Complex(0); }
  Complex b(Eigen::Index n) const { return n < b_.size() ? b_(n) : Complex(0); }

  /// Highest stored power in either part; 0 for constants and the zero series.
  std::size_t max_degree() const noexcept {
    const auto len = std::max(a_.size(), b_.size());
    return len > 0 ? static_cast<std::size_t>(len - 1) : 0;
  }

  bool is_zero() const noexcept { return a_.size() == 0 && b_.size() == 0; }

  friend bool operator==(const HarmonicSeries& x, const HarmonicSeries& y) {
    return detail::same(x.a_, y.a_) && detail::same(x.b_, y.b_);
  }

private:
  Coefficients a_;
  Coefficients b_;
};

/// Interleaved coefficient sequence c_0 = a_0, c_1 = b_0, c_2 = a_1, ...
template <std::floating_point T>
class L2Sequence {
public:
  using Coefficients = CoefficientVector<T>;

  L2Sequence() = default;

  explicit L2Sequence(Coefficients c) {
    detail::require_finite(c, "L2Sequence");
    c_ = detail::trimmed(std::move(c));
  }

  L2Sequence(std::initializer_list<std::complex<T>> c) : L2Sequence(detail::from_list<T>(c)) {}

  const Coefficients& c() const noexcept { return c_; }

  friend bool operator==(const L2Sequence& x, const L2Sequence& y) {
    return detail::same(x.c_, y.c_);
  }

private:
  Coefficients c_;
};

template <std::floating_point T>
void require_in_disc(const std::complex<T>& z, const char* what) {
  if (!is_finite(z)) throw InvalidInput(std::string(what) + ": non-finite point");
  if (std::abs(z) >= T(1)) throw DomainError(std::string(what) + ": point not in the open disc");
}

/// h(z) + conj(g(z)), each part by Horner. Requires |z| < 1.
template <std::floating_point T>
std::complex<T> evaluate(const HarmonicSeries<T>& f, const std::complex<T>& z) {
  require_in_disc(z, "evaluate");
  return detail::horner(f.a(), z) + std::conj(detail::horner(f.b(), z));
}

template <std::floating_point T>
HarmonicSeries<T> add(const HarmonicSeries<T>& f, const HarmonicSeries<T>& g) {
  const auto na = std::max(f.a().size(), g.a().size());
  const auto nb = std::max(f.b().size(), g.b().size());
  return {detail::padded(f.a(), na) + detail::padded(g.a(), na),
          detail::padded(f.b(), nb) + detail::padded(g.b(), nb)};
}

/// Pointwise scaling: a_n -> s a_n and b_n -> conj(s) b_n, so that
/// evaluate(scale(f, s), z) = s evaluate(f, z).
template <std::floating_point T>
HarmonicSeries<T> scale(const HarmonicSeries<T>& f, const std::complex<T>& s) {
  if (!is_finite(s)) throw InvalidInput("scale: non-finite scalar");
  return {f.a() * s, f.b() * std::conj(s)};
}

template <std::floating_point T>
HarmonicSeries<T> subtract(const HarmonicSeries<T>& f, const HarmonicSeries<T>& g) {
  return add(f, scale(g, std::complex<T>(-1)));
}

/// Exchanges h and g; the result evaluates to conj(f).
template <std::floating_point T>
HarmonicSeries<T> swap_parts(const HarmonicSeries<T>& f) {
  return {f.b(), f.a()};
}

/// Taylor coefficients of h' and g', each returned as an analytic-only series.
template <std::floating_point T>
struct DerivativeParts {
  HarmonicSeries<T> h_prime;
  HarmonicSeries<T> g_prime;
};

namespace detail {

template <std::floating_point T>
CoefficientVector<T> differentiated(const CoefficientVector<T>& c) {
  if (c.size() <= 1) return {};
  CoefficientVector<T> d(c.size() - 1);
  for (Eigen::Index k = 0; k < d.size(); ++k) d(k) = static_cast<T>(k + 1) * c(k + 1);
  return d;
}

}  // namespace detail

template <std::floating_point T>
DerivativeParts<T> derivative_parts(const HarmonicSeries<T>& f) {
  return {HarmonicSeries<T>(detail::differentiated(f.a()), {}),
          HarmonicSeries<T>(detail::differentiated(f.b()), {})};
}

/// c_{2n} = a_n, c_{2n+1} = b_n.
template <std::floating_point T>
L2Sequence<T> interleave(const HarmonicSeries<T>& f) {
  const auto len = std::max(f.a().size(), f.b().size());
  CoefficientVector<T> c = CoefficientVector<T>::Zero(2 * len);
  for (Eigen::Index n = 0; n < len; ++n) {
    c(2 * n) = f.a(n);
    c(2 * n + 1) = f.b(n);
  }
  return L2Sequence<T>(std::move(c));
}

template <std::floating_point T>
HarmonicSeries<T> deinterleave(const L2Sequence<T>& s) {
  const auto& c = s.c();
  const Eigen::Index len = (c.size() + 1) / 2;
  CoefficientVector<T> a = CoefficientVector<T>::Zero(len);
  CoefficientVector<T> b = CoefficientVector<T>::Zero(len);
  for (Eigen::Index k = 0; k < c.size(); ++k) {
    if (k % 2 == 0) {
      a(k / 2) = c(k);
    } else {
      b(k / 2) = c(k);
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace hdisc
