#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>

#include "hdisc/harmonic_series.hpp"
#include "oracles.hpp"
#include "random_series.hpp"

using Complex = std::complex<double>;
using Series = hdisc::HarmonicSeries<double>;
using hdisc::evaluate;

namespace {

bool close(Complex x, Complex y, double rel) { return std::abs(x - y) <= rel * std::max(1.0, std::abs(y)); }

}  // namespace

TEST_CASE("construction trims trailing zeros and rejects non-finite entries") {
  const Series f({1.0, 0.0, 0.0}, {0.0});
  CHECK(f.a().size() == 1);
  CHECK(f.b().size() == 0);
  CHECK(f == Series({1.0}, {}));
  CHECK(Series().is_zero());
  CHECK(Series({0.0}, {0.0, 0.0}).is_zero());
  CHECK(Series({0.0, 2.0}, {}).max_degree() == 1);
  CHECK(Series().max_degree() == 0);
  CHECK_THROWS_AS(Series({Complex(NAN, 0)}, {}), hdisc::InvalidInput);
  CHECK_THROWS_AS(Series({}, {Complex(0, INFINITY)}), hdisc::InvalidInput);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(Series({1.0}, {}), Complex(0.3, 0)) == Complex(1, 0));
  const Series two_re({0.0, 1.0}, {0.0, 1.0});
  CHECK(std::abs(evaluate(two_re, Complex(0, 0.5))) == 0.0);
  const Complex z(0.25, 0.25);
  const Complex v = evaluate(two_re, z);
  CHECK(v == Complex(0.5, 0));
  CHECK(close(v, oracle::evaluate(two_re, z), 1e-15));
}

TEST_CASE("evaluate domain errors") {
  const Series f({1.0, 2.0}, {3.0});
  CHECK_THROWS_AS(evaluate(f, Complex(1, 0)), hdisc::DomainError);
  CHECK_THROWS_AS(evaluate(f, Complex(0.8, 0.8)), hdisc::DomainError);
  CHECK_THROWS_AS(evaluate(f, Complex(NAN, 0)), hdisc::InvalidInput);
  CHECK_THROWS_AS(evaluate(f, Complex(0, INFINITY)), hdisc::InvalidInput);
}

TEST_CASE("evaluate agrees with direct power summation") {
  prop::Gen gen(7);
  for (int t = 0; t < 200; ++t) {
    const auto f = gen.series(40);
    const auto z = gen.point(0.9);
    CHECK(close(evaluate(f, z), oracle::evaluate(f, z), 1e-12));
  }
}

TEST_CASE("add examples") {
  CHECK(hdisc::add(Series({1.0}, {}), Series({-1.0}, {})).is_zero());
  CHECK(hdisc::add(Series({0.0, 1.0}, {}), Series({}, {0.0, 1.0})) == Series({0.0, 1.0}, {0.0, 1.0}));
  CHECK(hdisc::add(Series({1.0, 2.0}, {3.0}), Series({0.0, 0.0, 5.0}, {0.0, 1.0})) ==
        Series({1.0, 2.0, 5.0}, {3.0, 1.0}));
}

TEST_CASE("scale examples") {
  prop::Gen gen(11);
  const auto f = gen.series(10);
  CHECK(hdisc::scale(f, Complex(1, 0)) == f);
  CHECK(hdisc::scale(f, Complex(0, 0)).is_zero());
  const Series g({0.0, 1.0}, {0.0, 1.0});
  const auto s = hdisc::scale(g, Complex(0, 1));
  CHECK(close(evaluate(s, Complex(0.5, 0)), Complex(0, 1), 1e-15));
  for (int k = 0; k < 16; ++k) {
    const Complex z = gen.point(0.9);
    CHECK(close(evaluate(s, z), Complex(0, 1) * evaluate(g, z), 1e-14));
  }
  CHECK_THROWS_AS(hdisc::scale(g, Complex(NAN, 0)), hdisc::InvalidInput);
}

TEST_CASE("property: linearity of evaluation") {
  prop::Gen gen(13);
  for (int t = 0; t < 300; ++t) {
    const auto f = gen.series(32);
    const auto g = gen.series(32);
    const Complex alpha = gen.complex(2.0);
    const Complex z = gen.point(0.9);
    const Complex fz = evaluate(f, z);
    const Complex gz = evaluate(g, z);
    CHECK(std::abs(evaluate(hdisc::add(f, g), z) - (fz + gz)) <=
          1e-12 * std::max({1.0, std::abs(fz), std::abs(gz)}));
    CHECK(std::abs(evaluate(hdisc::scale(f, alpha), z) - alpha * fz) <=
          1e-12 * std::max(1.0, std::abs(alpha * fz)));
  }
}

TEST_CASE("swap_parts") {
  const auto s = hdisc::swap_parts(Series({1.0}, {}));
  CHECK(s == Series({}, {1.0}));
  const Series real_f({0.5, 1.0, -2.0}, {0.5, 1.0, -2.0});
  CHECK(hdisc::swap_parts(real_f) == real_f);
  const auto t = hdisc::swap_parts(Series({0.0, Complex(0, 1)}, {}));
  CHECK(close(evaluate(t, Complex(0.5, 0)), Complex(0, -0.5), 1e-15));

  prop::Gen gen(17);
  for (int k = 0; k < 200; ++k) {
    const auto f = gen.series(24);
    const Complex z = gen.point(0.95);
    CHECK(std::abs(evaluate(hdisc::swap_parts(f), z) - std::conj(evaluate(f, z))) <=
          1e-12 * std::max(1.0, std::abs(evaluate(f, z))));
  }
}

TEST_CASE("derivative_parts") {
  const auto c = hdisc::derivative_parts(Series({5.0}, {7.0}));
  CHECK(c.h_prime.is_zero());
  CHECK(c.g_prime.is_zero());
  const auto z = hdisc::derivative_parts(Series({0.0, 1.0}, {}));
  CHECK(z.h_prime == Series({1.0}, {}));
  CHECK(z.g_prime.is_zero());
  const auto d = hdisc::derivative_parts(Series({0.0, 0.0, 3.0}, {0.0, 2.0}));
  CHECK(d.h_prime == Series({0.0, 6.0}, {}));
  CHECK(d.g_prime == Series({2.0}, {}));

  for (int k = 1; k <= 20; ++k) {
    hdisc::CoefficientVector<double> a = hdisc::CoefficientVector<double>::Zero(k + 1);
    a(k) = 1;
    const auto dk = hdisc::derivative_parts(Series(a, {}));
    REQUIRE(dk.h_prime.a().size() == k);
    CHECK(dk.h_prime.a()(k - 1) == Complex(k, 0));
    CHECK(dk.h_prime.b().size() == 0);
  }
}

TEST_CASE("derivative_parts matches a finite-difference oracle") {
  prop::Gen gen(19);
  for (int t = 0; t < 50; ++t) {
    const auto f = gen.series(12);
    const auto d = hdisc::derivative_parts(f);
    const Complex z = gen.point(0.7);
    const double h = 1e-5;
    const auto h_part = [&](Complex w) { return oracle::evaluate(Series(f.a(), {}), w); };
    const Complex fd = (h_part(z + h) - h_part(z - h)) / (2 * h);
    CHECK(std::abs(evaluate(d.h_prime, z) - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
  }
}

TEST_CASE("interleave and deinterleave") {
  CHECK(hdisc::interleave(Series({1.0}, {})) == hdisc::L2Sequence<double>({1.0}));
  CHECK(hdisc::interleave(Series({1.0, 3.0}, {2.0, 4.0})) ==
        hdisc::L2Sequence<double>({1.0, 2.0, 3.0, 4.0}));
  CHECK(hdisc::deinterleave(hdisc::L2Sequence<double>({1.0})) == Series({1.0}, {}));
  CHECK(hdisc::deinterleave(hdisc::L2Sequence<double>({1.0, 2.0, 3.0, 4.0})) ==
        Series({1.0, 3.0}, {2.0, 4.0}));
  const auto s = hdisc::deinterleave(hdisc::L2Sequence<double>({0.0, 5.0}));
  CHECK(s.a().size() == 0);
  CHECK(s == Series({}, {5.0}));
  CHECK(hdisc::interleave(Series()).c().size() == 0);
}

TEST_CASE("property: interleave round trip is exact") {
  prop::Gen gen(23);
  for (int t = 0; t < 500; ++t) {
    const auto f = gen.series(64);
    CHECK(hdisc::deinterleave(hdisc::interleave(f)) == f);
  }
}
