#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "hdisc/errors.hpp"
#include "hdisc/generate.hpp"
#include "hdisc/space_ops.hpp"

using namespace hdisc;

#ifndef HDISC_TEST_DATA
#error "HDISC_TEST_DATA must point at tests/data"
#endif

TEST_CASE("degree zero polynomial mode is a constant") {
  const auto f = generate(GeneratorSpec{9, 0, 1.0, GeneratorMode::polynomial, false});
  CHECK(f.max_degree() == 0);
  CHECK(f.a().size() <= 1);
  CHECK(f.b().size() <= 1);
  CHECK(lp_series(f) == 0.0);
}

TEST_CASE("generation is deterministic") {
  for (const auto mode : {GeneratorMode::polynomial, GeneratorMode::geometric_decay, GeneratorMode::uniform_ball}) {
    const GeneratorSpec spec{123, 40, 0.7, mode, false};
    CHECK(generate(spec) == generate(spec));
    GeneratorSpec other = spec;
    other.seed = 124;
    CHECK_FALSE(generate(other) == generate(spec));
  }
  CHECK(fixture_family(3, 10, 64) == fixture_family(3, 10, 64));
}

TEST_CASE("normalized specs zero b0") {
  const auto f = generate(GeneratorSpec{1, 5, 0.5, GeneratorMode::geometric_decay, true});
  CHECK(f.b(0) == std::complex<double>(0));
  for (const auto& g : fixture_family(2, 20, 32, true)) CHECK(g.b(0) == std::complex<double>(0));
}

TEST_CASE("fixture_specs degree range") {
  const auto specs = fixture_specs(5, 50, 64);
  CHECK(specs[0].max_degree == 64);
  for (const auto& s : specs) {
    CHECK(s.max_degree >= 1);
    CHECK(s.max_degree <= 64);
    CHECK_NOTHROW(validate(s));
  }
}

TEST_CASE("invalid specs") {
  CHECK_THROWS_AS(generate(GeneratorSpec{0, 4, -1.0, GeneratorMode::polynomial, false}), InvalidInput);
  CHECK_THROWS_AS(generate(GeneratorSpec{0, 4, 1.0, GeneratorMode::geometric_decay, false}), InvalidInput);
  CHECK_THROWS_AS(generate(GeneratorSpec{0, 4, NAN, GeneratorMode::uniform_ball, false}), InvalidInput);
  CHECK_THROWS_AS(parse_mode("gaussian"), InvalidInput);
}

TEST_CASE("envelopes and model tail") {
  const GeneratorSpec geo{0, 10, 0.5, GeneratorMode::geometric_decay, false};
  CHECK(envelope(geo, 3) == 0.125);
  CHECK(model_tail(geo).value() == doctest::Approx(2 * std::pow(0.25, 11) / 0.75).epsilon(1e-15));
  const GeneratorSpec poly{0, 10, 2.0, GeneratorMode::polynomial, false};
  CHECK(envelope(poly, 3) == 1.0 / 16);
  CHECK_FALSE(model_tail(poly).has_value());
}

TEST_CASE("uniform-ball coefficients stay inside the envelope") {
  const GeneratorSpec spec{77, 200, 0.5, GeneratorMode::uniform_ball, false};
  const auto f = generate(spec);
  for (Eigen::Index n = 0; n <= 200; ++n) {
    CHECK(std::abs(f.a(n)) <= envelope(spec, n));
    CHECK(std::abs(f.b(n)) <= envelope(spec, n));
  }
}

TEST_CASE("complex normal draws have unit mean square") {
  const CounterRng rng(2024);
  double acc = 0;
  const int n = 200000;
  for (int k = 0; k < n; ++k) acc += std::norm(rng.complex_normal(k));
  CHECK(std::abs(acc / n - 1.0) < 0.01);
}

TEST_CASE("golden fixture: seed 42, geometric decay 0.5, degree 32") {
  std::ifstream in(std::string(HDISC_TEST_DATA) + "/golden_seed42_geometric.json");
  REQUIRE(in.good());
  std::stringstream buffer;
  buffer << in.rdbuf();
  const auto golden = parse_function(buffer.str());
  const auto f = generate(GeneratorSpec{42, 32, 0.5, GeneratorMode::geometric_decay, false});
  CHECK(golden.f == f);
}
