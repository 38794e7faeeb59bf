#pragma once

// Seeded fixtures. Every draw is a pure function of (seed, stream, index), so a
// given spec always yields the same coefficients regardless of call order.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hdisc/io.hpp"

namespace hdisc {

/// Counter-based generator: splitmix64 over a mixed (seed, stream, index) key.
class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0) : seed_(seed), stream_(stream) {}

  std::uint64_t bits(std::uint64_t index) const;

  /// Uniform on (0, 1].
  double uniform(std::uint64_t index) const;

  /// Complex normal with E|c|^2 = 1 (variance 1/2 per component). Uses
  /// indices 2k and 2k + 1.
  std::complex<double> complex_normal(std::uint64_t k) const;

  /// Uniform on the closed disc of radius `radius`. Uses indices 2k and 2k + 1.
  std::complex<double> disc_point(std::uint64_t k, double radius = 1.0) const;

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
};

enum class GeneratorMode { uniform_ball, geometric_decay, polynomial };

std::string to_string(GeneratorMode mode);
GeneratorMode parse_mode(const std::string& name);

/// Coefficient envelopes: polynomial and uniform-ball use (n + 1)^(-decay),
/// geometric-decay uses decay^n with 0 <= decay < 1.
struct GeneratorSpec {
  std::uint64_t seed = 0;
  std::size_t max_degree = 0;
  double decay = 0.0;
  GeneratorMode mode = GeneratorMode::polynomial;
  /// Forces b_0 = 0 (the g(0) = 0 normalization of f = h + conj(g)).
  bool normalized = false;
};

void validate(const GeneratorSpec& spec);

double envelope(const GeneratorSpec& spec, std::size_t n);

Series generate(const GeneratorSpec& spec);

/// Expected sum_{n > N} (|a_n|^2 + |b_n|^2) of the untruncated random series
/// in geometric-decay mode: 2 q^(2N + 2) / (1 - q^2). Empty for other modes.
std::optional<double> model_tail(const GeneratorSpec& spec);

/// Deterministic family of `count` fixtures with degrees in [1, max_degree],
/// cycling through the three modes; fixture 0 always has degree max_degree.
std::vector<GeneratorSpec> fixture_specs(std::uint64_t seed, std::size_t count,
                                         std::size_t max_degree, bool normalized = false);

std::vector<Series> fixture_family(std::uint64_t seed, std::size_t count, std::size_t max_degree,
                                   bool normalized = false);

}  // namespace hdisc
