#include "hdisc/generate.hpp"

#include <cmath>
#include <numbers>

#include "hdisc/errors.hpp"

namespace hdisc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::size_t kMaxDegree = std::size_t{1} << 20;

}  // namespace

std::uint64_t CounterRng::bits(std::uint64_t index) const {
  return splitmix64(splitmix64(splitmix64(seed_) ^ stream_) ^ index);
}

double CounterRng::uniform(std::uint64_t index) const {
  return static_cast<double>((bits(index) >> 11) + 1) * 0x1.0p-53;
}

std::complex<double> CounterRng::complex_normal(std::uint64_t k) const {
  const double radius = std::sqrt(-std::log(uniform(2 * k)));
  return std::polar(radius, 2.0 * std::numbers::pi * uniform(2 * k + 1));
}

std::complex<double> CounterRng::disc_point(std::uint64_t k, double radius) const {
  return std::polar(radius * std::sqrt(uniform(2 * k)), 2.0 * std::numbers::pi * uniform(2 * k + 1));
}

std::string to_string(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::uniform_ball:
      return "uniform-ball";
    case GeneratorMode::geometric_decay:
      return "geometric-decay";
    case GeneratorMode::polynomial:
      break;
  }
  return "polynomial";
}

GeneratorMode parse_mode(const std::string& name) {
  if (name == "uniform-ball") return GeneratorMode::uniform_ball;
  if (name == "geometric-decay") return GeneratorMode::geometric_decay;
  if (name == "polynomial") return GeneratorMode::polynomial;
  throw InvalidInput("unknown generator mode: " + name);
}

void validate(const GeneratorSpec& spec) {
  if (!std::isfinite(spec.decay) || spec.decay < 0) {
    throw InvalidInput("generator: decay must be finite and >= 0");
  }
  if (spec.mode == GeneratorMode::geometric_decay && spec.decay >= 1) {
    throw InvalidInput("generator: geometric-decay needs decay < 1");
  }
  if (spec.max_degree > kMaxDegree) throw InvalidInput("generator: max_degree too large");
}

double envelope(const GeneratorSpec& spec, std::size_t n) {
  if (spec.mode == GeneratorMode::geometric_decay) {
    return std::pow(spec.decay, static_cast<double>(n));
  }
  return std::pow(static_cast<double>(n + 1), -spec.decay);
}

Series generate(const GeneratorSpec& spec) {
  validate(spec);
  const auto len = static_cast<Eigen::Index>(spec.max_degree + 1);
  CoefficientVector<double> a(len);
  CoefficientVector<double> b(len);
  const CounterRng analytic(spec.seed, 1);
  const CounterRng coanalytic(spec.seed, 2);
  for (Eigen::Index n = 0; n < len; ++n) {
    const double env = envelope(spec, static_cast<std::size_t>(n));
    const auto k = static_cast<std::uint64_t>(n);
    if (spec.mode == GeneratorMode::uniform_ball) {
      a(n) = env * analytic.disc_point(k);
      b(n) = env * coanalytic.disc_point(k);
    } else {
      a(n) = env * analytic.complex_normal(k);
      b(n) = env * coanalytic.complex_normal(k);
    }
  }
  if (spec.normalized) b(0) = 0;
  return {std::move(a), std::move(b)};
}

std::optional<double> model_tail(const GeneratorSpec& spec) {
  validate(spec);
  if (spec.mode != GeneratorMode::geometric_decay) return std::nullopt;
  const double q2 = spec.decay * spec.decay;
  return 2.0 * std::pow(q2, static_cast<double>(spec.max_degree + 1)) / (1.0 - q2);
}

std::vector<GeneratorSpec> fixture_specs(std::uint64_t seed, std::size_t count,
                                         std::size_t max_degree, bool normalized) {
  const CounterRng rng(seed, 0xf1c7);
  std::vector<GeneratorSpec> specs;
  specs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorSpec spec;
    spec.seed = rng.bits(3 * i);
    spec.max_degree = i == 0 || max_degree <= 1
                          ? max_degree
                          : 1 + static_cast<std::size_t>(rng.bits(3 * i + 1) % max_degree);
    spec.normalized = normalized;
    switch (i % 3) {
      case 0:
        spec.mode = GeneratorMode::polynomial;
        spec.decay = 0.5 + rng.uniform(3 * i + 2);
        break;
      case 1:
        spec.mode = GeneratorMode::geometric_decay;
        spec.decay = 0.5 + 0.45 * rng.uniform(3 * i + 2);
        break;
      default:
        spec.mode = GeneratorMode::uniform_ball;
        spec.decay = rng.uniform(3 * i + 2);
        break;
    }
    specs.push_back(spec);
  }
  return specs;
}

std::vector<Series> fixture_family(std::uint64_t seed, std::size_t count, std::size_t max_degree,
                                   bool normalized) {
  std::vector<Series> out;
  out.reserve(count);
  for (const auto& spec : fixture_specs(seed, count, max_degree, normalized)) {
    out.push_back(generate(spec));
  }
  return out;
}

}  // namespace hdisc
