#include "hdisc/verify.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "hdisc/errors.hpp"
#include "hdisc/generate.hpp"
#include "hdisc/harmonic_series.hpp"
#include "hdisc/kernel.hpp"

namespace hdisc {

namespace {

using Complex = std::complex<double>;

constexpr double kAlgebraicTol = 1e-12;

struct Fixture {
  std::string label;
  Series f;
};

nlohmann::json complex_json(const Complex& z) { return nlohmann::json::array({z.real(), z.imag()}); }

CheckEntry from_report(const std::string& suite, const std::string& fixture,
                       const IdentityReport<double>& rep) {
  CheckEntry e;
  e.suite = suite;
  e.name = rep.name;
  e.fixture = fixture;
  e.variant = rep.variant;
  e.lhs = rep.lhs;
  e.rhs = rep.rhs;
  e.residual = rep.residual;
  e.rel_residual = rep.rel_residual;
  e.tolerance = rep.tolerance;
  e.gap = rep.gap;
  e.passed = rep.passed;
  return e;
}

CheckEntry equality(const std::string& suite, const std::string& name, const std::string& fixture,
                    double lhs, double rhs, double scale, double tol) {
  return from_report(suite, fixture, make_report<double>(name, lhs, rhs, scale, tol));
}

/// Complex-valued equality; lhs/rhs record the real parts, the residual is |lhs - rhs|.
CheckEntry complex_equality(const std::string& suite, const std::string& name,
                            const std::string& fixture, Complex lhs, Complex rhs, double scale,
                            double tol) {
  auto e = equality(suite, name, fixture, lhs.real(), rhs.real(), scale, tol);
  e.residual = std::abs(lhs - rhs);
  e.rel_residual = scale > 0 ? e.residual / scale : e.residual;
  e.passed = e.rel_residual <= tol;
  e.params["lhs"] = complex_json(lhs);
  e.params["rhs"] = complex_json(rhs);
  return e;
}

/// lhs <= rhs. tolerance records the slack already folded into rhs.
CheckEntry inequality(const std::string& suite, const std::string& name, const std::string& fixture,
                      double lhs, double rhs, double slack) {
  CheckEntry e;
  e.suite = suite;
  e.name = name;
  e.fixture = fixture;
  e.relation = "le";
  e.lhs = lhs;
  e.rhs = rhs;
  e.residual = std::max(0.0, lhs - rhs);
  e.rel_residual = e.residual;
  e.tolerance = slack;
  e.passed = lhs <= rhs;
  return e;
}

std::uint64_t suite_seed(std::uint64_t seed, std::uint64_t salt) { return CounterRng(seed, salt).bits(0); }

std::vector<Fixture> seeded(const std::string& prefix, std::uint64_t seed, std::size_t count,
                            std::size_t max_degree, bool normalized = false) {
  std::vector<Fixture> out;
  const auto family = fixture_family(seed, count, max_degree, normalized);
  for (std::size_t i = 0; i < family.size(); ++i) {
    out.push_back({prefix + "-" + std::to_string(i), family[i]});
  }
  return out;
}

std::vector<Fixture> user_or(const VerifyOptions& opt, std::vector<Fixture> fallback) {
  if (opt.fixture) {
    const auto it = opt.fixture->meta.find("name");
    return {{it != opt.fixture->meta.end() ? it->second : std::string("user"), opt.fixture->f}};
  }
  return fallback;
}

QuadratureGrid<double> grid_for(const VerifyOptions& opt, const Series& f) {
  QuadratureGrid<double> grid{opt.nodes.value_or(2 * f.max_degree() + 2), opt.radial_panels,
                              opt.panel_order, opt.grading_exponent};
  validate(grid);
  return grid;
}

void run_norms(const VerifyOptions& opt, std::vector<CheckEntry>& out) {
  const std::string suite = "norms";
  const auto fixtures = user_or(opt, seeded("norms", suite_seed(opt.seed, 11), 24, 64));
  const CounterRng rng(opt.seed, 12);
  for (std::size_t i = 0; i < fixtures.size(); ++i) {
    const auto& [label, f] = fixtures[i];
    const auto& g = fixtures[(i + 1) % fixtures.size()].f;
    const double nf = norm(f);
    const double ng = norm(g);

    const Complex self = inner_product(f, f);
    out.push_back(complex_equality(suite, "parseval", label, self, {nf * nf, 0.0}, nf * nf,
                                   kAlgebraicTol));

    const Complex fg = inner_product(f, g);
    const Complex gf = inner_product(g, f);
    auto herm = complex_equality(suite, "hermitian-symmetry", label, gf, std::conj(fg),
                                 std::max(std::abs(fg), nf * ng), kAlgebraicTol);
    out.push_back(herm);

    const Complex alpha = 3.0 * rng.complex_normal(i);
    auto hom = equality(suite, "homogeneity", label, norm(scale(f, alpha)), std::abs(alpha) * nf,
                        std::abs(alpha) * nf, kAlgebraicTol);
    hom.params["alpha"] = complex_json(alpha);
    out.push_back(hom);

    const double ns = norm(add(f, g));
    out.push_back(inequality(suite, "triangle", label, ns, nf + ng + kAlgebraicTol * (nf + ng),
                             kAlgebraicTol));

    const double sum2 = norm_squared(add(f, g)) + norm_squared(subtract(f, g));
    const double par2 = 2 * nf * nf + 2 * ng * ng;
    out.push_back(
        equality(suite, "parallelogram", label, sum2, par2, magnitude(sum2, par2), kAlgebraicTol));

    const auto seq = interleave(f);
    out.push_back(equality(suite, "isometry", label, l2_norm(seq), nf, nf, kAlgebraicTol));

    const bool round_trip = deinterleave(seq) == f;
    auto rt = equality(suite, "interleave-round-trip", label, round_trip ? 0.0 : 1.0, 0.0, 0.0, 0.0);
    rt.annotation = "lhs counts mismatched representations; exact equality required";
    out.push_back(rt);

    out.push_back(equality(suite, "swap-parts-norm", label, norm(swap_parts(f)), nf, 0.0, 0.0));
  }
}

void run_means(const VerifyOptions& opt, std::vector<CheckEntry>& out) {
  const std::string suite = "means";
  auto fallback = seeded("means", suite_seed(opt.seed, 21), 8, 64);
  for (auto& fx : seeded("means-normalized", suite_seed(opt.seed, 22), 4, 64, true)) {
    fallback.push_back(std::move(fx));
  }
  const auto fixtures = user_or(opt, std::move(fallback));
  const std::vector<double> radii{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
  for (const auto& [label, f] : fixtures) {
    const std::size_t nodes = opt.nodes.value_or(2 * f.max_degree() + 2);
    const bool resolved = nodes >= exact_circle_nodes(f);
    double previous = -1;
    for (const double r : radii) {
      const auto pair = means_identity_check(f, r, nodes, 1e-11, opt.par);
      auto corrected = from_report(suite, label, pair.corrected);
      corrected.params = {{"r", r}, {"nodes", nodes}};
      if (!resolved) {
        corrected.required = false;
        corrected.annotation = corrected.passed
                                   ? "under-resolved: nodes < 2*deg+1, agreement not guaranteed"
                                   : "expected-fail: aliasing, nodes < 2*deg+1";
      }
      out.push_back(corrected);

      auto literal = from_report(suite, label, pair.paper_literal);
      literal.params = corrected.params;
      literal.required = false;
      literal.annotation = "informational: omits 2 Re(a0 b0), see gap";
      out.push_back(literal);

      const double mean = pair.corrected.lhs;
      const double sup = sup_estimate(f, r, nodes, opt.par);
      auto contain = inequality(suite, "containment", label, mean, sup * sup + 1e-12, 1e-12);
      contain.params = corrected.params;
      out.push_back(contain);

      const double series = integral_mean_series(f, r);
      if (previous >= 0) {
        auto mono = inequality(suite, "monotone-in-r", label, previous, series + 1e-14, 1e-14);
        mono.params = {{"r", r}};
        out.push_back(mono);
      }
      previous = series;
    }
    auto limit = equality(suite, "series-at-r1-equals-norm2", label, integral_mean_series(f, 1.0),
                          norm_squared(f), 0.0, 0.0);
    out.push_back(limit);
  }
}

void run_littlewood_paley(const VerifyOptions& opt, std::vector<CheckEntry>& out) {
  const std::string suite = "littlewood-paley";
  std::vector<Fixture> fallback{
      {"hand-z", Series({0.0, 1.0}, {})},
      {"hand-a1-b1", Series({1.0}, {1.0})},
      {"hand-ai-b1", Series({Complex(0, 1)}, {1.0})},
      {"hand-z-plus-zbar", Series({0.0, 1.0}, {0.0, 1.0})},
  };
  for (auto& fx : seeded("lp", suite_seed(opt.seed, 31), 6, 32)) fallback.push_back(std::move(fx));
  for (auto& fx : seeded("lp-normalized", suite_seed(opt.seed, 32), 4, 32, true)) {
    fallback.push_back(std::move(fx));
  }
  const auto fixtures = user_or(opt, std::move(fallback));
  for (const auto& [label, f] : fixtures) {
    const auto grid = grid_for(opt, f);
    const auto pair = lp_identity_check(f, grid, opt.tol, opt.par);
    out.push_back(from_report(suite, label, pair.corrected));
    auto literal = from_report(suite, label, pair.paper_literal);
    literal.required = false;
    literal.annotation = pair.paper_literal.gap == 0
                             ? "informational: Re(a0 b0) = 0, variants coincide"
                             : "informational: |f(0)|^2 exceeds |a0|^2+|b0|^2 by the gap";
    out.push_back(literal);

    const double area = lp_quad(f, grid, opt.par);
    const double series = lp_series(f);
    out.push_back(
        equality(suite, "lp-quad-vs-series", label, area, series, magnitude(area, series), opt.tol));

    const double n2 = norm_squared(f);
    const double exact = series + std::norm(f.a(0)) + std::norm(f.b(0));
    out.push_back(equality(suite, "lp-series-plus-constants", label, exact, n2, magnitude(exact, n2),
                           1e-13));

    const double moment = lp_series_moment_form(f);
    out.push_back(equality(suite, "lp-moment-form", label, moment, series, magnitude(moment, series),
                           1e-13));
  }
}

void run_kernel(const VerifyOptions& opt, std::vector<CheckEntry>& out) {
  const std::string suite = "kernel";
  const auto fixtures = user_or(opt, seeded("kernel", suite_seed(opt.seed, 41), 12, 32));
  const CounterRng rng(opt.seed, 42);
  std::uint64_t draw = 0;
  for (const auto& [label, f] : fixtures) {
    for (int j = 0; j < 4; ++j) {
      const KernelPoint<double> p(rng.disc_point(draw++, 0.9));
      auto e = from_report(suite, label, reproduce_check(f, p));
      e.params = {{"alpha", complex_json(p.alpha())}};
      e.params["lhs"] = complex_json(inner_product(f, kernel_series(p, f.max_degree())));
      e.params["rhs"] = complex_json(evaluate(f, p.alpha()));
      out.push_back(e);
    }
  }

  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 8; ++k) {
      const double radius = 0.95 * i / 4.0;
      const KernelPoint<double> p(std::polar(radius, 2 * std::numbers::pi * k / 8.0));
      const std::string label = "alpha-" + std::to_string(i) + "-" + std::to_string(k);
      const double self = kernel_eval(p, p.alpha()).real() * p.defect();
      auto sr = equality(suite, "self-reproduction", label, self, 2.0, 2.0, kAlgebraicTol);
      sr.params = {{"alpha", complex_json(p.alpha())}};
      out.push_back(sr);

      const std::size_t degree = sufficient_degree(p);
      const double exact = 2.0 / p.defect();
      const double truncated = norm_squared(kernel_series(p, degree));
      auto conv = inequality(suite, "kernel-norm-convergence", label, std::abs(exact - truncated),
                             kernel_tail(p, degree) + kAlgebraicTol * exact, kAlgebraicTol);
      conv.params = {{"alpha", complex_json(p.alpha())}, {"degree", degree}};
      out.push_back(conv);

      const Complex z = rng.disc_point(draw++, 0.95);
      const Complex kz = kernel_eval(p, z);
      auto real = inequality(suite, "kernel-real-valued", label, std::abs(kz.imag()),
                             1e-13 * std::abs(kz), 1e-13);
      real.params = {{"alpha", complex_json(p.alpha())}, {"z", complex_json(z)}};
      out.push_back(real);
    }
  }

  for (const double a : {0.0, 0.3, 0.6, 0.9}) {
    const KernelPoint<double> p(Complex(a, 0));
    const std::size_t degree = sufficient_degree(p);
    const double ratio = sharpness_probe(p, degree);
    auto e = equality(suite, "sharpness-probe", "alpha-" + format_real(a), ratio,
                      std::numbers::sqrt2 / 2, 0.0, 1e-8);
    e.params = {{"alpha", a}, {"degree", degree}};
    e.annotation = "growth bound constant 2 is attained only up to 1/sqrt(2) by the kernel";
    out.push_back(e);
  }
}

void run_growth(const VerifyOptions& opt, std::vector<CheckEntry>& out) {
  const std::string suite = "growth";
  const auto fixtures = user_or(opt, seeded("growth", suite_seed(opt.seed, 51), 12, 64));
  const CounterRng rng(opt.seed, 52);
  std::uint64_t draw = 0;
  for (const auto& [label, f] : fixtures) {
    for (int j = 0; j < 16; ++j) {
      const Complex z = rng.disc_point(draw++, 0.99);
      const auto rec = growth_bound(f, z);
      auto e = inequality(suite, "growth-bound", label, rec.value, rec.bound * (1 + 1e-12), 1e-12);
      e.passed = rec.passed;
      e.params = {{"z", complex_json(z)}, {"slack", rec.slack}};
      out.push_back(e);
    }
  }
}

}  // namespace

std::string to_string(Suite suite) {
  switch (suite) {
    case Suite::norms:
      return "norms";
    case Suite::means:
      return "means";
    case Suite::littlewood_paley:
      return "littlewood-paley";
    case Suite::kernel:
      return "kernel";
    case Suite::growth:
      return "growth";
    case Suite::all:
      break;
  }
  return "all";
}

Suite parse_suite(const std::string& name) {
  for (const auto s : {Suite::norms, Suite::means, Suite::littlewood_paley, Suite::kernel,
                       Suite::growth, Suite::all}) {
    if (name == to_string(s)) return s;
  }
  throw InvalidInput("unknown suite: " + name);
}

std::size_t VerifyReport::failed_required() const {
  std::size_t n = 0;
  for (const auto& c : checks) n += c.required && !c.passed;
  return n;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["options"] = options;
  auto list = nlohmann::json::array();
  std::size_t passed = 0;
  std::size_t informational = 0;
  for (const auto& c : checks) {
    nlohmann::json j;
    j["suite"] = c.suite;
    j["name"] = c.name;
    j["fixture"] = c.fixture;
    j["variant"] = to_string(c.variant);
    j["relation"] = c.relation;
    j["lhs"] = c.lhs;
    j["rhs"] = c.rhs;
    j["residual"] = c.residual;
    j["rel_residual"] = c.rel_residual;
    j["tolerance"] = c.tolerance;
    j["gap"] = c.gap;
    j["passed"] = c.passed;
    j["required"] = c.required;
    if (!c.annotation.empty()) j["annotation"] = c.annotation;
    if (!c.params.empty()) j["params"] = c.params;
    list.push_back(std::move(j));
    passed += c.passed;
    informational += !c.required;
  }
  doc["checks"] = std::move(list);
  doc["summary"] = {{"total", checks.size()},
                    {"passed", passed},
                    {"informational", informational},
                    {"failed_required", failed_required()},
                    {"ok", ok()}};
  return doc;
}

std::string VerifyReport::pretty() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    const char* tag = c.passed ? (c.required ? "PASS " : "INFO ") : (c.required ? "FAIL " : "XFAIL");
    os << tag << "  " << c.suite << "/" << c.name;
    if (c.variant != Variant::standard) os << "[" << to_string(c.variant) << "]";
    os << "  " << c.fixture;
    if (!c.params.empty()) os << "  " << c.params.dump();
    if (c.relation == "le") {
      os << "  " << format_real(c.lhs) << " <= " << format_real(c.rhs);
    } else {
      os << "  lhs=" << format_real(c.lhs) << " rhs=" << format_real(c.rhs)
         << " rel=" << format_real(c.rel_residual) << " tol=" << format_real(c.tolerance);
    }
    if (c.gap != 0) os << " gap=" << format_real(c.gap);
    if (!c.annotation.empty()) os << "  (" << c.annotation << ")";
    os << "\n";
  }
  os << "summary: " << checks.size() << " checks, " << failed_required() << " required failures -> "
     << (ok() ? "OK" : "FAILED") << "\n";
  return os.str();
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.options = {{"suite", to_string(options.suite)},
                    {"seed", options.seed},
                    {"tol", options.tol},
                    {"grid",
                     {{"radial_panels", options.radial_panels},
                      {"panel_order", options.panel_order},
                      {"grading_exponent", options.grading_exponent}}}};
  if (options.nodes) report.options["nodes"] = *options.nodes;
  if (options.fixture) report.options["fixture"] = to_json(*options.fixture);
  if (!(options.tol > 0) || !std::isfinite(options.tol)) throw InvalidInput("verify: tol must be > 0");
  validate(QuadratureGrid<double>{1, options.radial_panels, options.panel_order,
                                  options.grading_exponent});
  if (options.nodes && *options.nodes < 1) throw InvalidInput("verify: nodes must be >= 1");

  const auto want = [&](Suite s) { return options.suite == Suite::all || options.suite == s; };
  if (want(Suite::norms)) run_norms(options, report.checks);
  if (want(Suite::means)) run_means(options, report.checks);
  if (want(Suite::littlewood_paley)) run_littlewood_paley(options, report.checks);
  if (want(Suite::kernel)) run_kernel(options, report.checks);
  if (want(Suite::growth)) run_growth(options, report.checks);
  return report;
}

}  // namespace hdisc
