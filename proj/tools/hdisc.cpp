// hdisc: command-line front end for harmonic functions on the unit disc.
//
//   hdisc eval     --fn f.json --z re,im
//   hdisc norm     --fn f.json
//   hdisc means    --fn f.json [--r v1,v2,...|sweep] [--nodes n]
//   hdisc kernel   [--alpha re,im|sweep]
//   hdisc growth   --fn f.json [--r v1,...|sweep] [--theta t]
//   hdisc generate [--seed s] [--degree d] [--mode m] [--decay q] [--normalized] [--save path]
//   hdisc verify   <suite> [--fn f.json] [--nodes n] [--grid panels,order,grading] [--tol t]
//                  [--seed s] [--threads n]
//
// Tables default to CSV with a header row; --out json|pretty switches format.

#include <cmath>
#include <complex>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdisc/errors.hpp"
#include "hdisc/generate.hpp"
#include "hdisc/io.hpp"
#include "hdisc/kernel.hpp"
#include "hdisc/space_ops.hpp"
#include "hdisc/verify.hpp"

namespace {

using hdisc::format_real;
using Complex = std::complex<double>;

// Keeps 1 - conj(alpha) z away from catastrophic cancellation.
constexpr double kBoundaryCap = 1.0 - 1e-6;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw hdisc::InvalidInput("not a number: '" + text + "'");
  }
  if (used != text.size() || !std::isfinite(value)) {
    throw hdisc::InvalidInput("not a finite number: '" + text + "'");
  }
  return value;
}

Complex parse_complex(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 1) return {parse_real(parts[0]), 0.0};
  if (parts.size() != 2) throw hdisc::InvalidInput("expected re,im but got '" + text + "'");
  return {parse_real(parts[0]), parse_real(parts[1])};
}

std::vector<double> parse_values(const std::string& text, const std::vector<double>& sweep) {
  if (text == "sweep") return sweep;
  std::vector<double> values;
  for (const auto& p : split(text, ',')) values.push_back(parse_real(p));
  if (values.empty()) throw hdisc::InvalidInput("empty value list");
  return values;
}

std::vector<double> default_sweep(bool include_one) {
  std::vector<double> v;
  for (int i = 0; i <= 19; ++i) v.push_back(i / 20.0);
  v.push_back(0.99);
  if (include_one) v.push_back(1.0);
  return v;
}

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<double>>> rows;

  void print(const std::string& format) const {
    if (format == "json") {
      auto doc = nlohmann::json::array();
      for (const auto& row : rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < header.size(); ++i) {
          obj[header[i]] = row[i] ? nlohmann::json(*row[i]) : nlohmann::json(nullptr);
        }
        doc.push_back(obj);
      }
      std::cout << doc.dump(2) << "\n";
      return;
    }
    const bool pretty = format == "pretty";
    const auto cell = [](const std::optional<double>& v) { return v ? format_real(*v) : std::string(); };
    const auto emit = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (pretty) {
          std::cout << (i ? "  " : "") << std::string(cells[i].size() < 22 ? 22 - cells[i].size() : 0, ' ')
                    << cells[i];
        } else {
          std::cout << (i ? "," : "") << cells[i];
        }
      }
      std::cout << "\n";
    };
    emit(header);
    for (const auto& row : rows) {
      std::vector<std::string> cells;
      for (const auto& v : row) cells.push_back(cell(v));
      emit(cells);
    }
  }
};

hdisc::FunctionFile require_fn(const std::string& path) {
  if (path.empty()) throw hdisc::InvalidInput("--fn is required");
  return hdisc::load(path);
}

void check_cap(double modulus, const char* what) {
  if (modulus > kBoundaryCap) {
    throw hdisc::DomainError(std::string(what) + ": modulus above CLI cap 1 - 1e-6");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic functions on the unit disc: norms, integral means, Littlewood-Paley, kernels"};
  app.require_subcommand(1);

  std::string fn;
  std::string out = "csv";
  std::string z_text;
  std::string r_text = "sweep";
  std::string alpha_text = "sweep";
  std::optional<std::size_t> nodes;
  double theta = 0.0;
  std::uint64_t seed = 1;

  const auto out_check = CLI::IsMember({"csv", "json", "pretty"});

  auto* eval = app.add_subcommand("eval", "evaluate f(z)");
  eval->add_option("--fn", fn, "function document")->required();
  eval->add_option("--z", z_text, "point re,im")->required();
  eval->add_option("--out", out)->check(out_check);

  auto* norm = app.add_subcommand("norm", "print the coefficient norm");
  norm->add_option("--fn", fn, "function document")->required();
  norm->add_option("--out", out)->check(out_check);

  auto* means = app.add_subcommand("means", "integral means: series against circle quadrature");
  means->add_option("--fn", fn, "function document")->required();
  means->add_option("--r", r_text, "radii v1,v2,... or 'sweep'");
  means->add_option("--nodes", nodes, "circle nodes (default 2 deg + 2)");
  means->add_option("--out", out)->check(out_check);

  auto* kernel = app.add_subcommand("kernel", "kernel norm against 2 / (1 - |alpha|^2)");
  kernel->add_option("--alpha", alpha_text, "point re,im or 'sweep'");
  kernel->add_option("--out", out)->check(out_check);

  auto* growth = app.add_subcommand("growth", "|f(z)| against the growth bound along a ray");
  growth->add_option("--fn", fn, "function document")->required();
  growth->add_option("--r", r_text, "moduli v1,v2,... or 'sweep'");
  growth->add_option("--theta", theta, "ray angle");
  growth->add_option("--out", out)->check(out_check);

  hdisc::GeneratorSpec gen;
  std::string mode = "polynomial";
  std::string save_path;
  auto* generate = app.add_subcommand("generate", "write a seeded random function document");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--degree", gen.max_degree);
  generate->add_option("--mode", mode)->check(CLI::IsMember({"uniform-ball", "geometric-decay", "polynomial"}));
  generate->add_option("--decay", gen.decay);
  generate->add_flag("--normalized", gen.normalized, "force b0 = 0");
  generate->add_option("--save", save_path, "output path (default stdout)");

  std::string suite = "all";
  std::string grid_text;
  double tol = 1e-8;
  unsigned threads = 1;
  std::string verify_out = "json";
  auto* verify = app.add_subcommand("verify", "run verification suites; exit 0 iff all required checks pass");
  verify->add_option("suite", suite, "norms|means|littlewood-paley|kernel|growth|all")
      ->check(CLI::IsMember({"norms", "means", "littlewood-paley", "kernel", "growth", "all"}));
  verify->add_option("--fn", fn, "run on this function instead of seeded fixtures");
  verify->add_option("--nodes", nodes, "circle nodes override");
  verify->add_option("--grid", grid_text, "radial grid panels,order,grading");
  verify->add_option("--tol", tol, "Littlewood-Paley quadrature tolerance");
  verify->add_option("--seed", seed, "fixture seed");
  verify->add_option("--threads", threads, "sample-evaluation threads");
  verify->add_option("--out", verify_out)->check(CLI::IsMember({"json", "pretty"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval->parsed()) {
      const auto file = require_fn(fn);
      const Complex z = parse_complex(z_text);
      const Complex v = hdisc::evaluate(file.f, z);
      Table t{{"z_re", "z_im", "f_re", "f_im"}, {{z.real(), z.imag(), v.real(), v.imag()}}};
      t.print(out);
    } else if (norm->parsed()) {
      const auto file = require_fn(fn);
      const double value = hdisc::norm(file.f);
      if (out == "json") {
        std::cout << nlohmann::json{{"norm", value}}.dump() << "\n";
      } else {
        std::cout << format_real(value) << "\n";
      }
    } else if (means->parsed()) {
      const auto file = require_fn(fn);
      const std::size_t n = nodes.value_or(2 * file.f.max_degree() + 2);
      Table t{{"r", "m2_series", "m2_quad"}, {}};
      for (const double r : parse_values(r_text, default_sweep(true))) {
        std::optional<double> quad;
        if (r < 1) quad = hdisc::integral_mean_quad(file.f, r, n);
        t.rows.push_back({r, hdisc::integral_mean_series(file.f, r), quad});
      }
      t.print(out);
    } else if (kernel->parsed()) {
      std::vector<Complex> points;
      if (alpha_text == "sweep") {
        for (const double a : default_sweep(false)) points.emplace_back(a, 0.0);
      } else {
        points.push_back(parse_complex(alpha_text));
      }
      Table t{{"abs_alpha", "kernel_norm2", "closed_form"}, {}};
      for (const auto& alpha : points) {
        check_cap(std::abs(alpha), "kernel");
        const hdisc::KernelPoint<double> p(alpha);
        const auto k = hdisc::kernel_series(p, hdisc::sufficient_degree(p, 1e-16));
        t.rows.push_back({std::abs(alpha), hdisc::norm_squared(k), 2.0 / p.defect()});
      }
      t.print(out);
    } else if (growth->parsed()) {
      const auto file = require_fn(fn);
      Table t{{"abs_z", "abs_f", "bound"}, {}};
      for (const double m : parse_values(r_text, default_sweep(false))) {
        check_cap(m, "growth");
        const auto rec = hdisc::growth_bound(file.f, std::polar(m, theta));
        t.rows.push_back({m, rec.value, rec.bound});
      }
      t.print(out);
    } else if (generate->parsed()) {
      gen.mode = hdisc::parse_mode(mode);
      hdisc::FunctionFile file{hdisc::generate(gen), {}};
      file.meta["seed"] = std::to_string(gen.seed);
      file.meta["mode"] = mode;
      file.meta["decay"] = format_real(gen.decay);
      file.meta["max_degree"] = std::to_string(gen.max_degree);
      if (gen.normalized) file.meta["normalized"] = "true";
      if (const auto tail = hdisc::model_tail(gen)) file.meta["model_tail"] = format_real(*tail);
      if (save_path.empty()) {
        std::cout << hdisc::dump_function(file);
      } else {
        hdisc::save(file, save_path);
      }
    } else if (verify->parsed()) {
      hdisc::VerifyOptions opt;
      opt.suite = hdisc::parse_suite(suite);
      opt.seed = seed;
      opt.tol = tol;
      opt.nodes = nodes;
      opt.par.threads = threads;
      if (!grid_text.empty()) {
        const auto parts = split(grid_text, ',');
        if (parts.size() != 3) throw hdisc::InvalidInput("--grid expects panels,order,grading");
        const double panels = parse_real(parts[0]);
        const double order = parse_real(parts[1]);
        if (panels < 1 || order < 1 || panels != std::floor(panels) || order != std::floor(order)) {
          throw hdisc::InvalidInput("--grid panels and order must be positive integers");
        }
        opt.radial_panels = static_cast<std::size_t>(panels);
        opt.panel_order = static_cast<std::size_t>(order);
        opt.grading_exponent = parse_real(parts[2]);
      }
      if (!fn.empty()) opt.fixture = hdisc::load(fn);
      const auto report = hdisc::run_verify(opt);
      if (verify_out == "pretty") {
        std::cout << report.pretty();
      } else {
        std::cout << report.to_json().dump(2) << "\n";
      }
      return report.ok() ? 0 : 1;
    }
  } catch (const hdisc::ParseError& e) {
    std::cerr << "hdisc: parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hdisc: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
