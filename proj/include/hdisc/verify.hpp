#pragma once

// Verification suites over seeded fixtures. Each suite turns one family of
// identities into a list of CheckEntry records; the report is deterministic and
// independent of the thread count.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hdisc/io.hpp"
#include "hdisc/quadrature.hpp"
#include "hdisc/space_ops.hpp"

namespace hdisc {

enum class Suite { norms, means, littlewood_paley, kernel, growth, all };

std::string to_string(Suite suite);

/// Throws InvalidInput for an unknown suite name.
Suite parse_suite(const std::string& name);

struct CheckEntry {
  std::string suite;
  std::string name;
  std::string fixture;
  Variant variant = Variant::standard;
  /// "eq": passed iff rel_residual <= tolerance. "le": passed iff lhs <= rhs.
  std::string relation = "eq";
  double lhs = 0;
  double rhs = 0;
  double residual = 0;
  double rel_residual = 0;
  double tolerance = 0;
  double gap = 0;
  bool passed = false;
  /// Informational checks never affect the exit status.
  bool required = true;
  std::string annotation;
  nlohmann::json params = nlohmann::json::object();
};

struct VerifyOptions {
  Suite suite = Suite::all;
  std::uint64_t seed = 1;
  /// Relative tolerance for the Littlewood-Paley area quadrature.
  double tol = 1e-8;
  /// Circle node override. Defaults to 2 max_degree + 2 per fixture.
  std::optional<std::size_t> nodes;
  std::size_t radial_panels = 32;
  std::size_t panel_order = 16;
  double grading_exponent = 3.0;
  /// When set, suites run on this function instead of the seeded family.
  std::optional<FunctionFile> fixture;
  Parallelism par;
};

struct VerifyReport {
  nlohmann::json options;
  std::vector<CheckEntry> checks;

  std::size_t failed_required() const;
  bool ok() const { return failed_required() == 0; }

  nlohmann::json to_json() const;
  /// One line per check plus a summary line.
  std::string pretty() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace hdisc
