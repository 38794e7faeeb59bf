#pragma once

// Function documents: {"a": [[re, im], ...], "b": [[re, im], ...], "meta": {...}}.
// Numbers are written in shortest round-trip form, so load(save(f)) == f.

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

#include "hdisc/harmonic_series.hpp"

namespace hdisc {

using Series = HarmonicSeries<double>;

struct FunctionFile {
  Series f;
  std::map<std::string, std::string> meta;
};

nlohmann::json to_json(const FunctionFile& file);

/// Throws InvalidInput for schema violations or non-finite numbers.
FunctionFile function_from_json(const nlohmann::json& doc);

std::string dump_function(const FunctionFile& file);

/// Throws ParseError (with line and column) for malformed text.
FunctionFile parse_function(std::string_view text);

void save(const FunctionFile& file, const std::filesystem::path& path);
void save(const Series& f, const std::filesystem::path& path);

/// Throws IoError, ParseError or InvalidInput.
FunctionFile load(const std::filesystem::path& path);

/// Shortest decimal string that parses back to `x`.
std::string format_real(double x);

}  // namespace hdisc
