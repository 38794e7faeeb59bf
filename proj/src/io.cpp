#include "hdisc/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "hdisc/errors.hpp"

namespace hdisc {

namespace {

nlohmann::json encode(const CoefficientVector<double>& c) {
  auto out = nlohmann::json::array();
  for (Eigen::Index n = 0; n < c.size(); ++n) out.push_back({c(n).real(), c(n).imag()});
  return out;
}

CoefficientVector<double> decode(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidInput(std::string("function document: missing \"") + key + "\"");
  const auto& list = doc.at(key);
  if (!list.is_array()) throw InvalidInput(std::string("function document: \"") + key + "\" must be an array");
  CoefficientVector<double> c(static_cast<Eigen::Index>(list.size()));
  for (std::size_t n = 0; n < list.size(); ++n) {
    const auto& pair = list[n];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw InvalidInput(std::string("function document: ") + key + "[" + std::to_string(n) +
                         "] must be a [re, im] number pair");
    }
    const double re = pair[0].get<double>();
    const double im = pair[1].get<double>();
    if (!std::isfinite(re) || !std::isfinite(im)) {
      throw InvalidInput(std::string("function document: ") + key + "[" + std::to_string(n) +
                         "] is not finite");
    }
    c(static_cast<Eigen::Index>(n)) = {re, im};
  }
  return c;
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  const std::size_t end = std::min(byte, text.size());
  for (std::size_t i = 0; i + 1 < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

nlohmann::json to_json(const FunctionFile& file) {
  nlohmann::json doc;
  doc["a"] = encode(file.f.a());
  doc["b"] = encode(file.f.b());
  if (!file.meta.empty()) doc["meta"] = file.meta;
  return doc;
}

FunctionFile function_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InvalidInput("function document: top level must be an object");
  FunctionFile file;
  file.f = Series(decode(doc, "a"), decode(doc, "b"));
  if (doc.contains("meta")) {
    const auto& meta = doc.at("meta");
    if (!meta.is_object()) throw InvalidInput("function document: \"meta\" must be an object");
    for (const auto& [key, value] : meta.items()) {
      file.meta[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
  }
  return file;
}

std::string dump_function(const FunctionFile& file) { return to_json(file).dump() + "\n"; }

FunctionFile parse_function(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte);
    throw ParseError("function document: malformed JSON", line, column);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("function document: ") + e.what());
  }
  return function_from_json(doc);
}

void save(const FunctionFile& file, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << dump_function(file);
  if (!out) throw IoError("write failed: " + path.string());
}

void save(const Series& f, const std::filesystem::path& path) { save(FunctionFile{f, {}}, path); }

FunctionFile load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_function(buffer.str());
}

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

}  // namespace hdisc
