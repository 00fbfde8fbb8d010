#include "galcurve/polyline.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

#include "galcurve/errors.hpp"

namespace galcurve {

void Polyline::push_back(const Sample& sample) {
  if (!std::isfinite(sample.s) || !std::isfinite(sample.x) || !std::isfinite(sample.y) ||
      !std::isfinite(sample.z)) {
    throw ParameterError("polyline sample must be finite");
  }
  if (!samples_.empty() && !(sample.s > samples_.back().s)) {
    throw ParameterError("polyline samples must be strictly increasing in s");
  }
  samples_.push_back(sample);
}

std::string format_number(double v) {
  if (v == 0.0) {
    return "0";
  }
  std::array<char, 40> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
  return std::string(buf.data(), ptr);
}

std::string to_csv(const Polyline& p) {
  std::string out = "s,x,y,z\n";
  for (const Sample& q : p.samples()) {
    out += format_number(q.s);
    out += ',';
    out += format_number(q.x);
    out += ',';
    out += format_number(q.y);
    out += ',';
    out += format_number(q.z);
    out += '\n';
  }
  return out;
}

std::string to_json(const Polyline& p, bool include_timestamp) {
  nlohmann::ordered_json meta;
  meta["source"] = p.meta().source;
  meta["kind"] = p.meta().kind;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : p.meta().params) {
    params[k] = v;
  }
  meta["params"] = params;
  if (include_timestamp) {
    meta["generated_at"] = p.meta().generated_at;
  }
  meta["tool_version"] = p.meta().tool_version;

  // Samples are written by hand so both exports share format_number.
  std::string out = "{\n  \"meta\": ";
  out += meta.dump();
  out += ",\n  \"samples\": [";
  bool first = true;
  for (const Sample& q : p.samples()) {
    out += first ? "\n    [" : ",\n    [";
    first = false;
    out += format_number(q.s) + ", " + format_number(q.x) + ", " + format_number(q.y) + ", " +
           format_number(q.z) + "]";
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

namespace {

double parse_field(std::string_view f) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
  if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
    throw ParameterError("malformed number '" + std::string(f) + "'");
  }
  return v;
}

}  // namespace

Polyline polyline_from_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line) || line != "s,x,y,z") {
    throw ParameterError("CSV header must be s,x,y,z");
  }
  Polyline p;
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    std::array<double, 4> v{};
    std::size_t start = 0;
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t comma = line.find(',', start);
      if ((k < 3) == (comma == std::string::npos)) {
        throw ParameterError("CSV row must have 4 fields: " + line);
      }
      v[k] = parse_field(std::string_view(line).substr(start, comma == std::string::npos ? std::string::npos
                                                                                        : comma - start));
      start = comma + 1;
    }
    p.push_back({v[0], v[1], v[2], v[3]});
  }
  return p;
}

Polyline polyline_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("samples") || !j["samples"].is_array()) {
    throw ParameterError("JSON polyline needs a samples array");
  }
  PolylineMeta meta;
  if (j.contains("meta") && j["meta"].is_object()) {
    const auto& m = j["meta"];
    meta.source = m.value("source", "");
    meta.kind = m.value("kind", "");
    meta.generated_at = m.value("generated_at", "");
    meta.tool_version = m.value("tool_version", "");
    if (m.contains("params") && m["params"].is_object()) {
      for (const auto& [k, v] : m["params"].items()) {
        meta.params.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
      }
    }
  }
  Polyline p(std::move(meta));
  for (const auto& row : j["samples"]) {
    if (!row.is_array() || row.size() != 4) {
      throw ParameterError("JSON sample must be [s, x, y, z]");
    }
    p.push_back({row[0].get<double>(), row[1].get<double>(), row[2].get<double>(), row[3].get<double>()});
  }
  return p;
}

}  // namespace galcurve
