#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace galcurve {

struct Sample {
  double s = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

struct PolylineMeta {
  std::string source;
  std::string kind;
  std::vector<std::pair<std::string, std::string>> params;
  std::string generated_at;
  std::string tool_version;
};

/// Ordered samples (s, x, y, z), strictly increasing in s, all finite.
class Polyline {
 public:
  Polyline() = default;
  explicit Polyline(PolylineMeta meta) : meta_(std::move(meta)) {}

  /// Throws ParameterError if s does not increase or a value is non-finite.
  void push_back(const Sample& sample);

  std::span<const Sample> samples() const { return samples_; }
  std::size_t size() const { return samples_.size(); }
  const Sample& operator[](std::size_t i) const { return samples_[i]; }

  const PolylineMeta& meta() const { return meta_; }
  PolylineMeta& meta() { return meta_; }

 private:
  std::vector<Sample> samples_;
  PolylineMeta meta_;
};

/// 17 significant digits, '.' separator, independent of the C locale.
/// Negative zero is written as 0.
std::string format_number(double v);

/// Header "s,x,y,z" then one row per sample.
std::string to_csv(const Polyline& p);

/// {"meta": {...}, "samples": [[s,x,y,z], ...]}. The generated_at field is
/// left out when include_timestamp is false.
std::string to_json(const Polyline& p, bool include_timestamp = true);

/// Readers for the two export formats; throw ParameterError on malformed
/// input. CSV carries no metadata.
Polyline polyline_from_csv(std::string_view text);
Polyline polyline_from_json(std::string_view text);

}  // namespace galcurve
