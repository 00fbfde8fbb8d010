#include "galcurve/smarandache.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "galcurve/grid.hpp"
#include "galcurve/sampling.hpp"

namespace galcurve {

std::string_view kind_name(SmarandacheKind k) {
  switch (k) {
    case SmarandacheKind::TN:
      return "TN";
    case SmarandacheKind::TB:
      return "TB";
    case SmarandacheKind::TNB:
      return "TNB";
  }
  return "TN";
}

std::optional<SmarandacheKind> parse_kind(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "tn") {
    return SmarandacheKind::TN;
  }
  if (lower == "tb") {
    return SmarandacheKind::TB;
  }
  if (lower == "tnb") {
    return SmarandacheKind::TNB;
  }
  return std::nullopt;
}

GVec3 smarandache_point(const FrenetFrame& frame, SmarandacheKind kind) {
  GVec3 sum = frame.T;
  switch (kind) {
    case SmarandacheKind::TN:
      sum = frame.T + frame.N;
      break;
    case SmarandacheKind::TB:
      sum = frame.T + frame.B;
      break;
    case SmarandacheKind::TNB:
      sum = frame.T + frame.N + frame.B;
      break;
  }
  return sum / norm(sum);
}

Polyline smarandache_curve(const Curve& curve, SmarandacheKind kind, std::size_t n, Execution exec) {
  const std::vector<double> grid = uniform_grid(curve.domain(), n);
  const std::vector<GVec3> points = index_map<GVec3>(
      n,
      [&](std::size_t i) {
        const auto reject = [&] {
          return AdmissibilityError("curve not admissible at s=" + std::to_string(grid[i]), grid[i]);
        };
        FrenetFrame f;
        try {
          f = frenet_frame(curve, grid[i]);
        } catch (const KappaTooSmall&) {
          throw reject();
        }
        if (!(f.kappa >= kAdmissibleKappa)) {
          throw reject();
        }
        return smarandache_point(f, kind);
      },
      exec);
  PolylineMeta meta = curve_meta(curve, "smarandache-" + std::string(kind_name(kind)));
  meta.params.emplace_back("smarandache", std::string(kind_name(kind)));
  Polyline out(std::move(meta));
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({grid[i], points[i].x1(), points[i].x2(), points[i].x3()});
  }
  return out;
}

}  // namespace galcurve
