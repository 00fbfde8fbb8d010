#include "galcurve/sampling.hpp"

#include "galcurve/grid.hpp"

namespace galcurve {

PolylineMeta curve_meta(const Curve& curve, std::string kind) {
  PolylineMeta meta;
  meta.source = curve.info().name.empty() ? std::string(family_name(curve.info().family)) : curve.info().name;
  meta.kind = std::move(kind);
  meta.params = curve.info().params;
  meta.tool_version = GALCURVE_VERSION;
  return meta;
}

Polyline sample_curve(const Curve& curve, std::size_t n, Execution exec) {
  const std::vector<double> grid = uniform_grid(curve.domain(), n);
  const std::vector<GVec3> points =
      index_map<GVec3>(n, [&](std::size_t i) { return curve.point(grid[i]); }, exec);
  Polyline out(curve_meta(curve, "curve"));
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({grid[i], points[i].x1(), points[i].x2(), points[i].x3()});
  }
  return out;
}

std::vector<FrenetFrame> sample_frames(const Curve& curve, std::span<const double> s, Execution exec) {
  return index_map<FrenetFrame>(s.size(), [&](std::size_t i) { return frenet_frame(curve, s[i]); }, exec);
}

}  // namespace galcurve
