#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "galcurve/frenet.hpp"
#include "galcurve/parallel.hpp"
#include "galcurve/polyline.hpp"

namespace galcurve {

/// Curve points on n uniform grid points of its domain, as (s, s, y, z).
Polyline sample_curve(const Curve& curve, std::size_t n, Execution exec = Execution::Parallel);

/// Frenet frames at the given parameters.
std::vector<FrenetFrame> sample_frames(const Curve& curve, std::span<const double> s,
                                       Execution exec = Execution::Parallel);

/// Metadata describing a curve, without a timestamp.
PolylineMeta curve_meta(const Curve& curve, std::string kind);

}  // namespace galcurve
