#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "galcurve/frenet.hpp"
#include "galcurve/parallel.hpp"
#include "galcurve/polyline.hpp"

namespace galcurve {

enum class SmarandacheKind { TN, TB, TNB };

std::string_view kind_name(SmarandacheKind k);
/// Accepts "tn", "tb", "tnb" in any case.
std::optional<SmarandacheKind> parse_kind(std::string_view text);

/// (T+N)/|T+N|, (T+B)/|T+B| or (T+N+B)/|T+N+B| under the Galilean norm.
/// T is non-isotropic with first component 1 and N, B are isotropic, so the
/// denominator is exactly 1 and the result equals the plain sum.
GVec3 smarandache_point(const FrenetFrame& frame, SmarandacheKind kind);

/// Smarandache curve sampled on n uniform points of the curve's domain.
/// Samples carry (s, 1, y, z). Every grid point must have
/// kappa >= kAdmissibleKappa; otherwise AdmissibilityError names the s.
Polyline smarandache_curve(const Curve& curve, SmarandacheKind kind, std::size_t n,
                           Execution exec = Execution::Parallel);

}  // namespace galcurve
