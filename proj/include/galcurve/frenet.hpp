#pragma once

#include <cstddef>
#include <optional>

#include "galcurve/curve.hpp"
#include "galcurve/parallel.hpp"

namespace galcurve {

/// Frame singularity guard for curvature and frame queries.
inline constexpr double kKappaGuard = 1e-9;
/// Curvature threshold of the admissibility verdict.
inline constexpr double kAdmissibleKappa = 1e-6;

/// Tangent, principal normal and binormal at s. T has first component 1;
/// N and B are isotropic, Euclidean-unit and B is N rotated by +90 degrees
/// in the (x2, x3) plane.
struct FrenetFrame {
  double s = 0.0;
  GVec3 T;
  GVec3 N;
  GVec3 B;
  double kappa = 0.0;
  double tau = 0.0;
};

/// Derivative of the given order (1..3). Uses the curve's evaluator when it
/// has one, otherwise central 5-point differences with h = 1e-3*max(1,|s|)
/// that slide inward near the domain ends.
GVec3 derivative(const Curve& curve, double s, int order);

/// sqrt(y''^2 + z''^2). Throws KappaTooSmall below kKappaGuard.
double curvature(const Curve& curve, double s);

/// det(c', c'', c''') / kappa^2, expanded along the first column.
double torsion(const Curve& curve, double s);

FrenetFrame frenet_frame(const Curve& curve, double s);

/// Galilean norms of T' - kappa N, N' - tau B and B' + tau N, with frame
/// derivatives taken by finite differences of frenet_frame.
struct FrenetResiduals {
  double r_T = 0.0;
  double r_N = 0.0;
  double r_B = 0.0;

  double max() const;
};

/// Requires s strictly inside the domain.
FrenetResiduals frenet_residuals(const Curve& curve, double s);

enum class AdmissibilityFailure { KappaTooSmall, NonFiniteDerivative, EmptyDomain };

struct AdmissibilityReport {
  bool admissible = false;
  double min_kappa = 0.0;
  std::optional<double> offending_s;
  std::optional<AdmissibilityFailure> reason;
  /// Graph-form curves have tangent first component 1 everywhere.
  bool isotropic_tangents_excluded = true;
  std::size_t samples = 0;
};

std::string_view failure_name(AdmissibilityFailure f);

/// Samples n uniform grid points (endpoints included). Admissible iff every
/// derivative is finite and kappa >= kAdmissibleKappa at every point; on
/// failure the first offending grid point is reported.
AdmissibilityReport check_admissible(const Curve& curve, std::size_t n,
                                     Execution exec = Execution::Parallel);

}  // namespace galcurve
