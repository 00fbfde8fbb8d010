#pragma once

#include <string>
#include <vector>

#include "galcurve/gal3.hpp"
#include "galcurve/smarandache.hpp"

namespace galcurve::golden {

/// Closed forms of the two example curves: the general helix
/// with kappa = 1/s, tau = 2/s and the anti-Salkowski curve with
/// kappa = e^-s, tau = 2.
struct ClosedFormFrame {
  GVec3 T;
  GVec3 N;
  GVec3 B;
  double kappa;
  double tau;
};

ClosedFormFrame example1_frame(double s);
ClosedFormFrame example2_frame(double s);
GVec3 example1_smarandache(double s, SmarandacheKind kind);
GVec3 example2_smarandache(double s, SmarandacheKind kind);

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

/// Golden checks behind `galcurve verify`. `tolerance` bounds the
/// exact-derivative comparisons (curvature, torsion, frames, Smarandache
/// points); the integration and residual checks keep their own bounds.
std::vector<CheckResult> run_golden_suite(double tolerance = 1e-9);

}  // namespace galcurve::golden
