#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "galcurve/curve.hpp"
#include "galcurve/scalar_function.hpp"

namespace galcurve {

/// Curvature and torsion as functions of arc length over a domain.
/// kappa must be positive wherever it is evaluated.
struct NaturalEquations {
  ScalarFunction kappa;
  ScalarFunction tau;
  Interval domain;
};

/// State of the first-order system
///   theta' = tau, y' = yp, z' = zp, yp' = kappa cos(theta), zp' = kappa sin(theta)
/// whose solution is the curve with the given natural equations.
struct IntrinsicState {
  double theta = 0.0;
  double y = 0.0;
  double z = 0.0;
  double yp = 0.0;
  double zp = 0.0;
};

/// One classical Runge-Kutta step of size h from (s, state). Throws
/// IntegrationError when kappa <= 0 or a value is non-finite at any stage.
IntrinsicState rk4_step(const NaturalEquations& eqs, double s, const IntrinsicState& state, double h);

/// Fixed-step RK4 solution on a uniform grid; node k sits at s0 + k*h.
class Trajectory {
 public:
  Trajectory(NaturalEquations eqs, std::size_t steps);

  const NaturalEquations& equations() const { return eqs_; }
  double step() const { return h_; }
  std::size_t steps() const { return steps_; }
  double node(std::size_t k) const;
  const IntrinsicState& state(std::size_t k) const { return states_[k]; }

  /// State at any s in the domain: a partial RK4 step from the nearest
  /// node at or below s.
  IntrinsicState state_at(double s) const;

 private:
  NaturalEquations eqs_;
  std::size_t steps_;
  double h_;
  std::vector<IntrinsicState> states_;
};

/// Integrates the natural equations with every antiderivative zero at s0
/// (curve starts at (s0, 0, 0), theta(s0) = 0). Derivatives of the result
/// come from the state and the right-hand side; the third derivative uses a
/// finite-difference kappa'.
Curve reconstruct(const NaturalEquations& eqs, std::size_t steps);

/// Wraps an existing trajectory as a curve, tagged with info.
Curve curve_from_trajectory(std::shared_ptr<const Trajectory> trajectory, CurveInfo info);

struct RoundTripError {
  double max_kappa_err = 0.0;
  double max_tau_err = 0.0;
};

/// Reconstructs, then compares extracted curvature and torsion with the
/// inputs at `probes` evenly spaced interior points.
RoundTripError round_trip_error(const NaturalEquations& eqs, std::size_t steps, std::size_t probes);

}  // namespace galcurve
