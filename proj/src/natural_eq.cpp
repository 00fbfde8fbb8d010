#include "galcurve/natural_eq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "galcurve/finite_difference.hpp"
#include "galcurve/frenet.hpp"

namespace galcurve {
namespace {

IntrinsicState axpy(const IntrinsicState& x, double a, const IntrinsicState& d) {
  return {x.theta + a * d.theta, x.y + a * d.y, x.z + a * d.z, x.yp + a * d.yp, x.zp + a * d.zp};
}

bool finite(const IntrinsicState& x) {
  return std::isfinite(x.theta) && std::isfinite(x.y) && std::isfinite(x.z) && std::isfinite(x.yp) &&
         std::isfinite(x.zp);
}

IntrinsicState rhs(const NaturalEquations& eqs, double s, const IntrinsicState& x, double step_start) {
  const expr::EvalResult k = eqs.kappa.try_eval(s);
  if (!k.ok()) {
    throw IntegrationError("curvature evaluation failed: " + std::string(expr::fault_name(k.fault->kind)),
                           s, step_start);
  }
  if (!(k.value > 0.0)) {
    throw IntegrationError("curvature must be positive, got " + std::to_string(k.value), s, step_start);
  }
  const expr::EvalResult t = eqs.tau.try_eval(s);
  if (!t.ok()) {
    throw IntegrationError("torsion evaluation failed: " + std::string(expr::fault_name(t.fault->kind)), s,
                           step_start);
  }
  return {t.value, x.yp, x.zp, k.value * std::cos(x.theta), k.value * std::sin(x.theta)};
}

}  // namespace

IntrinsicState rk4_step(const NaturalEquations& eqs, double s, const IntrinsicState& x, double h) {
  const IntrinsicState k1 = rhs(eqs, s, x, s);
  const IntrinsicState k2 = rhs(eqs, s + 0.5 * h, axpy(x, 0.5 * h, k1), s);
  const IntrinsicState k3 = rhs(eqs, s + 0.5 * h, axpy(x, 0.5 * h, k2), s);
  const IntrinsicState k4 = rhs(eqs, s + h, axpy(x, h, k3), s);
  IntrinsicState next{
      x.theta + h / 6.0 * (k1.theta + 2.0 * k2.theta + 2.0 * k3.theta + k4.theta),
      x.y + h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y),
      x.z + h / 6.0 * (k1.z + 2.0 * k2.z + 2.0 * k3.z + k4.z),
      x.yp + h / 6.0 * (k1.yp + 2.0 * k2.yp + 2.0 * k3.yp + k4.yp),
      x.zp + h / 6.0 * (k1.zp + 2.0 * k2.zp + 2.0 * k3.zp + k4.zp),
  };
  if (!finite(next)) {
    throw IntegrationError("integration blew up", s + h, s);
  }
  return next;
}

Trajectory::Trajectory(NaturalEquations eqs, std::size_t steps) : eqs_(std::move(eqs)) {
  if (eqs_.domain.degenerate()) {
    throw EmptyDomainError();
  }
  if (steps < 2) {
    throw ParameterError("integration needs at least 2 steps");
  }
  steps_ = steps;
  h_ = eqs_.domain.width() / static_cast<double>(steps);
  states_.reserve(steps + 1);
  states_.emplace_back();
  for (std::size_t k = 0; k < steps; ++k) {
    states_.push_back(rk4_step(eqs_, node(k), states_.back(), h_));
  }
}

double Trajectory::node(std::size_t k) const {
  if (k == steps()) {
    return eqs_.domain.hi;
  }
  return eqs_.domain.lo + static_cast<double>(k) * h_;
}

IntrinsicState Trajectory::state_at(double s) const {
  if (!eqs_.domain.contains(s)) {
    throw DomainError("s=" + std::to_string(s) + " outside integration domain");
  }
  const double t = std::floor((s - eqs_.domain.lo) / h_);
  std::size_t k = static_cast<std::size_t>(std::max(0.0, t));
  k = std::min(k, steps());
  // Rounding in the floor can put s just below node k.
  while (k > 0 && node(k) > s) {
    --k;
  }
  const double dt = s - node(k);
  if (dt == 0.0) {
    return states_[k];
  }
  return rk4_step(eqs_, node(k), states_[k], dt);
}

Curve curve_from_trajectory(std::shared_ptr<const Trajectory> trajectory, CurveInfo info) {
  const Interval domain = trajectory->equations().domain;
  auto position = [trajectory](double s) {
    const IntrinsicState x = trajectory->state_at(s);
    return Transverse{x.y, x.z};
  };
  auto derivatives = [trajectory](double s, int order) {
    const IntrinsicState x = trajectory->state_at(s);
    if (order == 1) {
      return Transverse{x.yp, x.zp};
    }
    const NaturalEquations& eqs = trajectory->equations();
    const double kappa = eqs.kappa(s);
    const double c = std::cos(x.theta);
    const double sn = std::sin(x.theta);
    if (order == 2) {
      return Transverse{kappa * c, kappa * sn};
    }
    const double tau = eqs.tau(s);
    const double dkappa = fd::derivative([&eqs](double u) { return eqs.kappa(u); }, s, 1, eqs.domain);
    return Transverse{dkappa * c - kappa * tau * sn, dkappa * sn + kappa * tau * c};
  };
  return Curve(domain, std::move(position), std::move(derivatives), DerivativeSource::IntegratorState,
               std::move(info));
}

Curve reconstruct(const NaturalEquations& eqs, std::size_t steps) {
  auto trajectory = std::make_shared<const Trajectory>(eqs, steps);
  CurveInfo info{CurveFamily::NaturalEquations,
                 "natural-equations",
                 {{"kappa", eqs.kappa.label()}, {"tau", eqs.tau.label()}, {"steps", std::to_string(steps)}}};
  return curve_from_trajectory(std::move(trajectory), std::move(info));
}

RoundTripError round_trip_error(const NaturalEquations& eqs, std::size_t steps, std::size_t probes) {
  if (eqs.domain.degenerate()) {
    throw EmptyDomainError();
  }
  if (probes < 1) {
    throw ParameterError("round trip needs at least one probe");
  }
  const Curve curve = reconstruct(eqs, steps);
  RoundTripError err;
  const double width = eqs.domain.width();
  for (std::size_t i = 0; i < probes; ++i) {
    const double s = eqs.domain.lo + width * static_cast<double>(i + 1) / static_cast<double>(probes + 1);
    err.max_kappa_err = std::max(err.max_kappa_err, std::abs(curvature(curve, s) - eqs.kappa(s)));
    err.max_tau_err = std::max(err.max_tau_err, std::abs(torsion(curve, s) - eqs.tau(s)));
  }
  return err;
}

}  // namespace galcurve
