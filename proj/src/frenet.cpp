#include "galcurve/frenet.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "galcurve/finite_difference.hpp"
#include "galcurve/grid.hpp"
#include "galcurve/scalar_function.hpp"

namespace galcurve {
namespace {

Transverse second_derivative(const Curve& curve, double s) {
  const GVec3 d2 = derivative(curve, s, 2);
  return {d2.x2(), d2.x3()};
}

double guarded_kappa(const Curve& curve, double s) {
  const Transverse d2 = second_derivative(curve, s);
  const double kappa = std::hypot(d2.y, d2.z);
  if (!(kappa >= kKappaGuard)) {
    throw KappaTooSmall(s, kappa);
  }
  return kappa;
}

}  // namespace

GVec3 derivative(const Curve& curve, double s, int order) {
  if (order < 1 || order > 3) {
    throw ParameterError("derivative order must be 1, 2 or 3");
  }
  if (curve.has_derivative_evaluator()) {
    return curve.evaluator_derivative(s, order);
  }
  if (!curve.domain().contains(s)) {
    throw DomainError("s=" + std::to_string(s) + " outside curve domain");
  }
  const GVec3 d = fd::derivative([&curve](double u) { return curve.point(u); }, s, order, curve.domain());
  // The graph form fixes the first component; keep it exact.
  return {order == 1 ? 1.0 : 0.0, d.x2(), d.x3()};
}

double curvature(const Curve& curve, double s) { return guarded_kappa(curve, s); }

double torsion(const Curve& curve, double s) {
  const double kappa = guarded_kappa(curve, s);
  const Transverse d2 = second_derivative(curve, s);
  const GVec3 d3 = derivative(curve, s, 3);
  // First column of (c', c'', c''') is (1, 0, 0).
  const double det = d2.y * d3.x3() - d2.z * d3.x2();
  return det / (kappa * kappa);
}

FrenetFrame frenet_frame(const Curve& curve, double s) {
  const GVec3 d1 = derivative(curve, s, 1);
  const Transverse d2 = second_derivative(curve, s);
  const double kappa = std::hypot(d2.y, d2.z);
  if (!(kappa >= kKappaGuard)) {
    throw KappaTooSmall(s, kappa);
  }
  const GVec3 d3 = derivative(curve, s, 3);
  const double det = d2.y * d3.x3() - d2.z * d3.x2();
  FrenetFrame f;
  f.s = s;
  f.T = d1;
  f.N = GVec3(0.0, d2.y / kappa, d2.z / kappa);
  f.B = GVec3(0.0, -d2.z / kappa, d2.y / kappa);
  f.kappa = kappa;
  f.tau = det / (kappa * kappa);
  return f;
}

double FrenetResiduals::max() const { return std::max({r_T, r_N, r_B}); }

FrenetResiduals frenet_residuals(const Curve& curve, double s) {
  const Interval& dom = curve.domain();
  if (!(s > dom.lo && s < dom.hi)) {
    throw DomainError("frenet residuals need s strictly inside the domain");
  }
  const fd::Stencil st = fd::make_stencil(1, s, fd::default_step(s), dom);
  std::vector<FrenetFrame> frames;
  frames.reserve(st.weights.size());
  for (std::size_t i = 0; i < st.weights.size(); ++i) {
    frames.push_back(frenet_frame(curve, st.node(s, i)));
  }
  // Frame first components are the constants 1, 0, 0, so only the
  // isotropic parts are differentiated.
  const double scale = 1.0 / st.step;
  auto differentiate = [&](auto member) {
    double y = 0.0;
    double z = 0.0;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      const GVec3& v = frames[i].*member;
      y += st.weights[i] * v.x2();
      z += st.weights[i] * v.x3();
    }
    return GVec3(0.0, y * scale, z * scale);
  };
  const GVec3 dT = differentiate(&FrenetFrame::T);
  const GVec3 dN = differentiate(&FrenetFrame::N);
  const GVec3 dB = differentiate(&FrenetFrame::B);
  const FrenetFrame f = frenet_frame(curve, s);
  return {norm(dT - f.kappa * f.N), norm(dN - f.tau * f.B), norm(dB + f.tau * f.N)};
}

std::string_view failure_name(AdmissibilityFailure f) {
  switch (f) {
    case AdmissibilityFailure::KappaTooSmall:
      return "KappaTooSmall";
    case AdmissibilityFailure::NonFiniteDerivative:
      return "NonFiniteDerivative";
    case AdmissibilityFailure::EmptyDomain:
      return "EmptyDomain";
  }
  return "Unknown";
}

namespace {

struct PointCheck {
  double kappa = 0.0;
  bool finite = true;
};

PointCheck check_point(const Curve& curve, double s) {
  try {
    derivative(curve, s, 1);
    const GVec3 d2 = derivative(curve, s, 2);
    derivative(curve, s, 3);
    return {std::hypot(d2.x2(), d2.x3()), true};
  } catch (const NumericalError&) {
    return {0.0, false};
  } catch (const expr::EvalError&) {
    return {0.0, false};
  }
}

}  // namespace

AdmissibilityReport check_admissible(const Curve& curve, std::size_t n, Execution exec) {
  if (n < 2) {
    throw ParameterError("admissibility check needs at least 2 grid points");
  }
  AdmissibilityReport report;
  if (curve.domain().degenerate()) {
    report.reason = AdmissibilityFailure::EmptyDomain;
    return report;
  }
  const std::vector<double> grid = uniform_grid(curve.domain(), n);
  const std::vector<PointCheck> checks =
      index_map<PointCheck>(n, [&](std::size_t i) { return check_point(curve, grid[i]); }, exec);
  report.samples = n;
  report.admissible = true;
  report.min_kappa = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const PointCheck& c = checks[i];
    if (c.finite) {
      report.min_kappa = std::min(report.min_kappa, c.kappa);
    }
    if (!report.admissible) {
      continue;
    }
    if (!c.finite) {
      report.admissible = false;
      report.reason = AdmissibilityFailure::NonFiniteDerivative;
      report.offending_s = grid[i];
    } else if (!(c.kappa >= kAdmissibleKappa)) {
      report.admissible = false;
      report.reason = AdmissibilityFailure::KappaTooSmall;
      report.offending_s = grid[i];
    }
  }
  if (!std::isfinite(report.min_kappa)) {
    report.min_kappa = 0.0;
  }
  return report;
}

}  // namespace galcurve
