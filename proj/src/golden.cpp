#include "galcurve/golden.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "galcurve/families.hpp"
#include "galcurve/frenet.hpp"
#include "galcurve/grid.hpp"
#include "galcurve/natural_eq.hpp"

namespace galcurve::golden {

ClosedFormFrame example1_frame(double s) {
  const double l = std::log(s);
  const double c2 = std::cos(2.0 * l);
  const double s2 = std::sin(2.0 * l);
  return {{1.0, std::cos(l) * std::sin(l), -0.5 * c2}, {0.0, c2, s2}, {0.0, -s2, c2}, 1.0 / s, 2.0 / s};
}

ClosedFormFrame example2_frame(double s) {
  const double e = std::exp(-s);
  const double c = std::cos(2.0 * s);
  const double sn = std::sin(2.0 * s);
  return {{1.0, -e / 5.0 * (c - 2.0 * sn), -e / 5.0 * (2.0 * c + sn)}, {0.0, c, sn}, {0.0, -sn, c}, e, 2.0};
}

GVec3 example1_smarandache(double s, SmarandacheKind kind) {
  const double l = std::log(s);
  const double cs = std::cos(l) * std::sin(l);
  const double c2 = std::cos(2.0 * l);
  const double s2 = std::sin(2.0 * l);
  switch (kind) {
    case SmarandacheKind::TN:
      return {1.0, c2 + cs, -0.5 * c2 + s2};
    case SmarandacheKind::TB:
      return {1.0, -cs, 0.5 * c2};
    case SmarandacheKind::TNB:
      return {1.0, c2 - cs, 0.5 * c2 + s2};
  }
  return {};
}

GVec3 example2_smarandache(double s, SmarandacheKind kind) {
  const double e = std::exp(-s);
  const double c = std::cos(2.0 * s);
  const double sn = std::sin(2.0 * s);
  switch (kind) {
    case SmarandacheKind::TN:
      return {1.0, c - e / 5.0 * (c - 2.0 * sn), sn - e / 5.0 * (2.0 * c + sn)};
    case SmarandacheKind::TB:
      return {1.0, -e / 5.0 * (c + (-2.0 + 5.0 * std::exp(s)) * sn), c - e / 5.0 * (2.0 * c + sn)};
    case SmarandacheKind::TNB:
      return {1.0, c - e / 5.0 * (c - 2.0 * sn) - sn, c + sn - e / 5.0 * (2.0 * c + sn)};
  }
  return {};
}

namespace {

using FrameFn = ClosedFormFrame (*)(double);
using PointFn = GVec3 (*)(double, SmarandacheKind);

double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

CheckResult check(std::string name, double measured, double tolerance) {
  return {std::move(name), measured, tolerance, measured <= tolerance};
}

}  // namespace

std::vector<CheckResult> run_golden_suite(double tolerance) {
  std::vector<CheckResult> out;
  struct Golden {
    std::string name;
    Curve curve;
    FrameFn frame;
    PointFn point;
  };
  const std::vector<Golden> goldens{{"example1", example_general_helix(), example1_frame, example1_smarandache},
                                    {"example2", example_anti_salkowski(), example2_frame, example2_smarandache}};
  for (const Golden& g : goldens) {
    const std::vector<double> grid = uniform_grid(g.curve.domain(), 101);
    double kappa_err = 0.0;
    double tau_err = 0.0;
    double frame_err = 0.0;
    double smarandache_err = 0.0;
    double identity_err = 0.0;
    for (double s : grid) {
      const FrenetFrame f = frenet_frame(g.curve, s);
      const ClosedFormFrame want = g.frame(s);
      kappa_err = std::max(kappa_err, rel(curvature(g.curve, s), want.kappa));
      tau_err = std::max(tau_err, rel(torsion(g.curve, s), want.tau));
      frame_err = std::max({frame_err, max_abs_diff(f.T, want.T), max_abs_diff(f.N, want.N),
                            max_abs_diff(f.B, want.B)});
      for (SmarandacheKind k : {SmarandacheKind::TN, SmarandacheKind::TB, SmarandacheKind::TNB}) {
        smarandache_err = std::max(smarandache_err, max_abs_diff(smarandache_point(f, k), g.point(s, k)));
      }
      identity_err = std::max({identity_err, max_abs_diff(cross(f.T, f.N), f.B), std::abs(dot(f.N, f.N) - 1.0),
                               std::abs(dot(f.B, f.B) - 1.0), std::abs(dot(f.N, f.B))});
    }
    out.push_back(check(g.name + " curvature", kappa_err, tolerance));
    out.push_back(check(g.name + " torsion", tau_err, tolerance));
    out.push_back(check(g.name + " frame", frame_err, tolerance));
    out.push_back(check(g.name + " smarandache TN/TB/TNB", smarandache_err, tolerance));
    out.push_back(check(g.name + " frame identities", identity_err, 1e-9));

    double residual = 0.0;
    const Interval& d = g.curve.domain();
    for (int i = 1; i <= 25; ++i) {
      const double s = d.lo + d.width() * i / 26.0;
      residual = std::max(residual, frenet_residuals(g.curve, s).max());
    }
    out.push_back(check(g.name + " frenet residuals", residual, 1e-4));
  }

  const NaturalEquations unit{ScalarFunction::constant(1.0), ScalarFunction::constant(1.0),
                              {0.0, std::numbers::pi}};
  const Curve helix = reconstruct(unit, 4096);
  out.push_back(check("reconstruct kappa=tau=1 endpoint",
                      max_abs_diff(helix.point(std::numbers::pi), GVec3(std::numbers::pi, 2.0, std::numbers::pi)),
                      1e-6));

  const NaturalEquations anti{ScalarFunction::parse("exp(-s)"), ScalarFunction::parse("2"), {0.0, 2.0}};
  const RoundTripError rt = round_trip_error(anti, 4096, 21);
  out.push_back(check("round trip exp(-s), 2", std::max(rt.max_kappa_err, rt.max_tau_err), 1e-5));

  const Interval dom{0.0, 2.0};
  const Curve circ = make_circular_helix(1.0, 2.0, dom);
  const Curve salk = make_salkowski(1.0, ScalarFunction::constant(2.0), dom);
  const Curve anti_salk = make_anti_salkowski(ScalarFunction::constant(1.0), 2.0, dom);
  double degeneration = 0.0;
  for (double s : uniform_grid(dom, 101)) {
    const GVec3 p = circ.point(s);
    degeneration = std::max({degeneration, max_abs_diff(salk.point(s), p), max_abs_diff(anti_salk.point(s), p)});
  }
  out.push_back(check("family degeneration", degeneration, 1e-6));
  return out;
}

}  // namespace galcurve::golden
