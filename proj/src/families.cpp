#include "galcurve/families.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <string>

#include "galcurve/grid.hpp"

namespace galcurve {
namespace {

std::string num(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void require_domain(const Interval& domain) {
  if (domain.degenerate()) {
    throw EmptyDomainError();
  }
}

// Rejects kappa <= 0 at the integration nodes.
void require_positive_on_grid(const ScalarFunction& kappa, const Interval& domain, std::size_t steps) {
  for (double s : uniform_grid(domain, steps + 1)) {
    const double k = kappa(s);
    if (!(k > 0.0)) {
      throw ParameterError("curvature must be positive on the domain; kappa(" + num(s) + ") = " + num(k));
    }
  }
}

Curve integrate(NaturalEquations eqs, std::size_t steps, CurveInfo info) {
  info.params.emplace_back("steps", std::to_string(steps));
  auto trajectory = std::make_shared<const Trajectory>(std::move(eqs), steps);
  return curve_from_trajectory(std::move(trajectory), std::move(info));
}

}  // namespace

Curve make_general_helix(double m, const ScalarFunction& kappa, Interval domain, std::size_t steps) {
  if (m == 0.0 || !std::isfinite(m)) {
    throw ParameterError("general helix needs a finite, non-zero ratio m");
  }
  require_domain(domain);
  require_positive_on_grid(kappa, domain, steps);
  ScalarFunction tau([m, kappa](double s) { return m * kappa(s); }, num(m) + "*(" + kappa.label() + ")");
  return integrate({kappa, tau, domain}, steps,
                   {CurveFamily::GeneralHelix, "general-helix", {{"m", num(m)}, {"kappa", kappa.label()}}});
}

Curve make_circular_helix(double kappa0, double tau0, Interval domain, std::size_t steps) {
  if (!(kappa0 > 0.0) || !std::isfinite(kappa0)) {
    throw ParameterError("circular helix needs kappa0 > 0");
  }
  if (tau0 == 0.0 || !std::isfinite(tau0)) {
    throw ParameterError("circular helix needs a finite, non-zero tau0");
  }
  require_domain(domain);
  return integrate({ScalarFunction::constant(kappa0), ScalarFunction::constant(tau0), domain}, steps,
                   {CurveFamily::CircularHelix, "circular-helix", {{"kappa0", num(kappa0)}, {"tau0", num(tau0)}}});
}

Curve make_salkowski(double kappa0, const ScalarFunction& tau, Interval domain, std::size_t steps) {
  if (!(kappa0 > 0.0) || !std::isfinite(kappa0)) {
    throw ParameterError("Salkowski curve needs kappa0 > 0");
  }
  require_domain(domain);
  return integrate({ScalarFunction::constant(kappa0), tau, domain}, steps,
                   {CurveFamily::Salkowski, "salkowski", {{"kappa0", num(kappa0)}, {"tau", tau.label()}}});
}

Curve make_anti_salkowski(const ScalarFunction& kappa, double tau0, Interval domain, std::size_t steps) {
  if (!std::isfinite(tau0)) {
    throw ParameterError("anti-Salkowski curve needs a finite tau0");
  }
  require_domain(domain);
  require_positive_on_grid(kappa, domain, steps);
  return integrate({kappa, ScalarFunction::constant(tau0), domain}, steps,
                   {CurveFamily::AntiSalkowski, "anti-salkowski", {{"kappa", kappa.label()}, {"tau0", num(tau0)}}});
}

Curve make_family(const FamilyParams& params, Interval domain, std::size_t steps) {
  return std::visit(
      [&](const auto& p) -> Curve {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GeneralHelixParams>) {
          return make_general_helix(p.m, p.kappa, domain, steps);
        } else if constexpr (std::is_same_v<T, CircularHelixParams>) {
          return make_circular_helix(p.kappa0, p.tau0, domain, steps);
        } else if constexpr (std::is_same_v<T, SalkowskiParams>) {
          return make_salkowski(p.kappa0, p.tau, domain, steps);
        } else {
          return make_anti_salkowski(p.kappa, p.tau0, domain, steps);
        }
      },
      params);
}

Curve example_general_helix() {
  auto position = [](double s) {
    const double u = 2.0 * std::log(s);
    const double c = std::cos(u);
    const double sn = std::sin(u);
    return Transverse{s / 10.0 * (-2.0 * c + sn), -s / 10.0 * (c + 2.0 * sn)};
  };
  auto derivatives = [](double s, int order) {
    const double u = 2.0 * std::log(s);
    const double c = std::cos(u);
    const double sn = std::sin(u);
    switch (order) {
      case 1:
        return Transverse{0.5 * sn, -0.5 * c};
      case 2:
        return Transverse{c / s, sn / s};
      default:
        return Transverse{-(c + 2.0 * sn) / (s * s), (2.0 * c - sn) / (s * s)};
    }
  };
  return Curve({0.5, 3.0}, position, derivatives, DerivativeSource::Exact,
               {CurveFamily::ExampleGeneralHelix, "example1", {{"kappa", "1/s"}, {"tau", "2/s"}}});
}

Curve example_anti_salkowski() {
  auto position = [](double s) {
    const double e = std::exp(-s) / 25.0;
    const double c = std::cos(2.0 * s);
    const double sn = std::sin(2.0 * s);
    return Transverse{e * (-3.0 * c - 4.0 * sn), e * (4.0 * c - 3.0 * sn)};
  };
  auto derivatives = [](double s, int order) {
    const double e = std::exp(-s);
    const double c = std::cos(2.0 * s);
    const double sn = std::sin(2.0 * s);
    switch (order) {
      case 1:
        return Transverse{-e / 5.0 * (c - 2.0 * sn), -e / 5.0 * (2.0 * c + sn)};
      case 2:
        return Transverse{e * c, e * sn};
      default:
        return Transverse{-e * (c + 2.0 * sn), e * (2.0 * c - sn)};
    }
  };
  return Curve({0.0, 2.0}, position, derivatives, DerivativeSource::Exact,
               {CurveFamily::ExampleAntiSalkowski, "example2", {{"kappa", "exp(-s)"}, {"tau", "2"}}});
}

}  // namespace galcurve
