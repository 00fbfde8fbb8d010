#pragma once

#include <cstddef>
#include <variant>

#include "galcurve/curve.hpp"
#include "galcurve/natural_eq.hpp"
#include "galcurve/scalar_function.hpp"

namespace galcurve {

/// Integration steps used by the family constructors unless told otherwise.
inline constexpr std::size_t kDefaultFamilySteps = 4096;

// Family constructors integrate the natural equations of the family with
// every antiderivative zero at the domain start, so families with equal
// (kappa, tau) coincide pointwise.

/// tau = m * kappa. Throws ParameterError for m == 0 or kappa <= 0 on the
/// integration grid.
Curve make_general_helix(double m, const ScalarFunction& kappa, Interval domain,
                         std::size_t steps = kDefaultFamilySteps);

/// Constant curvature kappa0 > 0 and torsion tau0 != 0.
Curve make_circular_helix(double kappa0, double tau0, Interval domain,
                          std::size_t steps = kDefaultFamilySteps);

/// Constant curvature kappa0 > 0, varying torsion.
Curve make_salkowski(double kappa0, const ScalarFunction& tau, Interval domain,
                     std::size_t steps = kDefaultFamilySteps);

/// Varying curvature kappa > 0, constant torsion.
Curve make_anti_salkowski(const ScalarFunction& kappa, double tau0, Interval domain,
                          std::size_t steps = kDefaultFamilySteps);

struct GeneralHelixParams {
  double m;
  ScalarFunction kappa;
};
struct CircularHelixParams {
  double kappa0;
  double tau0;
};
struct SalkowskiParams {
  double kappa0;
  ScalarFunction tau;
};
struct AntiSalkowskiParams {
  ScalarFunction kappa;
  double tau0;
};
using FamilyParams = std::variant<GeneralHelixParams, CircularHelixParams, SalkowskiParams, AntiSalkowskiParams>;

Curve make_family(const FamilyParams& params, Interval domain, std::size_t steps = kDefaultFamilySteps);

/// (s, (s/10)(-2cos(2 ln s) + sin(2 ln s)), -(s/10)(cos(2 ln s) + 2 sin(2 ln s)))
/// on [0.5, 3], with kappa = 1/s and tau = 2/s. Exact derivatives.
Curve example_general_helix();

/// (s, (e^-s/25)(-3cos 2s - 4 sin 2s), (e^-s/25)(4cos 2s - 3 sin 2s)) on
/// [0, 2], with kappa = e^-s and tau = 2. Exact derivatives.
Curve example_anti_salkowski();

}  // namespace galcurve
