#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "galcurve/gal3.hpp"
#include "galcurve/interval.hpp"

namespace galcurve {

/// The (y, z) part of a point or derivative of an admissible curve. The
/// first coordinate is implied by the arc-length form x = s.
struct Transverse {
  double y = 0.0;
  double z = 0.0;
};

enum class CurveFamily {
  Custom,
  NaturalEquations,
  GeneralHelix,
  CircularHelix,
  Salkowski,
  AntiSalkowski,
  ExampleGeneralHelix,
  ExampleAntiSalkowski,
};

std::string_view family_name(CurveFamily f);

/// How derivatives of a curve are produced.
enum class DerivativeSource {
  Exact,            // hand-differentiated closed form
  IntegratorState,  // read from the natural-equation integrator state
  FiniteDifference, // synthesized from point evaluations
};

struct CurveInfo {
  CurveFamily family = CurveFamily::Custom;
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;
};

/// A curve s -> (s, y(s), z(s)) over a closed domain. Immutable; copies
/// share their evaluators and concurrent evaluation is safe.
class Curve {
 public:
  using PositionFn = std::function<Transverse(double)>;
  /// (y^(k), z^(k)) for k in 1..3.
  using DerivativeFn = std::function<Transverse(double, int)>;

  Curve(Interval domain, PositionFn position, DerivativeFn derivatives, DerivativeSource source,
        CurveInfo info);

  /// A curve given only by its position; derivatives come from finite
  /// differences.
  static Curve closed_form(Interval domain, PositionFn position, CurveInfo info = {});

  const Interval& domain() const { return domain_; }
  const CurveInfo& info() const { return info_; }
  DerivativeSource derivative_source() const { return source_; }
  bool has_derivative_evaluator() const { return source_ != DerivativeSource::FiniteDifference; }

  /// The same curve on a sub-interval of its domain. Throws DomainError if
  /// sub is not contained in the domain.
  Curve restricted(Interval sub) const;

  /// Throws DomainError outside the domain. The first coordinate is exactly s.
  GVec3 point(double s) const;

  /// Derivative from the curve's own evaluator; order in 1..3. The first
  /// coordinate is exactly 1 for order 1 and 0 otherwise. Throws
  /// DomainError outside the domain or when no evaluator exists.
  GVec3 evaluator_derivative(double s, int order) const;

 private:
  void require_in_domain(double s) const;

  Interval domain_;
  PositionFn position_;
  DerivativeFn derivatives_;
  DerivativeSource source_;
  CurveInfo info_;
};

}  // namespace galcurve
