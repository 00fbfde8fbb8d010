#include "galcurve/curve.hpp"

#include <string>

namespace galcurve {

std::string_view family_name(CurveFamily f) {
  switch (f) {
    case CurveFamily::Custom:
      return "custom";
    case CurveFamily::NaturalEquations:
      return "natural-equations";
    case CurveFamily::GeneralHelix:
      return "general-helix";
    case CurveFamily::CircularHelix:
      return "circular-helix";
    case CurveFamily::Salkowski:
      return "salkowski";
    case CurveFamily::AntiSalkowski:
      return "anti-salkowski";
    case CurveFamily::ExampleGeneralHelix:
      return "example1";
    case CurveFamily::ExampleAntiSalkowski:
      return "example2";
  }
  return "custom";
}

Curve::Curve(Interval domain, PositionFn position, DerivativeFn derivatives, DerivativeSource source,
             CurveInfo info)
    : domain_(domain),
      position_(std::move(position)),
      derivatives_(std::move(derivatives)),
      source_(source),
      info_(std::move(info)) {
  if (!(domain_.lo <= domain_.hi) || !std::isfinite(domain_.lo) || !std::isfinite(domain_.hi)) {
    throw DomainError("curve domain must be a finite interval with lo <= hi");
  }
  if (!position_) {
    throw ParameterError("curve needs a position evaluator");
  }
  if (source_ != DerivativeSource::FiniteDifference && !derivatives_) {
    throw ParameterError("curve declares a derivative evaluator but none was given");
  }
}

Curve Curve::closed_form(Interval domain, PositionFn position, CurveInfo info) {
  return Curve(domain, std::move(position), nullptr, DerivativeSource::FiniteDifference,
               std::move(info));
}

Curve Curve::restricted(Interval sub) const {
  if (!(sub.lo <= sub.hi) || !domain_.contains(sub.lo) || !domain_.contains(sub.hi)) {
    throw DomainError("[" + std::to_string(sub.lo) + ", " + std::to_string(sub.hi) +
                      "] is not inside the curve domain [" + std::to_string(domain_.lo) + ", " +
                      std::to_string(domain_.hi) + "]");
  }
  Curve out = *this;
  out.domain_ = sub;
  return out;
}

void Curve::require_in_domain(double s) const {
  if (!domain_.contains(s)) {
    throw DomainError("s=" + std::to_string(s) + " outside curve domain [" + std::to_string(domain_.lo) +
                      ", " + std::to_string(domain_.hi) + "]");
  }
}

GVec3 Curve::point(double s) const {
  require_in_domain(s);
  const Transverse p = position_(s);
  if (!std::isfinite(p.y) || !std::isfinite(p.z)) {
    throw NumericalError("non-finite curve point", s);
  }
  return {s, p.y, p.z};
}

GVec3 Curve::evaluator_derivative(double s, int order) const {
  require_in_domain(s);
  if (!derivatives_) {
    throw DomainError("curve has no derivative evaluator");
  }
  if (order < 1 || order > 3) {
    throw ParameterError("derivative order must be 1, 2 or 3");
  }
  const Transverse d = derivatives_(s, order);
  if (!std::isfinite(d.y) || !std::isfinite(d.z)) {
    throw NumericalError("non-finite derivative of order " + std::to_string(order), s);
  }
  return {order == 1 ? 1.0 : 0.0, d.y, d.z};
}

}  // namespace galcurve
