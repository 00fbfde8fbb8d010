#include "galcurve/gal3.hpp"

#include <algorithm>
#include <ostream>

namespace galcurve {

KappaTooSmall::KappaTooSmall(double s, double kappa)
    : NumericalError("curvature " + std::to_string(kappa) + " below frame guard at s=" +
                         std::to_string(s),
                     s),
      kappa_(kappa) {}

ParseError::ParseError(std::string message, std::size_t offset, std::vector<std::string> expected)
    : Error(message + " at offset " + std::to_string(offset)),
      message_(std::move(message)),
      offset_(offset),
      expected_(std::move(expected)) {}

std::ostream& operator<<(std::ostream& os, const GVec3& v) {
  return os << '(' << v.x1() << ", " << v.x2() << ", " << v.x3() << ')';
}

double dot(const GVec3& p, const GVec3& q) {
  if (p.x1() != 0.0 || q.x1() != 0.0) {
    return p.x1() * q.x1();
  }
  return p.x2() * q.x2() + p.x3() * q.x3();
}

GVec3 cross(const GVec3& p, const GVec3& q) {
  const double e2 = p.x3() * q.x1() - p.x1() * q.x3();
  const double e3 = p.x1() * q.x2() - p.x2() * q.x1();
  if (p.x1() != 0.0 || q.x1() != 0.0) {
    return {0.0, e2, e3};
  }
  // Both isotropic: the e2/e3 minors vanish and only e1 survives, but the
  // full Euclidean expansion is kept so the branch is literally the
  // ordinary cross product.
  return {p.x2() * q.x3() - p.x3() * q.x2(), e2, e3};
}

double norm(const GVec3& p) {
  if (p.x1() != 0.0) {
    return std::abs(p.x1());
  }
  return std::hypot(p.x2(), p.x3());
}

Isotropy classify(const GVec3& p) {
  return p.is_isotropic() ? Isotropy::Isotropic : Isotropy::NonIsotropic;
}

double max_abs_diff(const GVec3& a, const GVec3& b) {
  return std::max({std::abs(a.x1() - b.x1()), std::abs(a.x2() - b.x2()),
                   std::abs(a.x3() - b.x3())});
}

}  // namespace galcurve
