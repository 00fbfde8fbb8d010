#pragma once

#include <cmath>
#include <iosfwd>

#include "galcurve/errors.hpp"

namespace galcurve {

enum class Isotropy { NonIsotropic, Isotropic };

/// A vector of the Galilean 3-space. x1 is the Galilean ("time") component,
/// x2 and x3 are the Euclidean components. Components are always finite.
class GVec3 {
 public:
  constexpr GVec3() = default;
  GVec3(double x1, double x2, double x3) : x1_(x1), x2_(x2), x3_(x3) {
    if (!std::isfinite(x1) || !std::isfinite(x2) || !std::isfinite(x3)) {
      throw NumericalError("GVec3: non-finite component");
    }
  }

  double x1() const { return x1_; }
  double x2() const { return x2_; }
  double x3() const { return x3_; }
  double operator[](int i) const { return i == 0 ? x1_ : (i == 1 ? x2_ : x3_); }

  bool is_isotropic() const { return x1_ == 0.0; }

  friend GVec3 operator+(const GVec3& a, const GVec3& b) {
    return {a.x1_ + b.x1_, a.x2_ + b.x2_, a.x3_ + b.x3_};
  }
  friend GVec3 operator-(const GVec3& a, const GVec3& b) {
    return {a.x1_ - b.x1_, a.x2_ - b.x2_, a.x3_ - b.x3_};
  }
  friend GVec3 operator-(const GVec3& a) { return {-a.x1_, -a.x2_, -a.x3_}; }
  friend GVec3 operator*(double k, const GVec3& a) { return {k * a.x1_, k * a.x2_, k * a.x3_}; }
  friend GVec3 operator*(const GVec3& a, double k) { return k * a; }
  friend GVec3 operator/(const GVec3& a, double k) { return {a.x1_ / k, a.x2_ / k, a.x3_ / k}; }
  GVec3& operator+=(const GVec3& b) { return *this = *this + b; }

  friend bool operator==(const GVec3&, const GVec3&) = default;

 private:
  double x1_ = 0.0;
  double x2_ = 0.0;
  double x3_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const GVec3& v);

// Branch selection below compares the first components with exact == 0.
// Callers holding nearly isotropic numerical vectors must classify with
// their own tolerance.

/// Galilean inner product: p1*q1 if either first component is non-zero,
/// otherwise the Euclidean product of the (x2, x3) parts.
double dot(const GVec3& p, const GVec3& q);

/// Galilean cross product. With a non-isotropic operand the first row of the
/// determinant is (0, e2, e3); with two isotropic operands it is the ordinary
/// Euclidean cross product.
GVec3 cross(const GVec3& p, const GVec3& q);

/// |x1| for non-isotropic vectors, sqrt(x2^2 + x3^2) otherwise.
double norm(const GVec3& p);

Isotropy classify(const GVec3& p);

/// Largest absolute componentwise difference. Not a Galilean quantity; used
/// for tolerance checks.
double max_abs_diff(const GVec3& a, const GVec3& b);

}  // namespace galcurve
