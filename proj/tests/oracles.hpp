#pragma once

// Test-only reference computations, independent of the library's
// integration and differentiation paths.

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>

namespace oracle {

/// Composite 5-point Gauss-Legendre quadrature of f over [a, b].
inline double integrate(const std::function<double(double)>& f, double a, double b, int panels = 400) {
  static constexpr std::array<double, 5> x{0.0, -0.5384693101056831, 0.5384693101056831, -0.9061798459386640,
                                           0.9061798459386640};
  static constexpr std::array<double, 5> w{0.5688888888888889, 0.4786286704993665, 0.4786286704993665,
                                           0.2369268850561891, 0.2369268850561891};
  if (a == b) {
    return 0.0;
  }
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    double panel = 0.0;
    for (int i = 0; i < 5; ++i) {
      panel += w[i] * f(mid + 0.5 * h * x[i]);
    }
    sum += 0.5 * h * panel;
  }
  return sum;
}

struct Position {
  double y;
  double z;
  double yp;
  double zp;
};

/// Position and tangent of the curve with curvature kappa and turning angle
/// theta (theta' = tau, theta(s0) = 0), every antiderivative zero at s0.
/// Uses the repeated-integration identity
///   y(s) = int_{s0}^{s} (s - t) kappa(t) cos(theta(t)) dt.
inline Position position(const std::function<double(double)>& kappa, const std::function<double(double)>& theta,
                         double s0, double s) {
  Position p{};
  p.y = integrate([&](double t) { return (s - t) * kappa(t) * std::cos(theta(t)); }, s0, s);
  p.z = integrate([&](double t) { return (s - t) * kappa(t) * std::sin(theta(t)); }, s0, s);
  p.yp = integrate([&](double t) { return kappa(t) * std::cos(theta(t)); }, s0, s);
  p.zp = integrate([&](double t) { return kappa(t) * std::sin(theta(t)); }, s0, s);
  return p;
}

/// Deterministic generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  bool coin() { return std::bernoulli_distribution(0.5)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace oracle
