#include "galcurve/finite_difference.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace galcurve::fd {

std::vector<double> fornberg_weights(int order, std::span<const double> offsets) {
  const int n = static_cast<int>(offsets.size());
  if (order < 0 || order >= n) {
    throw ParameterError("fornberg_weights: need more nodes than the derivative order");
  }
  // c[i][k]: weight of node i for derivative k.
  std::vector<std::vector<double>> c(n, std::vector<double>(order + 1, 0.0));
  double c1 = 1.0;
  double c4 = offsets[0];
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = offsets[i];
    for (int j = 0; j < i; ++j) {
      const double c3 = offsets[i] - offsets[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = c[i][order];
  }
  return w;
}

namespace {

bool fits(double s, double step, int first, int count, const Interval& domain) {
  return s + first * step >= domain.lo && s + (first + count - 1) * step <= domain.hi;
}

Stencil build(int order, int first, int count, double step) {
  std::vector<double> offsets(count);
  for (int i = 0; i < count; ++i) {
    offsets[i] = first + i;
  }
  return Stencil{order, first, step, fornberg_weights(order, offsets)};
}

}  // namespace

Stencil make_stencil(int order, double s, double step, const Interval& domain) {
  if (order < 1 || order > 3) {
    throw ParameterError("derivative order must be 1, 2 or 3");
  }
  if (!domain.contains(s)) {
    throw DomainError("stencil centre " + std::to_string(s) + " outside domain");
  }
  if (fits(s, step, -2, 5, domain)) {
    return build(order, -2, 5, step);
  }
  const int count = order == 2 ? 6 : 5;
  // Slide from the most central window outward; the first that fits wins.
  std::vector<int> firsts;
  for (int first = -(count - 1); first <= 0; ++first) {
    firsts.push_back(first);
  }
  const double centre = -(count - 1) / 2.0;
  std::stable_sort(firsts.begin(), firsts.end(), [centre](int a, int b) {
    return std::abs(a - centre) < std::abs(b - centre);
  });
  for (int first : firsts) {
    if (fits(s, step, first, count, domain)) {
      return build(order, first, count, step);
    }
  }
  throw DomainError("finite-difference stencil does not fit in the domain at s=" + std::to_string(s));
}

}  // namespace galcurve::fd
