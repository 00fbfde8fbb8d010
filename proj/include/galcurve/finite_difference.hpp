#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "galcurve/errors.hpp"
#include "galcurve/interval.hpp"

namespace galcurve::fd {

/// h = 1e-3 * max(1, |s|).
inline double default_step(double s) { return 1e-3 * std::max(1.0, std::abs(s)); }

/// Weights of the derivative of the given order at 0 for nodes at the given
/// (unit-spaced) offsets, by Fornberg's recursion.
std::vector<double> fornberg_weights(int order, std::span<const double> offsets);

/// A uniform stencil: nodes at s + (first_offset + i) * step, and
/// f^(order)(s) ~ sum_i weights[i] * f(node_i) / step^order.
struct Stencil {
  int order = 1;
  int first_offset = -2;
  double step = 0.0;
  std::vector<double> weights;

  bool centered() const { return first_offset == -2 && weights.size() == 5; }
  double node(double s, std::size_t i) const {
    return s + static_cast<double>(first_offset + static_cast<int>(i)) * step;
  }
};

/// Picks the 5-point central stencil (4th order for orders 1 and 2, 2nd
/// order for order 3). When it would leave the domain the window slides
/// inward; order 2 then uses 6 points to stay 4th order. Throws DomainError
/// when no window fits.
Stencil make_stencil(int order, double s, double step, const Interval& domain);

template <class F>
auto apply(const Stencil& st, double s, F&& f) {
  using T = decltype(f(s));
  T acc = st.weights[0] * f(st.node(s, 0));
  for (std::size_t i = 1; i < st.weights.size(); ++i) {
    acc = acc + st.weights[i] * f(st.node(s, i));
  }
  return acc * (1.0 / std::pow(st.step, st.order));
}

/// Finite-difference derivative of f at s, staying inside domain.
template <class F>
auto derivative(F&& f, double s, int order, const Interval& domain) {
  const Stencil st = make_stencil(order, s, default_step(s), domain);
  return apply(st, s, std::forward<F>(f));
}

}  // namespace galcurve::fd
