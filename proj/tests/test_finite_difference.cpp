#include <doctest.h>

#include <cmath>
#include <vector>

#include "galcurve/finite_difference.hpp"

using namespace galcurve;

namespace {

void check_weights(int order, std::vector<double> offsets, std::vector<double> want) {
  const std::vector<double> w = fd::fornberg_weights(order, offsets);
  REQUIRE(w.size() == want.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    CHECK(w[i] == doctest::Approx(want[i]).epsilon(1e-13));
  }
}

}  // namespace

TEST_CASE("central five-point weights") {
  check_weights(1, {-2, -1, 0, 1, 2}, {1.0 / 12, -2.0 / 3, 0, 2.0 / 3, -1.0 / 12});
  check_weights(2, {-2, -1, 0, 1, 2}, {-1.0 / 12, 4.0 / 3, -5.0 / 2, 4.0 / 3, -1.0 / 12});
  check_weights(3, {-2, -1, 0, 1, 2}, {-0.5, 1, 0, -1, 0.5});
}

TEST_CASE("one-sided weights") {
  check_weights(1, {0, 1, 2, 3, 4}, {-25.0 / 12, 4, -3, 4.0 / 3, -1.0 / 4});
  check_weights(3, {0, 1, 2, 3, 4}, {-5.0 / 2, 9, -12, 7, -3.0 / 2});
  CHECK_THROWS_AS(fd::fornberg_weights(3, std::vector<double>{0, 1, 2}), ParameterError);
}

TEST_CASE("stencil selection") {
  const Interval dom{0.0, 1.0};
  const fd::Stencil mid = fd::make_stencil(1, 0.5, 1e-3, dom);
  CHECK(mid.centered());

  const fd::Stencil left = fd::make_stencil(1, 0.0, 1e-3, dom);
  CHECK(left.first_offset == 0);
  CHECK(left.weights.size() == 5);

  const fd::Stencil near_left = fd::make_stencil(2, 0.001, 1e-3, dom);
  CHECK(near_left.first_offset == -1);
  CHECK(near_left.weights.size() == 6);

  const fd::Stencil right = fd::make_stencil(3, 1.0, 1e-3, dom);
  CHECK(right.first_offset == -4);
  CHECK(right.weights.size() == 5);

  CHECK_THROWS_AS(fd::make_stencil(1, 0.0, 1e-3, Interval{0.0, 0.002}), DomainError);
  CHECK_THROWS_AS(fd::make_stencil(1, 2.0, 1e-3, dom), DomainError);
  CHECK_THROWS_AS(fd::make_stencil(4, 0.5, 1e-3, dom), ParameterError);
}

TEST_CASE("step size") {
  CHECK(fd::default_step(0.0) == 1e-3);
  CHECK(fd::default_step(-0.5) == 1e-3);
  CHECK(fd::default_step(4.0) == doctest::Approx(4e-3));
}

TEST_CASE("polynomials are differentiated exactly up to stencil degree") {
  const Interval dom{-1.0, 1.0};
  auto quartic = [](double x) { return 3 * x * x * x * x - 2 * x * x * x + x - 5; };
  for (double s : {-1.0, -0.9995, 0.0, 0.3, 0.9999, 1.0}) {
    CAPTURE(s);
    CHECK(fd::derivative(quartic, s, 1, dom) ==
          doctest::Approx(12 * s * s * s - 6 * s * s + 1).epsilon(1e-7));
    CHECK(fd::derivative(quartic, s, 2, dom) == doctest::Approx(36 * s * s - 12 * s).epsilon(1e-6));
  }
  auto cubic = [](double x) { return 2 * x * x * x - x; };
  CHECK(fd::derivative(cubic, 0.2, 3, dom) == doctest::Approx(12.0).epsilon(1e-5));
  CHECK(fd::derivative(cubic, -1.0, 3, dom) == doctest::Approx(12.0).epsilon(1e-5));
}

TEST_CASE("observed convergence order of the central stencils") {
  auto f = [](double x) { return std::sin(x); };
  const Interval dom{-10, 10};
  const double s = 0.7;
  const double exact[4] = {0, std::cos(s), -std::sin(s), -std::cos(s)};
  const double expected_ratio[4] = {0, 16, 16, 4};
  const double h[4] = {0, 0.1, 0.1, 0.05};
  for (int order = 1; order <= 3; ++order) {
    const auto err = [&](double step) {
      const fd::Stencil st = fd::make_stencil(order, s, step, dom);
      return std::abs(fd::apply(st, s, f) - exact[order]);
    };
    const double ratio = err(h[order]) / err(h[order] / 2);
    CAPTURE(order);
    CHECK(ratio == doctest::Approx(expected_ratio[order]).epsilon(0.1));
  }
}
