#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "galcurve/expr.hpp"

namespace galcurve {

/// A real function of the arc length s: either a parsed expression or a
/// native callable. Immutable and safe to evaluate concurrently.
class ScalarFunction {
 public:
  using Native = std::function<double(double)>;

  explicit ScalarFunction(expr::Expression e);
  ScalarFunction(Native fn, std::string label);

  static ScalarFunction constant(double c);
  /// Parses text with the expression grammar; throws ParseError.
  static ScalarFunction parse(std::string_view text);

  /// Reports faults as values. Native callables that return a non-finite
  /// value report NonFiniteResult at offset 0.
  expr::EvalResult try_eval(double s) const;

  /// Throws expr::EvalError on a fault.
  double operator()(double s) const;

  /// k * f(s), keeping the evaluation order of a plain product.
  ScalarFunction scaled(double k) const;

  const std::string& label() const { return label_; }
  std::optional<double> constant_value() const { return constant_; }

 private:
  std::optional<expr::Expression> expression_;
  Native native_;
  std::string label_;
  std::optional<double> constant_;
};

}  // namespace galcurve
