#include "galcurve/scalar_function.hpp"

#include <charconv>
#include <cmath>

namespace galcurve {

ScalarFunction::ScalarFunction(expr::Expression e)
    : expression_(std::move(e)), label_(expr::to_string(*expression_)) {
  if (const auto* n = std::get_if<expr::Number>(&expression_->root().kind)) {
    constant_ = n->value;
  }
}

ScalarFunction::ScalarFunction(Native fn, std::string label)
    : native_(std::move(fn)), label_(std::move(label)) {}

ScalarFunction ScalarFunction::constant(double c) {
  if (!std::isfinite(c)) {
    throw ParameterError("constant function must be finite");
  }
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, c);
  ScalarFunction f([c](double) { return c; }, std::string(buf, ptr));
  f.constant_ = c;
  return f;
}

ScalarFunction ScalarFunction::parse(std::string_view text) {
  return ScalarFunction(expr::parse(text));
}

expr::EvalResult ScalarFunction::try_eval(double s) const {
  if (expression_) {
    return expr::eval_expr(*expression_, s);
  }
  const double v = native_(s);
  if (!std::isfinite(v)) {
    return {0.0, expr::EvalFault{0, expr::FaultKind::NonFiniteResult}};
  }
  return {v, std::nullopt};
}

double ScalarFunction::operator()(double s) const {
  const expr::EvalResult r = try_eval(s);
  if (!r.ok()) {
    throw expr::EvalError(*r.fault, s, label_);
  }
  return r.value;
}

ScalarFunction ScalarFunction::scaled(double k) const {
  ScalarFunction base = *this;
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, k);
  ScalarFunction f([k, base](double s) { return k * base(s); },
                   std::string(buf, ptr) + "*(" + label_ + ")");
  if (constant_) {
    f.constant_ = k * *constant_;
  }
  return f;
}

}  // namespace galcurve
