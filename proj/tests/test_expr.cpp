#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "galcurve/expr.hpp"
#include "galcurve/scalar_function.hpp"

using namespace galcurve;
using expr::FaultKind;

namespace {

double eval(const std::string& text, double s) {
  const expr::EvalResult r = expr::eval_expr(expr::parse(text), s);
  REQUIRE(r.ok());
  return r.value;
}

expr::EvalFault fault(const std::string& text, double s) {
  const expr::EvalResult r = expr::eval_expr(expr::parse(text), s);
  REQUIRE_FALSE(r.ok());
  return *r.fault;
}

ParseError parse_error(const std::string& text) {
  try {
    expr::parse(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for '" << text << "'");
  return ParseError("", 0, {});
}

}  // namespace

TEST_CASE("spec examples") {
  CHECK(eval("1/s", 2.0) == 0.5);
  CHECK(eval("exp(-s)", 0.0) == 1.0);
  CHECK(eval("2/s", 2.0) == 1.0);
  CHECK(eval("2", 123.0) == 2.0);

  const ParseError e = parse_error("sin(");
  CHECK(e.offset() == 4);
  CHECK(e.expected() == std::vector<std::string>{"expression"});

  const expr::EvalFault f = fault("ln(s)", 0.0);
  CHECK(f.kind == FaultKind::LogOfNonPositive);
  CHECK(f.offset == 0);
}

TEST_CASE("precedence and associativity") {
  CHECK(eval("2+3*4", 0) == 14.0);
  CHECK(eval("2^3^2", 0) == 512.0);
  CHECK(eval("-2^2", 0) == -4.0);
  CHECK(eval("(-2)^2", 0) == 4.0);
  CHECK(eval("2^-1", 0) == 0.5);
  CHECK(eval("8/4/2", 0) == 1.0);
  CHECK(eval("8-4-2", 0) == 2.0);
  CHECK(eval("--3", 0) == 3.0);
  CHECK(eval("2*-3", 0) == -6.0);
  CHECK(eval(" 1 +\t2 ", 0) == 3.0);
  CHECK(eval("1e-3*1e3", 0) == 1.0);
  CHECK(eval(".5+1.", 0) == 1.5);
}

TEST_CASE("syntax errors carry offset and expected tokens") {
  {
    const ParseError e = parse_error("1 +");
    CHECK(e.offset() == 3);
    CHECK(e.expected() == std::vector<std::string>{"expression"});
  }
  {
    const ParseError e = parse_error("(1+s");
    CHECK(e.offset() == 4);
    CHECK(e.expected() == std::vector<std::string>{"')'"});
  }
  {
    const ParseError e = parse_error("2 3");
    CHECK(e.offset() == 2);
  }
  {
    const ParseError e = parse_error("x+1");
    CHECK(e.offset() == 0);
    CHECK(std::string(e.what()).find("unknown identifier") != std::string::npos);
  }
  {
    const ParseError e = parse_error("sin s");
    CHECK(e.offset() == 4);
    CHECK(e.expected() == std::vector<std::string>{"'('"});
  }
  CHECK_THROWS_AS(expr::parse(""), ParseError);
  CHECK_THROWS_AS(expr::parse("1e999"), ParseError);
  CHECK_THROWS_AS(expr::parse("s)"), ParseError);
  CHECK_THROWS_AS(expr::parse("foo(s)"), ParseError);
  CHECK_THROWS_AS(expr::parse("*2"), ParseError);
}

TEST_CASE("evaluation faults are values") {
  CHECK(fault("1/(s-2)", 2.0).kind == FaultKind::DivisionByZero);
  CHECK(fault("1/(s-2)", 2.0).offset == 1);
  CHECK(fault("sqrt(s)", -1.0).kind == FaultKind::SqrtOfNegative);
  CHECK(fault("exp(s)", 1000.0).kind == FaultKind::NonFiniteResult);
  CHECK(fault("s^(1/3)", -8.0).kind == FaultKind::PowDomain);
  CHECK(fault("0^-1", 0.0).kind == FaultKind::DivisionByZero);
  CHECK(fault("1 + ln(s - 1)", 1.0).offset == 4);

  const ScalarFunction f = ScalarFunction::parse("ln(s)");
  CHECK_THROWS_AS(f(0.0), expr::EvalError);
  CHECK_FALSE(f.try_eval(-1.0).ok());
}

TEST_CASE("golden corpus values within 1e-15 relative") {
  struct Case {
    const char* text;
    double s;
    double want;
  };
  const std::vector<Case> cases{
      {"1/s", 0.5, 2.0},
      {"2/s", 4.0, 0.5},
      {"exp(-s)", 1.0, 0.36787944117144233},
      {"exp(-s)", 2.0, 0.1353352832366127},
      {"2", 0.3, 2.0},
      {"sqrt(s)", 2.0, 1.4142135623730951},
      {"abs(s)", -3.5, 3.5},
      {"ln(s)", 10.0, 2.302585092994046},
      {"sin(s)^2 + cos(s)^2", 0.7, 1.0},
      {"1/(1+s^2)", 2.0, 0.2},
      {"tan(s)", 0.0, 0.0},
  };
  for (const Case& c : cases) {
    CAPTURE(c.text);
    CHECK(std::abs(eval(c.text, c.s) - c.want) <= 1e-15 * std::abs(c.want) + 1e-300);
  }
}

TEST_CASE("property: parse(print(parse(x))) is a fixpoint on the corpus") {
  const std::vector<std::string> corpus{
      "1/s", "2/s", "exp(-s)", "2", "s", "-s", "--s", "1+2+3", "1-2-3", "1-(2-3)",
      "1*2*3", "1/2/3", "1/(2/3)", "2^3^2", "(2^3)^2", "-2^2", "(-2)^2", "2^-1", "2^-s^2", "s*-1",
      "1+-s", "1--s", "sin(s)", "cos(2*s)", "tan(s/4)", "exp(-s^2/2)", "ln(1+s)", "sqrt(1+s^2)", "abs(s-1)",
      "1/(1+s^2)", "3/(1+s^2)", "1/(1+s)", "exp(-s)*cos(2*s)", "-(s+1)", "(s+1)*(s-1)", "s^2-2*s+1",
      "2*ln(s)", "sin(2*ln(s))", "cos(ln(s))*sin(ln(s))", "0.5*sin(s)", "1e-3*s", "1.5e10/s",
      "((s))", "-(-(s))", "s^0.5", "s^(1/3)", "(1+s)^(-2)", "abs(-s)^2", "-abs(s)", "exp(sin(cos(s)))",
      "1-2*3^2/4+5", "(1-2)*(3+4)/5", "2*(s+1)^-2", "sqrt(abs(s))*exp(-abs(s))",
  };
  REQUIRE(corpus.size() >= 50);
  for (const std::string& text : corpus) {
    CAPTURE(text);
    const expr::Expression first = expr::parse(text);
    const std::string printed = expr::to_string(first);
    const expr::Expression second = expr::parse(printed);
    CHECK(first == second);
    CHECK(expr::to_string(second) == printed);
    // Same tree, same values.
    for (double s : {0.3, 1.7, 2.9}) {
      const auto a = expr::eval_expr(first, s);
      const auto b = expr::eval_expr(second, s);
      CHECK(a.ok() == b.ok());
      if (a.ok()) {
        CHECK(a.value == b.value);
      }
    }
  }
}

TEST_CASE("structural equality ignores offsets but not values") {
  CHECK(expr::parse("1 + s") == expr::parse("1+s"));
  CHECK_FALSE(expr::parse("1+s") == expr::parse("s+1"));
  CHECK_FALSE(expr::parse("0.1") == expr::parse("0.10000000000000002"));
}

TEST_CASE("scalar functions") {
  const ScalarFunction c = ScalarFunction::constant(2.5);
  CHECK(c(7.0) == 2.5);
  CHECK(c.constant_value() == 2.5);
  CHECK(ScalarFunction::parse("3").constant_value() == 3.0);
  CHECK_FALSE(ScalarFunction::parse("s").constant_value().has_value());
  CHECK(ScalarFunction::parse("s^2").scaled(3.0)(2.0) == 12.0);
  const ScalarFunction bad([](double) { return NAN; }, "nan");
  CHECK(bad.try_eval(0.0).fault->kind == FaultKind::NonFiniteResult);
}
