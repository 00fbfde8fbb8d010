#pragma once

// Expressions in one variable s, used for user-supplied curvature and
// torsion functions.
//
// Grammar (whitespace ignored):
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := '-' unary | power
//   power := atom ('^' unary)?
//   atom  := number | 's' | func '(' expr ')' | '(' expr ')'
//   func  := sin | cos | tan | exp | ln | sqrt | abs
//
// '^' is right-associative and binds tighter than unary minus, so
// "-2^2" is -4 and "2^3^2" is 512. An exponent may carry its own sign:
// "2^-1" is 0.5.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "galcurve/errors.hpp"

namespace galcurve::expr {

enum class BinaryOp { Add, Sub, Mul, Div, Pow };
enum class Function { Sin, Cos, Tan, Exp, Ln, Sqrt, Abs };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

struct Number {
  double value;
};
struct Variable {};
struct Negate {
  NodePtr operand;
};
struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};
struct Call {
  Function fn;
  NodePtr arg;
};

struct Node {
  std::variant<Number, Variable, Negate, Binary, Call> kind;
  std::size_t offset = 0;  // byte offset of the token that introduced the node
};

/// Immutable parsed expression. Copies share the tree.
class Expression {
 public:
  explicit Expression(NodePtr root) : root_(std::move(root)) {}
  const Node& root() const { return *root_; }

  /// Structural equality; source offsets are ignored and literals compare
  /// by value.
  friend bool operator==(const Expression& a, const Expression& b);

 private:
  NodePtr root_;
};

/// Throws ParseError with the byte offset and the set of expected tokens.
Expression parse(std::string_view text);

/// Canonical text with the minimum parentheses needed to reparse into the
/// same tree.
std::string to_string(const Expression& e);

std::string_view function_name(Function fn);

enum class FaultKind { DivisionByZero, LogOfNonPositive, SqrtOfNegative, PowDomain, NonFiniteResult };

std::string_view fault_name(FaultKind kind);

struct EvalFault {
  std::size_t offset;
  FaultKind kind;
};

struct EvalResult {
  double value = 0.0;
  std::optional<EvalFault> fault;

  bool ok() const { return !fault.has_value(); }
};

/// Never throws; a domain fault or non-finite intermediate is reported in
/// the result together with the offending node's offset.
EvalResult eval_expr(const Expression& e, double s);

class EvalError : public Error {
 public:
  EvalError(EvalFault fault, double s, const std::string& source = {});
  const EvalFault& fault() const { return fault_; }
  double s() const { return s_; }

 private:
  EvalFault fault_;
  double s_;
};

}  // namespace galcurve::expr
