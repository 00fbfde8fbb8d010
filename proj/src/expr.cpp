#include "galcurve/expr.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <utility>

namespace galcurve::expr {
namespace {

constexpr std::array<std::pair<std::string_view, Function>, 7> kFunctions{{
    {"sin", Function::Sin},
    {"cos", Function::Cos},
    {"tan", Function::Tan},
    {"exp", Function::Exp},
    {"ln", Function::Ln},
    {"sqrt", Function::Sqrt},
    {"abs", Function::Abs},
}};

bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_ident_char(char c) { return is_ident_start(c) || is_digit(c); }

NodePtr make(std::size_t offset, auto kind) {
  return std::make_shared<const Node>(Node{std::move(kind), offset});
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression run() {
    NodePtr root = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'",
           {"operator", "end of input"});
    }
    return Expression(std::move(root));
  }

 private:
  [[noreturn]] void fail(std::string message, std::vector<std::string> expected) const {
    throw ParseError(std::move(message), pos_, std::move(expected));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = make(at, Binary{BinaryOp::Add, lhs, parse_term()});
      } else if (accept('-')) {
        lhs = make(at, Binary{BinaryOp::Sub, lhs, parse_term()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = make(at, Binary{BinaryOp::Mul, lhs, parse_unary()});
      } else if (accept('/')) {
        lhs = make(at, Binary{BinaryOp::Div, lhs, parse_unary()});
      } else {
        return lhs;
      }
    }
  }

  NodePtr parse_unary() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      return make(at, Negate{parse_unary()});
    }
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_atom();
    skip_ws();
    const std::size_t at = pos_;
    if (accept('^')) {
      return make(at, Binary{BinaryOp::Pow, base, parse_unary()});
    }
    return base;
  }

  NodePtr parse_atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ == text_.size()) {
      fail("unexpected end of input", {"expression"});
    }
    const char c = text_[pos_];
    if (is_digit(c) || c == '.') {
      return parse_number();
    }
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!accept(')')) {
        fail(pos_ == text_.size() ? "unexpected end of input" : "unbalanced parenthesis", {"')'"});
      }
      return inner;
    }
    if (is_ident_start(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && is_ident_char(text_[end])) {
        ++end;
      }
      const std::string_view ident = text_.substr(pos_, end - pos_);
      if (ident == "s") {
        pos_ = end;
        return make(at, Variable{});
      }
      for (const auto& [name, fn] : kFunctions) {
        if (ident == name) {
          pos_ = end;
          if (!accept('(')) {
            fail("function '" + std::string(name) + "' requires an argument", {"'('"});
          }
          NodePtr arg = parse_expr();
          if (!accept(')')) {
            fail(pos_ == text_.size() ? "unexpected end of input" : "unbalanced parenthesis", {"')'"});
          }
          return make(at, Call{fn, std::move(arg)});
        }
      }
      fail("unknown identifier '" + std::string(ident) + "'", {"s", "function name"});
    }
    fail("unexpected '" + std::string(1, c) + "'", {"expression"});
  }

  NodePtr parse_number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    bool digits = false;
    while (end < text_.size() && is_digit(text_[end])) {
      ++end;
      digits = true;
    }
    if (end < text_.size() && text_[end] == '.') {
      ++end;
      while (end < text_.size() && is_digit(text_[end])) {
        ++end;
        digits = true;
      }
    }
    if (!digits) {
      fail("malformed number", {"digit"});
    }
    // Exponent only when digits follow, so "2e" leaves 'e' for the
    // identifier rule.
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) {
        ++exp;
      }
      if (exp < text_.size() && is_digit(text_[exp])) {
        while (exp < text_.size() && is_digit(text_[exp])) {
          ++exp;
        }
        end = exp;
      }
    }
    double value = 0.0;
    const char* first = text_.data() + at;
    const char* last = text_.data() + end;
    // from_chars rejects a leading '+' but accepts the forms scanned above.
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
      fail("number out of range", {"finite number"});
    }
    pos_ = end;
    return make(at, Number{value});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool equal_nodes(const Node& a, const Node& b) {
  if (a.kind.index() != b.kind.index()) {
    return false;
  }
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b.kind);
        if constexpr (std::is_same_v<T, Number>) {
          return std::bit_cast<std::uint64_t>(x.value) == std::bit_cast<std::uint64_t>(y.value);
        } else if constexpr (std::is_same_v<T, Variable>) {
          return true;
        } else if constexpr (std::is_same_v<T, Negate>) {
          return equal_nodes(*x.operand, *y.operand);
        } else if constexpr (std::is_same_v<T, Binary>) {
          return x.op == y.op && equal_nodes(*x.lhs, *y.lhs) && equal_nodes(*x.rhs, *y.rhs);
        } else {
          return x.fn == y.fn && equal_nodes(*x.arg, *y.arg);
        }
      },
      a.kind);
}

// Binding strength used by the printer: 1 additive, 2 multiplicative,
// 3 unary minus, 4 power, 5 atom.
int strength(const Node& n) {
  if (const auto* b = std::get_if<Binary>(&n.kind)) {
    switch (b->op) {
      case BinaryOp::Add:
      case BinaryOp::Sub:
        return 1;
      case BinaryOp::Mul:
      case BinaryOp::Div:
        return 2;
      case BinaryOp::Pow:
        return 4;
    }
  }
  if (std::holds_alternative<Negate>(n.kind)) {
    return 3;
  }
  return 5;
}

std::string format_literal(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void print(const Node& n, std::string& out);

void print_at_least(const Node& n, int min_strength, std::string& out) {
  if (strength(n) < min_strength) {
    out += '(';
    print(n, out);
    out += ')';
  } else {
    print(n, out);
  }
}

void print(const Node& n, std::string& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Number>) {
          out += format_literal(x.value);
        } else if constexpr (std::is_same_v<T, Variable>) {
          out += 's';
        } else if constexpr (std::is_same_v<T, Negate>) {
          out += '-';
          print_at_least(*x.operand, 3, out);
        } else if constexpr (std::is_same_v<T, Binary>) {
          switch (x.op) {
            case BinaryOp::Add:
            case BinaryOp::Sub:
              print_at_least(*x.lhs, 1, out);
              out += x.op == BinaryOp::Add ? " + " : " - ";
              print_at_least(*x.rhs, 2, out);
              break;
            case BinaryOp::Mul:
            case BinaryOp::Div:
              print_at_least(*x.lhs, 2, out);
              out += x.op == BinaryOp::Mul ? '*' : '/';
              print_at_least(*x.rhs, 3, out);
              break;
            case BinaryOp::Pow:
              print_at_least(*x.lhs, 5, out);
              out += '^';
              print_at_least(*x.rhs, 3, out);
              break;
          }
        } else {
          out += function_name(x.fn);
          out += '(';
          print(*x.arg, out);
          out += ')';
        }
      },
      n.kind);
}

struct Evaluator {
  double s;
  std::optional<EvalFault> fault;

  double fault_at(const Node& n, FaultKind kind) {
    if (!fault) {
      fault = EvalFault{n.offset, kind};
    }
    return 0.0;
  }

  double checked(const Node& n, double v) {
    return std::isfinite(v) ? v : fault_at(n, FaultKind::NonFiniteResult);
  }

  double eval(const Node& n) {
    if (fault) {
      return 0.0;
    }
    return std::visit(
        [&](const auto& x) -> double {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Number>) {
            return x.value;
          } else if constexpr (std::is_same_v<T, Variable>) {
            return checked(n, s);
          } else if constexpr (std::is_same_v<T, Negate>) {
            return -eval(*x.operand);
          } else if constexpr (std::is_same_v<T, Binary>) {
            const double a = eval(*x.lhs);
            const double b = eval(*x.rhs);
            if (fault) {
              return 0.0;
            }
            switch (x.op) {
              case BinaryOp::Add:
                return checked(n, a + b);
              case BinaryOp::Sub:
                return checked(n, a - b);
              case BinaryOp::Mul:
                return checked(n, a * b);
              case BinaryOp::Div:
                if (b == 0.0) {
                  return fault_at(n, FaultKind::DivisionByZero);
                }
                return checked(n, a / b);
              case BinaryOp::Pow: {
                if (a == 0.0 && b < 0.0) {
                  return fault_at(n, FaultKind::DivisionByZero);
                }
                const double r = std::pow(a, b);
                if (std::isnan(r)) {
                  return fault_at(n, FaultKind::PowDomain);
                }
                return checked(n, r);
              }
            }
            return 0.0;
          } else {
            const double a = eval(*x.arg);
            if (fault) {
              return 0.0;
            }
            switch (x.fn) {
              case Function::Sin:
                return checked(n, std::sin(a));
              case Function::Cos:
                return checked(n, std::cos(a));
              case Function::Tan:
                return checked(n, std::tan(a));
              case Function::Exp:
                return checked(n, std::exp(a));
              case Function::Ln:
                if (a <= 0.0) {
                  return fault_at(n, FaultKind::LogOfNonPositive);
                }
                return checked(n, std::log(a));
              case Function::Sqrt:
                if (a < 0.0) {
                  return fault_at(n, FaultKind::SqrtOfNegative);
                }
                return std::sqrt(a);
              case Function::Abs:
                return std::abs(a);
            }
            return 0.0;
          }
        },
        n.kind);
  }
};

}  // namespace

bool operator==(const Expression& a, const Expression& b) { return equal_nodes(a.root(), b.root()); }

Expression parse(std::string_view text) { return Parser(text).run(); }

std::string to_string(const Expression& e) {
  std::string out;
  print(e.root(), out);
  return out;
}

std::string_view function_name(Function fn) {
  for (const auto& [name, f] : kFunctions) {
    if (f == fn) {
      return name;
    }
  }
  return "?";
}

std::string_view fault_name(FaultKind kind) {
  switch (kind) {
    case FaultKind::DivisionByZero:
      return "division by zero";
    case FaultKind::LogOfNonPositive:
      return "logarithm of a non-positive value";
    case FaultKind::SqrtOfNegative:
      return "square root of a negative value";
    case FaultKind::PowDomain:
      return "power outside its real domain";
    case FaultKind::NonFiniteResult:
      return "non-finite result";
  }
  return "unknown fault";
}

EvalResult eval_expr(const Expression& e, double s) {
  Evaluator ev{s, std::nullopt};
  const double v = ev.eval(e.root());
  if (ev.fault) {
    return {0.0, ev.fault};
  }
  return {v, std::nullopt};
}

EvalError::EvalError(EvalFault fault, double s, const std::string& source)
    : Error(std::string(fault_name(fault.kind)) + " at offset " + std::to_string(fault.offset) +
            (source.empty() ? std::string() : " of '" + source + "'") + " (s=" + std::to_string(s) + ")"),
      fault_(fault),
      s_(s) {}

}  // namespace galcurve::expr
