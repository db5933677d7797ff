#pragma once

// Expressions defining f as a single-valued analytic function of one complex
// variable. Grammar:
//
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := "-" factor | power
//   power  := atom ("^" integer)?
//   atom   := number | "z" | ident "(" expr ")" | "(" expr ")"
//   ident  := sin | cos | tan | exp | sinh | cosh
//
// Numbers are decimal literals with an optional exponent and an optional "i"
// suffix for imaginary literals; a bare "i" is the imaginary unit.

#include <complex>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace apv {

using complex = std::complex<double>;

enum class Function { sin, cos, tan, exp, sinh, cosh };
enum class BinaryOp { add, subtract, multiply, divide };

std::string_view function_name(Function fn) noexcept;

class Expr;

namespace ast {

struct Number {
  double value;
  bool imaginary;
};
struct Variable {};
struct Negate;
struct Binary;
struct Power;
struct Call;

}  // namespace ast

/// Immutable expression tree with shared structure. Cheap to copy.
class Expr {
 public:
  struct Node;

  /// Default-constructed expression is the literal 0.
  Expr();

  static Expr number(double value, bool imaginary = false);
  static Expr variable();
  static Expr negate(Expr operand);
  static Expr binary(BinaryOp op, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);
  static Expr call(Function fn, Expr arg);

  const Node& node() const noexcept { return *node_; }

  /// Value at z, using the principal complex definitions of the elementary
  /// functions. Throws EvalError on division by zero.
  complex eval(complex z) const;

  /// Canonical text with minimal parentheses; re-parses to an equal tree.
  std::string to_string() const;

  /// True when the tree contains neither division nor tan, so the function
  /// it denotes is entire.
  bool is_entire() const;

  /// True when the tree does not reference z.
  bool is_constant() const;

  friend bool operator==(const Expr& lhs, const Expr& rhs);

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

namespace ast {

struct Negate {
  Expr operand;
};
struct Binary {
  BinaryOp op;
  Expr lhs;
  Expr rhs;
};
struct Power {
  Expr base;
  int exponent;
};
struct Call {
  Function fn;
  Expr arg;
};

}  // namespace ast

struct Expr::Node {
  std::variant<ast::Number, ast::Variable, ast::Negate, ast::Binary, ast::Power, ast::Call> value;
};

/// Parse source text. Throws ParseError (with byte offset and the set of
/// tokens that would have been accepted) or UnknownIdentifierError.
Expr parse(std::string_view source);

/// Comma-separated list of constant expressions, e.g. "i,-i" or "0.5+0.1i".
std::vector<complex> parse_point_list(std::string_view source);

/// Where f is known to be analytic. Either entire, or analytic except at the
/// listed poles (the user vouches for completeness near the interval).
class AnalyticityDecl {
 public:
  AnalyticityDecl() = default;

  static AnalyticityDecl entire_function() { return AnalyticityDecl(true, {}); }
  static AnalyticityDecl with_poles(std::vector<complex> poles) {
    return AnalyticityDecl(false, std::move(poles));
  }

  /// Throws DomainError if entire is set together with a nonempty pole list.
  AnalyticityDecl(bool entire, std::vector<complex> poles);

  bool entire() const noexcept { return entire_; }
  const std::vector<complex>& declared_poles() const noexcept { return poles_; }

 private:
  bool entire_ = true;
  std::vector<complex> poles_;
};

}  // namespace apv
