#include "apv/expr.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <utility>

#include "apv/error.hpp"

namespace apv {

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
    : Error(what), offset_(offset), expected_(std::move(expected)) {}

UnknownIdentifierError::UnknownIdentifierError(std::size_t offset, std::string name)
    : ParseError(offset, {"sin", "cos", "tan", "exp", "sinh", "cosh", "z"},
                 "unknown identifier '" + name + "' at offset " + std::to_string(offset)),
      name_(std::move(name)) {}

EvalError::EvalError(complex z, std::string subexpression)
    : Error("division by zero in '" + subexpression + "' at z = " + format_complex(z)),
      point_(z),
      subexpression_(std::move(subexpression)) {}

namespace {

// Shortest text that reads back to the same double.
std::string shortest(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_complex(complex z) {
  const std::string im = shortest(z.imag());
  return shortest(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

std::string_view function_name(Function fn) noexcept {
  switch (fn) {
    case Function::sin: return "sin";
    case Function::cos: return "cos";
    case Function::tan: return "tan";
    case Function::exp: return "exp";
    case Function::sinh: return "sinh";
    case Function::cosh: return "cosh";
  }
  return "?";
}

AnalyticityDecl::AnalyticityDecl(bool entire, std::vector<complex> poles)
    : entire_(entire), poles_(std::move(poles)) {
  if (entire_ && !poles_.empty()) {
    throw DomainError("an entire function cannot have declared poles");
  }
  for (const auto& p : poles_) {
    if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) {
      throw DomainError("declared pole is not finite");
    }
  }
}

// ---------------------------------------------------------------------------
// Construction

Expr::Expr() : Expr(number(0.0)) {}

Expr Expr::number(double value, bool imaginary) {
  return Expr(std::make_shared<const Node>(Node{ast::Number{value, imaginary}}));
}

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Node{ast::Variable{}})); }

Expr Expr::negate(Expr operand) {
  return Expr(std::make_shared<const Node>(Node{ast::Negate{std::move(operand)}}));
}

Expr Expr::binary(BinaryOp op, Expr lhs, Expr rhs) {
  return Expr(std::make_shared<const Node>(Node{ast::Binary{op, std::move(lhs), std::move(rhs)}}));
}

Expr Expr::power(Expr base, int exponent) {
  if (exponent < 0) throw DomainError("exponent must be a nonnegative integer");
  return Expr(std::make_shared<const Node>(Node{ast::Power{std::move(base), exponent}}));
}

Expr Expr::call(Function fn, Expr arg) {
  return Expr(std::make_shared<const Node>(Node{ast::Call{fn, std::move(arg)}}));
}

// ---------------------------------------------------------------------------
// Structural equality

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

bool operator==(const Expr& lhs, const Expr& rhs) {
  if (lhs.node_ == rhs.node_) return true;
  const auto& a = lhs.node().value;
  const auto& b = rhs.node().value;
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&](const ast::Number& x) {
            const auto& y = std::get<ast::Number>(b);
            return x.imaginary == y.imaginary && x.value == y.value;
          },
          [&](const ast::Variable&) { return true; },
          [&](const ast::Negate& x) { return x.operand == std::get<ast::Negate>(b).operand; },
          [&](const ast::Binary& x) {
            const auto& y = std::get<ast::Binary>(b);
            return x.op == y.op && x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [&](const ast::Power& x) {
            const auto& y = std::get<ast::Power>(b);
            return x.exponent == y.exponent && x.base == y.base;
          },
          [&](const ast::Call& x) {
            const auto& y = std::get<ast::Call>(b);
            return x.fn == y.fn && x.arg == y.arg;
          },
      },
      a);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

complex integer_power(complex base, int exponent) {
  complex result{1.0, 0.0};
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent) base *= base;
  }
  return result;
}

complex eval_node(const Expr& e, complex z) {
  return std::visit(
      overloaded{
          [&](const ast::Number& x) {
            return x.imaginary ? complex{0.0, x.value} : complex{x.value, 0.0};
          },
          [&](const ast::Variable&) { return z; },
          [&](const ast::Negate& x) { return -eval_node(x.operand, z); },
          [&](const ast::Binary& x) {
            const complex l = eval_node(x.lhs, z);
            const complex r = eval_node(x.rhs, z);
            switch (x.op) {
              case BinaryOp::add: return l + r;
              case BinaryOp::subtract: return l - r;
              case BinaryOp::multiply: return l * r;
              case BinaryOp::divide:
                if (r == complex{}) throw EvalError(z, x.rhs.to_string());
                return l / r;
            }
            return complex{};
          },
          [&](const ast::Power& x) { return integer_power(eval_node(x.base, z), x.exponent); },
          [&](const ast::Call& x) {
            const complex w = eval_node(x.arg, z);
            switch (x.fn) {
              case Function::sin: return std::sin(w);
              case Function::cos: return std::cos(w);
              case Function::tan: {
                const complex c = std::cos(w);
                if (c == complex{}) throw EvalError(z, "cos(" + x.arg.to_string() + ")");
                return std::sin(w) / c;
              }
              case Function::exp: return std::exp(w);
              case Function::sinh: return std::sinh(w);
              case Function::cosh: return std::cosh(w);
            }
            return complex{};
          },
      },
      e.node().value);
}

}  // namespace

complex Expr::eval(complex z) const { return eval_node(*this, z); }

bool Expr::is_entire() const {
  return std::visit(overloaded{
                        [](const ast::Number&) { return true; },
                        [](const ast::Variable&) { return true; },
                        [](const ast::Negate& x) { return x.operand.is_entire(); },
                        [](const ast::Binary& x) {
                          return x.op != BinaryOp::divide && x.lhs.is_entire() && x.rhs.is_entire();
                        },
                        [](const ast::Power& x) { return x.base.is_entire(); },
                        [](const ast::Call& x) { return x.fn != Function::tan && x.arg.is_entire(); },
                    },
                    node().value);
}

bool Expr::is_constant() const {
  return std::visit(overloaded{
                        [](const ast::Number&) { return true; },
                        [](const ast::Variable&) { return false; },
                        [](const ast::Negate& x) { return x.operand.is_constant(); },
                        [](const ast::Binary& x) { return x.lhs.is_constant() && x.rhs.is_constant(); },
                        [](const ast::Power& x) { return x.base.is_constant(); },
                        [](const ast::Call& x) { return x.arg.is_constant(); },
                    },
                    node().value);
}

// ---------------------------------------------------------------------------
// Printing
//
// Precedence levels: 1 sum, 2 product, 3 unary minus, 4 power, 5 atom.

namespace {

int precedence(const Expr& e) {
  return std::visit(overloaded{
                        [](const ast::Number&) { return 5; },
                        [](const ast::Variable&) { return 5; },
                        [](const ast::Call&) { return 5; },
                        [](const ast::Power&) { return 4; },
                        [](const ast::Negate&) { return 3; },
                        [](const ast::Binary& x) {
                          return (x.op == BinaryOp::add || x.op == BinaryOp::subtract) ? 1 : 2;
                        },
                    },
                    e.node().value);
}

void print(const Expr& e, int min_level, std::string& out);

void print_child(const Expr& e, int min_level, std::string& out) {
  if (precedence(e) < min_level) {
    out += '(';
    print(e, 0, out);
    out += ')';
  } else {
    print(e, min_level, out);
  }
}

std::string format_literal(double v) { return shortest(v); }

void print(const Expr& e, int, std::string& out) {
  std::visit(overloaded{
                 [&](const ast::Number& x) {
                   out += format_literal(x.value);
                   if (x.imaginary) out += 'i';
                 },
                 [&](const ast::Variable&) { out += 'z'; },
                 [&](const ast::Negate& x) {
                   out += '-';
                   print_child(x.operand, 3, out);
                 },
                 [&](const ast::Binary& x) {
                   const bool sum = x.op == BinaryOp::add || x.op == BinaryOp::subtract;
                   const int level = sum ? 1 : 2;
                   print_child(x.lhs, level, out);
                   switch (x.op) {
                     case BinaryOp::add: out += " + "; break;
                     case BinaryOp::subtract: out += " - "; break;
                     case BinaryOp::multiply: out += '*'; break;
                     case BinaryOp::divide: out += '/'; break;
                   }
                   print_child(x.rhs, level + 1, out);
                 },
                 [&](const ast::Power& x) {
                   print_child(x.base, 5, out);
                   out += '^';
                   out += std::to_string(x.exponent);
                 },
                 [&](const ast::Call& x) {
                   out += function_name(x.fn);
                   out += '(';
                   print(x.arg, 0, out);
                   out += ')';
                 },
             },
             e.node().value);
}

}  // namespace

std::string Expr::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, comma, end };

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double value = 0.0;
  bool imaginary = false;
  bool integer = false;
};

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (pos_ < src_.size() && (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' ||
                                  src_[pos_] == '\r')) {
      ++pos_;
    }
    const std::size_t start = pos_;
    if (pos_ >= src_.size()) return {Tok::end, start, {}};
    const char c = src_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      return Token{k, start, src_.substr(start, 1)};
    };
    switch (c) {
      case '+': return single(Tok::plus);
      case '-': return single(Tok::minus);
      case '*': return single(Tok::star);
      case '/': return single(Tok::slash);
      case '^': return single(Tok::caret);
      case '(': return single(Tok::lparen);
      case ')': return single(Tok::rparen);
      case ',': return single(Tok::comma);
      default: break;
    }
    if (is_digit(c) || (c == '.' && pos_ + 1 < src_.size() && is_digit(src_[pos_ + 1]))) {
      return lex_number(start);
    }
    if (is_alpha(c)) {
      while (pos_ < src_.size() && (is_alpha(src_[pos_]) || is_digit(src_[pos_]))) ++pos_;
      return {Tok::ident, start, src_.substr(start, pos_ - start)};
    }
    throw ParseError(start, {"number", "z", "function", "(", "-"},
                     std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(start));
  }

 private:
  Token lex_number(std::size_t start) {
    bool integer = true;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      integer = false;
      ++pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < src_.size() && (src_[p] == '+' || src_[p] == '-')) ++p;
      if (p < src_.size() && is_digit(src_[p])) {
        integer = false;
        pos_ = p;
        while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      }
    }
    const std::string_view digits = src_.substr(start, pos_ - start);
    double value = 0.0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (res.ec != std::errc{} || !std::isfinite(value)) {
      throw ParseError(start, {"finite number"},
                       "numeric literal out of range at offset " + std::to_string(start));
    }
    bool imaginary = false;
    if (pos_ < src_.size() && src_[pos_] == 'i' &&
        (pos_ + 1 >= src_.size() || !(is_alpha(src_[pos_ + 1]) || is_digit(src_[pos_ + 1])))) {
      imaginary = true;
      integer = false;
      ++pos_;
    }
    Token t{Tok::number, start, src_.substr(start, pos_ - start)};
    t.value = value;
    t.imaginary = imaginary;
    t.integer = integer;
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::end) return "end of input";
  return "'" + std::string(t.text) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) { advance(); }

  Expr parse_all() {
    Expr e = expression();
    if (cur_.kind != Tok::end) fail({"+", "-", "*", "/", "^", "end of input"});
    return e;
  }

  // Parses one list item; stops at ',' or end.
  Expr parse_item() { return expression(); }

  Tok peek() const { return cur_.kind; }
  void skip_comma() {
    if (cur_.kind != Tok::comma) fail({",", "end of input"});
    advance();
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "syntax error at offset " + std::to_string(cur_.offset) + ": unexpected " +
                      describe(cur_) + ", expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) msg += ", ";
      msg += expected[i];
    }
    msg += "}";
    throw ParseError(cur_.offset, std::move(expected), msg);
  }

  Expr expression() {
    Expr lhs = term();
    while (cur_.kind == Tok::plus || cur_.kind == Tok::minus) {
      const BinaryOp op = cur_.kind == Tok::plus ? BinaryOp::add : BinaryOp::subtract;
      advance();
      lhs = Expr::binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (cur_.kind == Tok::star || cur_.kind == Tok::slash) {
      const BinaryOp op = cur_.kind == Tok::star ? BinaryOp::multiply : BinaryOp::divide;
      advance();
      lhs = Expr::binary(op, std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    if (cur_.kind == Tok::minus) {
      advance();
      return Expr::negate(factor());
    }
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (cur_.kind != Tok::caret) return base;
    advance();
    if (cur_.kind != Tok::number || !cur_.integer) fail({"nonnegative integer"});
    int exponent = 0;
    const auto res =
        std::from_chars(cur_.text.data(), cur_.text.data() + cur_.text.size(), exponent);
    if (res.ec != std::errc{} || exponent > 1'000'000) fail({"integer exponent <= 1000000"});
    advance();
    return Expr::power(std::move(base), exponent);
  }

  Expr atom() {
    switch (cur_.kind) {
      case Tok::number: {
        Expr e = Expr::number(cur_.value, cur_.imaginary);
        advance();
        return e;
      }
      case Tok::lparen: {
        advance();
        Expr e = expression();
        if (cur_.kind != Tok::rparen) fail({")", "+", "-", "*", "/", "^"});
        advance();
        return e;
      }
      case Tok::ident: return identifier();
      default: fail({"number", "z", "function", "(", "-"});
    }
  }

  Expr identifier() {
    const Token id = cur_;
    if (id.text == "z") {
      advance();
      return Expr::variable();
    }
    if (id.text == "i") {
      advance();
      return Expr::number(1.0, true);
    }
    static constexpr Function fns[] = {Function::sin,  Function::cos, Function::tan,
                                       Function::exp,  Function::sinh, Function::cosh};
    for (Function fn : fns) {
      if (id.text == function_name(fn)) {
        advance();
        if (cur_.kind != Tok::lparen) fail({"("});
        advance();
        Expr arg = expression();
        if (cur_.kind != Tok::rparen) fail({")", "+", "-", "*", "/", "^"});
        advance();
        return Expr::call(fn, std::move(arg));
      }
    }
    throw UnknownIdentifierError(id.offset, std::string(id.text));
  }

  Lexer lexer_;
  Token cur_{Tok::end, 0, {}};
};

}  // namespace

Expr parse(std::string_view source) { return Parser(source).parse_all(); }

std::vector<complex> parse_point_list(std::string_view source) {
  std::vector<complex> points;
  Parser parser(source);
  if (parser.peek() == Tok::end) return points;
  for (;;) {
    const Expr item = parser.parse_item();
    if (!item.is_constant()) {
      throw DomainError("point list entries must be constants, got '" + item.to_string() + "'");
    }
    points.push_back(item.eval(complex{}));
    if (parser.peek() == Tok::end) break;
    parser.skip_comma();
  }
  return points;
}

}  // namespace apv
