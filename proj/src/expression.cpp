#include "fracstab/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace fracstab {

struct Expression::Node {
  enum class Op { Const, VarT, VarY, VarYd, Add, Sub, Mul, Neg, Sin, Cos, Tanh };
  Op op;
  double value = 0.0;
  std::shared_ptr<const Node> lhs, rhs;

  double eval(double t, double y, double yd) const {
    switch (op) {
      case Op::Const: return value;
      case Op::VarT: return t;
      case Op::VarY: return y;
      case Op::VarYd: return yd;
      case Op::Add: return lhs->eval(t, y, yd) + rhs->eval(t, y, yd);
      case Op::Sub: return lhs->eval(t, y, yd) - rhs->eval(t, y, yd);
      case Op::Mul: return lhs->eval(t, y, yd) * rhs->eval(t, y, yd);
      case Op::Neg: return -lhs->eval(t, y, yd);
      case Op::Sin: return std::sin(lhs->eval(t, y, yd));
      case Op::Cos: return std::cos(lhs->eval(t, y, yd));
      case Op::Tanh: return std::tanh(lhs->eval(t, y, yd));
    }
    return 0.0;
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expression::Node>;
using Op = Expression::Node::Op;

NodePtr make_node(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr,
                  double value = 0.0) {
  auto n = std::make_shared<Expression::Node>();
  n->op = op;
  n->value = value;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class Parser {
 public:
  Parser(const std::string& text, bool& uses_y, bool& uses_yd)
      : text_(text), uses_y_(uses_y), uses_yd_(uses_yd) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream msg;
    msg << "expression error at position " << pos_ << ": " << what << " in '"
        << text_ << "'";
    throw std::invalid_argument(msg.str());
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (consume('+')) lhs = make_node(Op::Add, lhs, term());
      else if (consume('-')) lhs = make_node(Op::Sub, lhs, term());
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (;;) {
      if (consume('*')) lhs = make_node(Op::Mul, lhs, factor());
      else if (peek() == '/') fail("division is not supported");
      else return lhs;
    }
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr factor() {
    skip_ws();
    if (consume('-')) return make_node(Op::Neg, factor());
    if (consume('(')) {
      NodePtr inner = expr();
      if (!consume(')')) fail("expected ')'");
      return inner;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail(std::string("unexpected token '") + c + "'");
  }

  NodePtr number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return make_node(Op::Const, nullptr, nullptr, v);
  }

  NodePtr identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "t") return make_node(Op::VarT);
    if (name == "y") { uses_y_ = true; return make_node(Op::VarY); }
    if (name == "yd") { uses_yd_ = true; return make_node(Op::VarYd); }
    if (name == "sin" || name == "cos" || name == "tanh") {
      if (!consume('(')) fail("expected '(' after function name");
      NodePtr arg = expr();
      if (!consume(')')) fail("expected ')'");
      if (name == "sin") return make_node(Op::Sin, arg);
      if (name == "cos") return make_node(Op::Cos, arg);
      return make_node(Op::Tanh, arg);
    }
    fail("unknown identifier '" + name + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  bool& uses_y_;
  bool& uses_yd_;
};

}  // namespace

Expression Expression::parse(const std::string& text) {
  Expression e;
  e.text_ = text;
  Parser parser(text, e.uses_y_, e.uses_yd_);
  e.root_ = parser.run();
  return e;
}

double Expression::eval(double t, double y, double yd) const {
  return root_->eval(t, y, yd);
}

double Expression::eval_t(double t) const {
  if (uses_state())
    throw std::invalid_argument("expression must depend on t only: '" + text_ +
                                "'");
  return root_->eval(t, 0.0, 0.0);
}

}  // namespace fracstab
